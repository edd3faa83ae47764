//! Exact geometry of lattice triangles.
//!
//! Everything in this crate is computed with exact integer and rational
//! arithmetic: the circumcenter, centroid and orthocenter of a triangle with
//! integer vertices, its Euler line, and six integrality conditions those
//! centers may or may not satisfy. On top of that sit a bounded exhaustive
//! enumerator over all lattice triangles in a coordinate box and search
//! drivers that verify condition implications up to a bound or mine the full
//! implication table together with counterexample witnesses.
//!
//! The crate is `no_std` (it needs `alloc` for the search drivers) and has no
//! dependencies. All scalars are overflow-checked 128-bit integers: results
//! are exact or the computation aborts, never silently wrong.

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod analysis;
pub mod conditions;
pub mod enumerate;
pub mod gaussian;
pub mod int;
pub mod line;
pub mod point;
pub mod rational;
pub mod triangle;

mod error;

pub use analysis::{
    euler_line_empty_scan, family_area_n, mine_implications, proved_by_known_claims, verify_all,
    verify_claim, Claim, ClaimVerifier, ImplicationEntry, ImplicationMiner, ImplicationStatus,
    ImplicationTable, VerificationReport,
};
pub use conditions::{classify, primitive_gcd, Condition, ConditionVector};
pub use enumerate::{canonical_form, EnumSpec};
pub use error::Error;
pub use gaussian::{divisible_by_one_plus_i, sigma, split_power_of_two, GaussianInt};
pub use int::{gcd_many, int_sqrt_exact, Int};
pub use line::RationalLine;
pub use point::{LatticePoint, RationalPoint};
pub use rational::Rational;
pub use triangle::Triangle;
