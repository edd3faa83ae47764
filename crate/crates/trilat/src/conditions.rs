//! The six integrality conditions of a lattice triangle.
//!
//! For a triangle with integer vertices these record whether the
//! circumcenter, centroid and orthocenter are lattice points, whether the
//! circumradius and the area are integers, and whether both side vectors
//! have even coordinate sums. All six are invariant under translation,
//! relabeling of the vertices, and the eight lattice symmetries.

use alloc::string::String;

use crate::gaussian::sigma;
use crate::int::int_sqrt_exact;
use crate::{gcd_many, Int, Triangle};

/// One of the six conditions, in the fixed serialization order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Condition {
    /// The circumcenter is a lattice point.
    FLattice,
    /// The centroid is a lattice point.
    GLattice,
    /// The orthocenter is a lattice point.
    HLattice,
    /// The circumradius is an integer.
    CircumradiusInteger,
    /// The area is an integer.
    AreaInteger,
    /// Both side vectors have even coordinate sums.
    EvenSideSums,
}

impl Condition {
    /// All six conditions in serialization order.
    pub const ALL: [Condition; 6] = [
        Condition::FLattice,
        Condition::GLattice,
        Condition::HLattice,
        Condition::CircumradiusInteger,
        Condition::AreaInteger,
        Condition::EvenSideSums,
    ];

    /// Position in the serialization order.
    pub fn index(self) -> usize {
        self as usize
    }

    /// The single-bit mask for this condition.
    pub fn bit(self) -> u8 {
        1 << self.index()
    }

    /// Short name used in flag expressions and compact output.
    pub fn short_name(self) -> &'static str {
        match self {
            Condition::FLattice => "f",
            Condition::GLattice => "g",
            Condition::HLattice => "h",
            Condition::CircumradiusInteger => "r",
            Condition::AreaInteger => "area",
            Condition::EvenSideSums => "even",
        }
    }

    /// Full name used in structured output.
    pub fn long_name(self) -> &'static str {
        match self {
            Condition::FLattice => "f_lattice",
            Condition::GLattice => "g_lattice",
            Condition::HLattice => "h_lattice",
            Condition::CircumradiusInteger => "circumradius_integer",
            Condition::AreaInteger => "area_integer",
            Condition::EvenSideSums => "even_side_sums",
        }
    }

    /// The conditions whose bits are set in `mask`, in order.
    pub fn in_mask(mask: u8) -> impl Iterator<Item = Condition> {
        Condition::ALL.into_iter().filter(move |c| mask & c.bit() != 0)
    }
}

/// The values of all six conditions for one triangle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ConditionVector {
    /// Circumcenter is a lattice point.
    pub f_lattice: bool,
    /// Centroid is a lattice point.
    pub g_lattice: bool,
    /// Orthocenter is a lattice point.
    pub h_lattice: bool,
    /// Circumradius is an integer.
    pub circumradius_integer: bool,
    /// Area is an integer.
    pub area_integer: bool,
    /// Both side vectors have even coordinate sums.
    pub even_side_sums: bool,
}

impl ConditionVector {
    /// The value of one condition.
    pub fn get(&self, c: Condition) -> bool {
        match c {
            Condition::FLattice => self.f_lattice,
            Condition::GLattice => self.g_lattice,
            Condition::HLattice => self.h_lattice,
            Condition::CircumradiusInteger => self.circumradius_integer,
            Condition::AreaInteger => self.area_integer,
            Condition::EvenSideSums => self.even_side_sums,
        }
    }

    /// Bitmask with the bit of every satisfied condition set.
    pub fn mask(&self) -> u8 {
        Condition::ALL
            .into_iter()
            .filter(|c| self.get(*c))
            .fold(0, |m, c| m | c.bit())
    }

    /// Rebuilds a vector from a bitmask.
    pub fn from_mask(mask: u8) -> ConditionVector {
        ConditionVector {
            f_lattice: mask & Condition::FLattice.bit() != 0,
            g_lattice: mask & Condition::GLattice.bit() != 0,
            h_lattice: mask & Condition::HLattice.bit() != 0,
            circumradius_integer: mask & Condition::CircumradiusInteger.bit() != 0,
            area_integer: mask & Condition::AreaInteger.bit() != 0,
            even_side_sums: mask & Condition::EvenSideSums.bit() != 0,
        }
    }

    /// True when every condition in `mask` is satisfied.
    pub fn satisfies_mask(&self, mask: u8) -> bool {
        self.mask() & mask == mask
    }

    /// The six flags as `'0'`/`'1'` characters in serialization order,
    /// e.g. `"101111"`.
    pub fn bitstring(&self) -> String {
        Condition::ALL
            .into_iter()
            .map(|c| if self.get(c) { '1' } else { '0' })
            .collect()
    }
}

/// Evaluates all six conditions for a triangle.
///
/// This runs on the common-denominator forms of the centers and tests
/// divisibility directly, which decides exactly the same predicates as
/// checking integrality of [`Triangle::circumcenter`] and friends but stays
/// allocation- and gcd-free for the enumeration hot path.
pub fn classify(t: &Triangle) -> ConditionVector {
    let (a, b) = t.side_vectors();
    let cross = a.cross(b);
    let na = a.x * a.x + a.y * a.y;
    let nb = b.x * b.x + b.y * b.y;
    let nx = nb * a.x - na * b.x;
    let ny = nb * a.y - na * b.y;
    let c2 = cross + cross;
    // F = v3 + (−ny, nx)/(2·cross) and H = v3 + (a + b) − (−ny, nx)/cross,
    // so the two lattice conditions are divisibility of (nx, ny) by 2·cross
    // respectively cross.
    let f_lattice = c2.divides(nx) && c2.divides(ny);
    let h_lattice = cross.divides(nx) && cross.divides(ny);
    // G = v3 + (a + b)/3.
    let s = a + b;
    let three = Int::new(3);
    let g_lattice = three.divides(s.x) && three.divides(s.y);
    // R² = (nx² + ny²)/(2·cross)², an integer exactly when the denominator
    // divides; the radius itself is an integer when that quotient is a
    // perfect square.
    let rr_num = nx * nx + ny * ny;
    let rr_den = c2 * c2;
    let circumradius_integer = rr_den.divides(rr_num)
        && int_sqrt_exact(rr_num.div_exact(rr_den))
            .expect("sum of squares is nonnegative")
            .is_some();
    let area_integer = cross.is_even();
    let even_side_sums = sigma(a.x, a.y) == 0 && sigma(b.x, b.y) == 0;
    ConditionVector {
        f_lattice,
        g_lattice,
        h_lattice,
        circumradius_integer,
        area_integer,
        even_side_sums,
    }
}

/// Gcd of the four coordinates of the two side vectors based at `v3`.
/// Positive for every non-degenerate triangle.
pub fn primitive_gcd(t: &Triangle) -> Int {
    let (a, b) = t.side_vectors();
    gcd_many(&[a.x, a.y, b.x, b.y])
}
