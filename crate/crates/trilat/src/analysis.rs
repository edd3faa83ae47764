//! Bounded verification of condition implications and exhaustive mining of
//! the full antecedent/consequent table.
//!
//! Both drivers scan every enumerated triangle once. Counterexamples and
//! witnesses are always reported as canonical forms and, among all
//! candidates, the one minimizing `(max coordinate magnitude, lexicographic
//! coordinate tuple)` of that canonical form wins. Minimum-combining is
//! associative and commutative, so results are byte-identical no matter how
//! the enumeration is chunked, threaded, or deduplicated.

use alloc::vec::Vec;
use core::time::Duration;

use crate::conditions::{classify, primitive_gcd, Condition, ConditionVector};
use crate::enumerate::{canonical_form, EnumSpec};
use crate::{Error, Int, Triangle};

/// A proved implication between conditions, re-checked exhaustively.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Claim {
    /// Lattice circumcenter and centroid force the side gcd to be a
    /// multiple of 3.
    FgGcd3,
    /// A lattice circumcenter forces even side coordinate sums.
    FEvenSums,
    /// A lattice circumcenter forces integer area.
    FIntegerArea,
    /// A lattice orthocenter with integer circumradius forces a lattice
    /// circumcenter.
    HrLatticeF,
    /// A lattice circumcenter forces a lattice orthocenter.
    FLatticeH,
}

impl Claim {
    /// All claims, in reporting order.
    pub const ALL: [Claim; 5] = [
        Claim::FgGcd3,
        Claim::FEvenSums,
        Claim::FIntegerArea,
        Claim::HrLatticeF,
        Claim::FLatticeH,
    ];

    /// Short identifier used in structured output.
    pub fn name(self) -> &'static str {
        match self {
            Claim::FgGcd3 => "fg_gcd3",
            Claim::FEvenSums => "f_even_sums",
            Claim::FIntegerArea => "f_integer_area",
            Claim::HrLatticeF => "hr_f",
            Claim::FLatticeH => "f_h",
        }
    }

    /// Human-readable statement of the claim.
    pub fn description(self) -> &'static str {
        match self {
            Claim::FgGcd3 => {
                "lattice circumcenter and centroid force the side gcd to be a multiple of 3"
            }
            Claim::FEvenSums => "lattice circumcenter forces even side coordinate sums",
            Claim::FIntegerArea => "lattice circumcenter forces integer area",
            Claim::HrLatticeF => {
                "lattice orthocenter and integer circumradius force a lattice circumcenter"
            }
            Claim::FLatticeH => "lattice circumcenter forces a lattice orthocenter",
        }
    }

    /// Whether the claim's antecedent holds for a classified triangle.
    pub fn antecedent_holds(self, cv: &ConditionVector) -> bool {
        match self {
            Claim::FgGcd3 => cv.f_lattice && cv.g_lattice,
            Claim::FEvenSums | Claim::FIntegerArea | Claim::FLatticeH => cv.f_lattice,
            Claim::HrLatticeF => cv.h_lattice && cv.circumradius_integer,
        }
    }

    /// Whether the claim's consequent holds for a classified triangle.
    pub fn consequent_holds(self, cv: &ConditionVector, t: &Triangle) -> bool {
        match self {
            Claim::FgGcd3 => Int::new(3).divides(primitive_gcd(t)),
            Claim::FEvenSums => cv.even_side_sums,
            Claim::FIntegerArea => cv.area_integer,
            Claim::HrLatticeF => cv.f_lattice,
            Claim::FLatticeH => cv.h_lattice,
        }
    }
}

/// Outcome of checking one claim against every triangle up to a bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    /// The claim that was checked.
    pub claim: Claim,
    /// The coordinate bound of the scan.
    pub bound: u32,
    /// Number of triangles scanned.
    pub triangles_checked: u64,
    /// Number of triangles satisfying the antecedent.
    pub antecedent_count: u64,
    /// Minimal violating triangle, if any (in canonical form).
    pub counterexample: Option<Triangle>,
    /// Wall-clock time, stamped by the caller; zero when untimed.
    pub elapsed: Duration,
}

impl VerificationReport {
    /// True when no counterexample was found.
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Deterministic witness order: maximal coordinate magnitude first, then the
/// coordinate tuple lexicographically, both taken on the canonical form.
fn witness_key(canonical: &Triangle) -> (i128, [i128; 4]) {
    let (a, b) = canonical.side_vectors();
    let tuple = [a.x.raw(), a.y.raw(), b.x.raw(), b.y.raw()];
    let max_abs = tuple.iter().map(|v| v.abs()).max().expect("nonempty");
    (max_abs, tuple)
}

/// Cheap lower bound for the `max_abs` part of [`witness_key`] without
/// computing the canonical form: any representation keeps two of the three
/// side vectors (up to coordinate permutation and sign), so its largest
/// coordinate is at least the second largest of the three side norms.
fn key_lower_bound(t: &Triangle) -> i128 {
    let (a, b) = t.side_vectors();
    let c = a - b;
    let mut n = [
        a.max_abs().raw(),
        b.max_abs().raw(),
        c.max_abs().raw(),
    ];
    n.sort_unstable();
    n[1]
}

/// Running minimum over canonical witnesses.
#[derive(Clone, Copy, Default)]
struct MinWitness {
    cur: Option<Triangle>,
}

impl MinWitness {
    /// Offers an enumerated (not yet canonical) triangle.
    fn offer(&mut self, t: &Triangle) {
        if let Some(cur) = self.cur {
            if witness_key(&cur).0 < key_lower_bound(t) {
                return;
            }
            let cand = canonical_form(t);
            if witness_key(&cand) < witness_key(&cur) {
                self.cur = Some(cand);
            }
        } else {
            self.cur = Some(canonical_form(t));
        }
    }

    /// Merges another running minimum (both already canonical).
    fn merge(&mut self, other: MinWitness) {
        if let Some(o) = other.cur {
            match self.cur {
                None => self.cur = Some(o),
                Some(c) => {
                    if witness_key(&o) < witness_key(&c) {
                        self.cur = Some(o);
                    }
                }
            }
        }
    }
}

/// Streaming checker for one claim. Feed it classified triangles, merge
/// partial checkers from enumeration chunks in any order, then finish.
#[derive(Clone, Copy)]
pub struct ClaimVerifier {
    claim: Claim,
    checked: u64,
    antecedent: u64,
    violation: MinWitness,
}

impl ClaimVerifier {
    /// A fresh checker for `claim`.
    pub fn new(claim: Claim) -> ClaimVerifier {
        ClaimVerifier {
            claim,
            checked: 0,
            antecedent: 0,
            violation: MinWitness::default(),
        }
    }

    /// Accounts one triangle with its condition vector.
    pub fn observe(&mut self, t: &Triangle, cv: &ConditionVector) {
        self.checked += 1;
        if !self.claim.antecedent_holds(cv) {
            return;
        }
        self.antecedent += 1;
        if !self.claim.consequent_holds(cv, t) {
            self.violation.offer(t);
        }
    }

    /// Combines two partial checkers of the same claim.
    pub fn merge(mut self, other: ClaimVerifier) -> ClaimVerifier {
        assert!(self.claim == other.claim, "cannot merge different claims");
        self.checked += other.checked;
        self.antecedent += other.antecedent;
        self.violation.merge(other.violation);
        self
    }

    /// Produces the report; `elapsed` is left at zero for the caller.
    pub fn finish(self, bound: u32) -> VerificationReport {
        VerificationReport {
            claim: self.claim,
            bound,
            triangles_checked: self.checked,
            antecedent_count: self.antecedent,
            counterexample: self.violation.cur,
            elapsed: Duration::ZERO,
        }
    }
}

/// Checks one claim against every triangle up to `bound`.
pub fn verify_claim(claim: Claim, bound: u32) -> VerificationReport {
    let mut v = ClaimVerifier::new(claim);
    for t in EnumSpec::new(bound).iter() {
        let cv = classify(&t);
        v.observe(&t, &cv);
    }
    v.finish(bound)
}

/// Checks all five claims in a single enumeration pass.
pub fn verify_all(bound: u32) -> Vec<VerificationReport> {
    let mut vs: Vec<ClaimVerifier> = Claim::ALL.into_iter().map(ClaimVerifier::new).collect();
    for t in EnumSpec::new(bound).iter() {
        let cv = classify(&t);
        for v in &mut vs {
            v.observe(&t, &cv);
        }
    }
    vs.into_iter().map(|v| v.finish(bound)).collect()
}

/// Status of one antecedent/consequent cell after an exhaustive scan.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ImplicationStatus {
    /// A triangle satisfies the antecedent but not the consequent.
    Refuted,
    /// Every antecedent-satisfying triangle satisfies the consequent, and at
    /// least one triangle satisfies the antecedent.
    HoldsUpToBound,
    /// No triangle within the bound satisfies the antecedent.
    VacuousUpToBound,
}

impl ImplicationStatus {
    /// Identifier used in structured output.
    pub fn name(self) -> &'static str {
        match self {
            ImplicationStatus::Refuted => "refuted",
            ImplicationStatus::HoldsUpToBound => "holds_up_to_bound",
            ImplicationStatus::VacuousUpToBound => "vacuous_up_to_bound",
        }
    }
}

/// One cell of the implication table: does the conjunction of the antecedent
/// conditions imply the consequent?
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ImplicationEntry {
    /// Bitmask of the antecedent conditions.
    pub antecedent: u8,
    /// The consequent condition (never part of the antecedent).
    pub consequent: Condition,
    /// What the scan established.
    pub status: ImplicationStatus,
    /// Number of triangles satisfying the antecedent.
    pub antecedent_count: u64,
    /// Minimal refuting triangle in canonical form, for refuted cells.
    pub witness: Option<Triangle>,
}

/// The full table: every subset of the six conditions as antecedent, every
/// condition outside the subset as consequent — 192 cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ImplicationTable {
    bound: u32,
    entries: Vec<ImplicationEntry>,
}

impl ImplicationTable {
    /// The coordinate bound of the scan.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// All cells, ordered by antecedent mask, then consequent.
    pub fn entries(&self) -> &[ImplicationEntry] {
        &self.entries
    }

    /// The cell for one antecedent mask and consequent, if the consequent is
    /// not part of the mask.
    pub fn get(&self, antecedent: u8, consequent: Condition) -> Option<&ImplicationEntry> {
        self.entries
            .iter()
            .find(|e| e.antecedent == antecedent && e.consequent == consequent)
    }

    /// Checks that every refuted cell carries a witness that re-classifies
    /// to a vector satisfying the antecedent and violating the consequent,
    /// and that statuses are consistent with the counts.
    pub fn self_check(&self) -> Result<(), &'static str> {
        if self.entries.len() != 192 {
            return Err("table must have 192 cells");
        }
        for e in &self.entries {
            if e.antecedent & e.consequent.bit() != 0 {
                return Err("consequent overlaps antecedent");
            }
            if e.status == ImplicationStatus::Refuted
                && proved_by_known_claims(e.antecedent, e.consequent)
            {
                return Err("claimed refutation of a proved implication");
            }
            match e.status {
                ImplicationStatus::Refuted => {
                    let Some(w) = e.witness else {
                        return Err("refuted cell without witness");
                    };
                    let cv = classify(&w);
                    if !cv.satisfies_mask(e.antecedent) || cv.get(e.consequent) {
                        return Err("witness does not refute its cell");
                    }
                    if e.antecedent_count == 0 {
                        return Err("refuted cell with zero antecedent count");
                    }
                }
                ImplicationStatus::HoldsUpToBound => {
                    if e.witness.is_some() || e.antecedent_count == 0 {
                        return Err("inconsistent holding cell");
                    }
                }
                ImplicationStatus::VacuousUpToBound => {
                    if e.witness.is_some() || e.antecedent_count != 0 {
                        return Err("inconsistent vacuous cell");
                    }
                }
            }
        }
        Ok(())
    }
}

/// Streaming miner for the implication table. Bucket triangles by their full
/// condition mask; the 192 cells fall out of the 64 buckets at the end.
#[derive(Clone)]
pub struct ImplicationMiner {
    histogram: [u64; 64],
    minimal: [MinWitness; 64],
}

impl ImplicationMiner {
    /// A fresh miner.
    pub fn new() -> ImplicationMiner {
        ImplicationMiner {
            histogram: [0; 64],
            minimal: [MinWitness::default(); 64],
        }
    }

    /// Accounts one triangle.
    pub fn observe(&mut self, t: &Triangle) {
        let mask = classify(t).mask() as usize;
        self.histogram[mask] += 1;
        self.minimal[mask].offer(t);
    }

    /// Combines a partial miner from another enumeration chunk.
    pub fn merge(mut self, other: ImplicationMiner) -> ImplicationMiner {
        for i in 0..64 {
            self.histogram[i] += other.histogram[i];
            self.minimal[i].merge(other.minimal[i]);
        }
        self
    }

    /// Builds the 192-cell table.
    pub fn finish(self, bound: u32) -> ImplicationTable {
        let mut entries = Vec::with_capacity(192);
        for antecedent in 0u8..64 {
            let count: u64 = (0usize..64)
                .filter(|v| *v as u8 & antecedent == antecedent)
                .map(|v| self.histogram[v])
                .sum();
            for consequent in Condition::ALL {
                if antecedent & consequent.bit() != 0 {
                    continue;
                }
                let mut refutation = MinWitness::default();
                for v in 0usize..64 {
                    let vm = v as u8;
                    if vm & antecedent == antecedent
                        && vm & consequent.bit() == 0
                        && self.histogram[v] > 0
                    {
                        refutation.merge(self.minimal[v]);
                    }
                }
                let (status, witness) = match (count, refutation.cur) {
                    (0, _) => (ImplicationStatus::VacuousUpToBound, None),
                    (_, Some(w)) => (ImplicationStatus::Refuted, Some(w)),
                    (_, None) => (ImplicationStatus::HoldsUpToBound, None),
                };
                entries.push(ImplicationEntry {
                    antecedent,
                    consequent,
                    status,
                    antecedent_count: count,
                    witness,
                });
            }
        }
        ImplicationTable { bound, entries }
    }
}

impl Default for ImplicationMiner {
    fn default() -> ImplicationMiner {
        ImplicationMiner::new()
    }
}

/// Whether `antecedent ⇒ consequent` is a consequence of the five verified
/// claims, independent of any bound. Computed as the closure of the
/// antecedent mask under the four condition-to-condition rules (the side-gcd
/// claim concludes nothing about the six conditions, so it adds no rule).
///
/// Cells marked this way can never be refuted by a scan; a scan that refutes
/// one has found an implementation bug, not a counterexample.
pub fn proved_by_known_claims(antecedent: u8, consequent: Condition) -> bool {
    let f = Condition::FLattice.bit();
    let hr = Condition::HLattice.bit() | Condition::CircumradiusInteger.bit();
    let f_gives =
        Condition::HLattice.bit() | Condition::AreaInteger.bit() | Condition::EvenSideSums.bit();
    let mut closure = antecedent;
    loop {
        let mut grown = closure;
        if grown & f != 0 {
            grown |= f_gives;
        }
        if grown & hr == hr {
            grown |= f;
        }
        if grown == closure {
            break;
        }
        closure = grown;
    }
    closure & consequent.bit() != 0
}

/// Mines the full implication table over every triangle up to `bound`.
pub fn mine_implications(bound: u32) -> ImplicationTable {
    let mut miner = ImplicationMiner::new();
    for t in EnumSpec::new(bound).iter() {
        miner.observe(&t);
    }
    miner.finish(bound)
}

/// Canonical representatives (one per congruence class) of the triangles up
/// to `bound` whose Euler line exists but passes through no lattice point.
pub fn euler_line_empty_scan(bound: u32) -> Vec<Triangle> {
    EnumSpec::new(bound)
        .dedupe(true)
        .iter()
        .filter(|t| matches!(t.euler_line_lattice_point(), Ok(None)))
        .collect()
}

/// The triangle `(0,0), (2,0), (n,n)`: area `n`, circumcenter `(1, n−1)`.
/// Errors for `n = 0`, which is degenerate.
pub fn family_area_n(n: u32) -> Result<Triangle, Error> {
    Triangle::from_coords([0, 0, 2, 0, n as i128, n as i128])
}
