//! Bounded exhaustive enumeration of lattice triangles.
//!
//! The stream fixes `v3` at the origin and walks `v1`, `v2` over the square
//! `[−B, B]²`, keeping exactly the pairs with positive cross product, so each
//! unordered vertex pair appears in exactly one orientation and degenerate
//! configurations never appear at all. Two optional filters: keep only
//! triangles whose side coordinates have gcd 1, and keep only the first
//! representative of each congruence class (translations, the eight lattice
//! symmetries, relabeling).
//!
//! The `x1` columns of the search are independent, which is the unit of work
//! [`EnumSpec::chunk`] hands to parallel drivers. Deduplication needs global
//! state and is therefore only available on the sequential stream.

use alloc::collections::BTreeSet;

use crate::{Int, LatticePoint, Triangle};

/// What to enumerate: the coordinate bound and the two filters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EnumSpec {
    bound: u32,
    primitive_only: bool,
    dedupe: bool,
}

impl EnumSpec {
    /// Enumeration over `v1, v2 ∈ [−bound, bound]²` with both filters off.
    /// Panics for a zero bound.
    pub fn new(bound: u32) -> EnumSpec {
        assert!(bound >= 1, "enumeration bound must be at least 1");
        EnumSpec {
            bound,
            primitive_only: false,
            dedupe: false,
        }
    }

    /// Keep only triangles whose four side coordinates have gcd 1.
    pub fn primitive_only(mut self, yes: bool) -> EnumSpec {
        self.primitive_only = yes;
        self
    }

    /// Keep only the first triangle seen from each congruence class.
    pub fn dedupe(mut self, yes: bool) -> EnumSpec {
        self.dedupe = yes;
        self
    }

    /// The coordinate bound.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Whether the gcd-1 filter is on.
    pub fn is_primitive_only(&self) -> bool {
        self.primitive_only
    }

    /// Whether congruence-class deduplication is on.
    pub fn is_dedupe(&self) -> bool {
        self.dedupe
    }

    /// Streams every triangle of the spec exactly once.
    pub fn iter(self) -> impl Iterator<Item = Triangle> {
        let b = self.bound as i128;
        let mut seen: Option<BTreeSet<[i128; 4]>> = self.dedupe.then(BTreeSet::new);
        (-b..=b)
            .flat_map(move |x1| column(self.bound, x1, self.primitive_only))
            .filter(move |t| match seen.as_mut() {
                None => true,
                Some(s) => s.insert(canonical_tuple(t)),
            })
    }

    /// Number of independent work chunks (one per `x1` column).
    pub fn chunk_count(&self) -> u32 {
        2 * self.bound + 1
    }

    /// Streams chunk `index` of the enumeration. The union of all chunks is
    /// exactly [`EnumSpec::iter`]. Panics with deduplication on, which cannot
    /// be split, and for an out-of-range index.
    pub fn chunk(&self, index: u32) -> impl Iterator<Item = Triangle> {
        assert!(!self.dedupe, "deduplication cannot be chunked");
        assert!(index < self.chunk_count(), "chunk index out of range");
        let x1 = -(self.bound as i128) + index as i128;
        column(self.bound, x1, self.primitive_only)
    }
}

fn column(bound: u32, x1: i128, primitive_only: bool) -> impl Iterator<Item = Triangle> {
    let b = bound as i128;
    (-b..=b).flat_map(move |y1| {
        (-b..=b).flat_map(move |x2| {
            (-b..=b).filter_map(move |y2| {
                // Positive cross product: one orientation per pair, no
                // degenerate triples, no zero vectors.
                if x1 * y2 - x2 * y1 <= 0 {
                    return None;
                }
                if primitive_only && gcd4(x1, y1, x2, y2) != 1 {
                    return None;
                }
                Some(Triangle::from_origin_pair(
                    LatticePoint::new(x1, y1),
                    LatticePoint::new(x2, y2),
                ))
            })
        })
    })
}

fn gcd4(a: i128, b: i128, c: i128, d: i128) -> u128 {
    fn gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    }
    gcd(
        gcd(a.unsigned_abs(), b.unsigned_abs()),
        gcd(c.unsigned_abs(), d.unsigned_abs()),
    )
}

/// The eight lattice symmetries as row-major 2×2 matrices.
const SYMMETRIES: [[i128; 4]; 8] = [
    [1, 0, 0, 1],
    [0, -1, 1, 0],
    [-1, 0, 0, -1],
    [0, 1, -1, 0],
    [1, 0, 0, -1],
    [-1, 0, 0, 1],
    [0, 1, 1, 0],
    [0, -1, -1, 0],
];

fn apply(m: [i128; 4], v: LatticePoint) -> LatticePoint {
    let m = m.map(Int::new);
    LatticePoint {
        x: m[0] * v.x + m[1] * v.y,
        y: m[2] * v.x + m[3] * v.y,
    }
}

pub(crate) fn canonical_tuple(t: &Triangle) -> [i128; 4] {
    let vs = t.vertices();
    let mut best: Option<[i128; 4]> = None;
    for base in 0..3 {
        let p = vs[base];
        let u = vs[(base + 1) % 3] - p;
        let w = vs[(base + 2) % 3] - p;
        for (a, c) in [(u, w), (w, u)] {
            for m in SYMMETRIES {
                let sa = apply(m, a);
                let sc = apply(m, c);
                if sa.cross(sc).is_negative() {
                    continue;
                }
                let tuple = [sa.x.raw(), sa.y.raw(), sc.x.raw(), sc.y.raw()];
                if best.is_none_or(|cur| tuple < cur) {
                    best = Some(tuple);
                }
            }
        }
    }
    best.expect("a non-degenerate triangle has positively oriented forms")
}

/// The canonical representative of a triangle's congruence class: each vertex
/// is translated to the origin in turn, both labelings of the remaining pair
/// and all eight lattice symmetries are applied, and the lexicographically
/// smallest positively oriented coordinate tuple `(x1, y1, x2, y2)` wins.
/// Congruent triangles — and only those — share their canonical form.
pub fn canonical_form(t: &Triangle) -> Triangle {
    let c = canonical_tuple(t);
    Triangle::from_origin_pair(LatticePoint::new(c[0], c[1]), LatticePoint::new(c[2], c[3]))
}
