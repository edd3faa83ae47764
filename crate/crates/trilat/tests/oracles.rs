//! Recomputes the triangle centers by independent textbook constructions —
//! perpendicular bisectors for the circumcenter, altitudes for the
//! orthocenter — and checks the library against them exhaustively over a
//! coordinate box, plus on translated fixtures.

use trilat::{classify, LatticePoint, Rational, RationalPoint, Triangle};

/// Solves `a1·x + b1·y = c1`, `a2·x + b2·y = c2` by Cramer's rule.
/// Returns `None` when the determinant vanishes.
fn solve2(
    a1: Rational,
    b1: Rational,
    c1: Rational,
    a2: Rational,
    b2: Rational,
    c2: Rational,
) -> Option<RationalPoint> {
    let det = a1 * b2 - a2 * b1;
    let x = (c1 * b2 - c2 * b1).checked_div(det).ok()?;
    let y = (a1 * c2 - a2 * c1).checked_div(det).ok()?;
    Some(RationalPoint::new(x, y))
}

fn norm_squared(p: LatticePoint) -> Rational {
    Rational::from(p.x * p.x + p.y * p.y)
}

/// Perpendicular bisector of segment PQ as a linear equation:
/// points X with |X−P|² = |X−Q|², i.e. 2(Q−P)·X = |Q|² − |P|².
fn bisector(p: LatticePoint, q: LatticePoint) -> (Rational, Rational, Rational) {
    let d = q - p;
    let two = Rational::from_int(2);
    (
        two * Rational::from(d.x),
        two * Rational::from(d.y),
        norm_squared(q) - norm_squared(p),
    )
}

/// The circumcenter as the intersection of two perpendicular bisectors.
fn circumcenter_by_bisectors(t: &Triangle) -> RationalPoint {
    let (a1, b1, c1) = bisector(t.v1(), t.v2());
    let (a2, b2, c2) = bisector(t.v1(), t.v3());
    solve2(a1, b1, c1, a2, b2, c2).expect("bisectors of a triangle intersect")
}

/// Altitude through `apex`, perpendicular to the opposite side PQ:
/// (Q−P)·X = (Q−P)·apex.
fn altitude(apex: LatticePoint, p: LatticePoint, q: LatticePoint) -> (Rational, Rational, Rational) {
    let d = q - p;
    (
        Rational::from(d.x),
        Rational::from(d.y),
        Rational::from(d.x * apex.x + d.y * apex.y),
    )
}

/// The orthocenter as the intersection of two altitudes.
fn orthocenter_by_altitudes(t: &Triangle) -> RationalPoint {
    let (a1, b1, c1) = altitude(t.v1(), t.v2(), t.v3());
    let (a2, b2, c2) = altitude(t.v2(), t.v1(), t.v3());
    solve2(a1, b1, c1, a2, b2, c2).expect("altitudes of a triangle intersect")
}

fn rational_cross(o: RationalPoint, p: RationalPoint, q: RationalPoint) -> Rational {
    let u = p - o;
    let v = q - o;
    u.x * v.y - u.y * v.x
}

/// Full center check of one triangle against the oracles.
fn check(t: &Triangle) {
    let f = t.circumcenter();
    assert_eq!(f, circumcenter_by_bisectors(t), "{t}");

    let h = t.orthocenter();
    assert_eq!(h, orthocenter_by_altitudes(t), "{t}");

    // Equidistance from all three vertices, and agreement with the reported
    // squared radius.
    let r2 = t.circumradius_squared();
    for v in t.vertices() {
        assert_eq!(f.dist_squared(RationalPoint::from_lattice(v)), r2, "{t}");
    }

    // The three centers are collinear (the degenerate all-equal case cannot
    // occur: it needs an equilateral triangle, which no lattice triangle is).
    let g = t.centroid();
    assert_eq!(rational_cross(f, g, h), Rational::ZERO, "{t}");

    // Lattice-ness of the exact centers matches the classifier bits.
    let cv = classify(t);
    assert_eq!(cv.f_lattice, f.is_lattice(), "{t}");
    assert_eq!(cv.h_lattice, h.is_lattice(), "{t}");
    assert_eq!(cv.g_lattice, g.is_lattice(), "{t}");
}

#[test]
fn centers_match_oracles_on_a_box() {
    let b: i128 = 6;
    let mut checked = 0u64;
    for x1 in -b..=b {
        for y1 in -b..=b {
            for x2 in -b..=b {
                for y2 in -b..=b {
                    if x1 * y2 - y1 * x2 == 0 {
                        continue;
                    }
                    let t = Triangle::from_coords([0, 0, x1, y1, x2, y2]).unwrap();
                    check(&t);
                    checked += 1;
                }
            }
        }
    }
    // Every ordered pair except the degenerate ones shows up.
    assert!(checked > 25_000, "only {checked} triangles checked");
}

#[test]
fn centers_match_oracles_on_translated_fixtures() {
    let fixtures: [[i128; 6]; 5] = [
        [0, 0, 2, 0, 2, 3],
        [0, 0, 12, 0, 12, 18],
        [0, 0, 4, 2, 1, 5],
        [0, 0, 19, 17, 11, 23],
        [0, 0, 6, 0, 8, 4],
    ];
    let offsets: [(i128, i128); 4] = [(0, 0), (1, -7), (-23, 41), (1000, -999)];
    for c in fixtures {
        for (dx, dy) in offsets {
            let t = Triangle::from_coords([
                c[0] + dx,
                c[1] + dy,
                c[2] + dx,
                c[3] + dy,
                c[4] + dx,
                c[5] + dy,
            ])
            .unwrap();
            check(&t);
        }
    }
}

#[test]
fn orthocenter_satisfies_the_center_relation() {
    // H = 3G − 2F, with both sides computed by independent constructions.
    for coords in [
        [0, 0, 2, 0, 2, 3],
        [0, 0, 6, 0, 8, 4],
        [3, -2, 9, 1, -4, 5],
        [0, 0, 19, 17, 11, 23],
    ] {
        let t = Triangle::from_coords(coords).unwrap();
        let f = circumcenter_by_bisectors(&t);
        let g = t.centroid();
        let h = orthocenter_by_altitudes(&t);
        let three = Rational::from_int(3);
        let two = Rational::from_int(2);
        assert_eq!(h.x, three * g.x - two * f.x);
        assert_eq!(h.y, three * g.y - two * f.y);
    }
}
