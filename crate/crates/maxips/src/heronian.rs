//! Heronian triangles (integer sides, integer area) and their embeddings
//! into the integer grid.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{integer_roots, Roots};
use crate::canon;
use crate::exactmath::{is_perfect_square, perfect_square_root, sum_of_two_squares};
use crate::geometry::{collinear, dist2, heron_product, GridPoint};
use crate::{Error, Int, Result};

/// A Heronian triangle with sides a >= b >= c.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeronTriangle {
    a: Int,
    b: Int,
    c: Int,
}

impl HeronTriangle {
    /// Validates the strict triangle inequality, the ordering a >= b >= c
    /// and integrality of the area (Heron product a perfect square whose
    /// root is divisible by 4).
    pub fn new(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>) -> Result<Self> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        if !c.is_positive() || a < b || b < c {
            return Err(Error::domain(format!("sides not ordered a >= b >= c >= 1: {a},{b},{c}")));
        }
        if &b + &c <= a {
            return Err(Error::domain(format!("degenerate triangle {a},{b},{c}")));
        }
        let p = heron_product(&a, &b, &c);
        match perfect_square_root(&p) {
            Some(s) if (&s % Int::from(4)).is_zero() => Ok(HeronTriangle { a, b, c }),
            _ => Err(Error::domain(format!("non-integral area for sides {a},{b},{c}"))),
        }
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn c(&self) -> &Int {
        &self.c
    }

    pub fn sides(&self) -> [&Int; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// The integer area, Heron's formula with the root taken exactly.
    pub fn area(&self) -> Int {
        let s = perfect_square_root(&heron_product(&self.a, &self.b, &self.c))
            .expect("validated on construction");
        s / Int::from(4)
    }
}

impl std::fmt::Display for HeronTriangle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// All Heronian triangles with maximum side exactly d, up to isomorphism:
/// b runs over [(d+2)/2, d] and c over [d+1-b, b].
pub fn heronian_triangles(d: &Int) -> Result<Vec<HeronTriangle>> {
    if !d.is_positive() {
        return Err(Error::domain(format!("diameter must be >= 1, got {d}")));
    }
    if let Some(du) = d.to_u64() {
        return Ok(heronian_triangles_u64(du));
    }
    // Sides beyond u64 are far outside anything enumerable; keep the exact
    // loop anyway for completeness.
    let a = d.clone();
    let mut out = Vec::new();
    let mut b = (&a + Int::from(2)) / Int::from(2);
    while b <= a {
        let mut c = &a + Int::from(1) - &b;
        while c <= b {
            let p = heron_product(&a, &b, &c);
            if let Some(s) = perfect_square_root(&p) {
                if (&s % Int::from(4)).is_zero() {
                    out.push(HeronTriangle { a: a.clone(), b: b.clone(), c: c.clone() });
                }
            }
            c += 1;
        }
        b += 1;
    }
    Ok(out)
}

fn heronian_triangles_u64(a: u64) -> Vec<HeronTriangle> {
    let mut out = Vec::new();
    for b in (a + 2) / 2..=a {
        for c in a + 1 - b..=b {
            let p = (a + b + c) as u128
                * (a + b - c) as u128
                * (a + c - b) as u128
                * (b + c - a) as u128;
            let s = u128_isqrt(p);
            if s * s == p && s % 4 == 0 {
                out.push(HeronTriangle { a: Int::from(a), b: Int::from(b), c: Int::from(c) });
            }
        }
    }
    out
}

fn u128_isqrt(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128 + 1;
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while x * x > n {
        x -= 1;
    }
    x
}

/// True iff the triangle is right-angled (a^2 = b^2 + c^2).
pub fn is_right_triangle(t: &HeronTriangle) -> bool {
    t.a() * t.a() == t.b() * t.b() + t.c() * t.c()
}

/// Three non-collinear grid points at pairwise integral distances.
/// Outputs of [`embeddings`] always place B at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedTriangle {
    a: GridPoint,
    b: GridPoint,
    c: GridPoint,
}

impl EmbeddedTriangle {
    pub fn new(a: GridPoint, b: GridPoint, c: GridPoint) -> Result<Self> {
        if collinear(&a, &b, &c) {
            return Err(Error::domain(format!("collinear triangle {a} {b} {c}")));
        }
        for (p, q) in [(&a, &b), (&b, &c), (&a, &c)] {
            if !is_perfect_square(&dist2(p, q)) {
                return Err(Error::domain(format!("non-integral side {p}-{q}")));
            }
        }
        Ok(EmbeddedTriangle { a, b, c })
    }

    pub fn a(&self) -> &GridPoint {
        &self.a
    }

    pub fn b(&self) -> &GridPoint {
        &self.b
    }

    pub fn c(&self) -> &GridPoint {
        &self.c
    }

    pub fn points(&self) -> [&GridPoint; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn point_set(&self) -> crate::geometry::PointSet {
        crate::geometry::PointSet::new(vec![self.a.clone(), self.b.clone(), self.c.clone()])
            .expect("triangle points are distinct")
    }

    /// The sorted side multiset [max, mid, min].
    pub fn side_lengths(&self) -> [Int; 3] {
        let mut sides: Vec<Int> = [(&self.a, &self.b), (&self.b, &self.c), (&self.a, &self.c)]
            .iter()
            .map(|(p, q)| {
                perfect_square_root(&dist2(p, q)).expect("validated on construction")
            })
            .collect();
        sides.sort();
        sides.reverse();
        [sides[0].clone(), sides[1].clone(), sides[2].clone()]
    }
}

/// All grid embeddings of the triangle with B at the origin: C runs over the
/// lattice points on the circle x^2 + y^2 = a^2, and A over the integer
/// solutions of the chord equation intersected with x^2 + y^2 = c^2.
///
/// With `dedup` set, one representative per isomorphism class is returned,
/// sorted by canonical form.
pub fn embeddings(t: &HeronTriangle, dedup: bool) -> Result<Vec<EmbeddedTriangle>> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let a2 = a * a;
    let c2 = c * c;
    // 2*xC*xA + 2*yC*yA = a^2 + c^2 - b^2 is the expansion of
    // |A - C|^2 = b^2 given |A| = c and |C| = a.
    let rhs = &a2 + &c2 - b * b;
    let mut out = Vec::new();
    for (xc, yc) in sum_of_two_squares(&a2)? {
        let c_pt = GridPoint::new(xc.clone(), yc.clone());
        let mut push = |a_pt: GridPoint| {
            debug_assert_eq!(dist2(&a_pt, &c_pt), b * b);
            debug_assert!(!collinear(&a_pt, &GridPoint::origin(), &c_pt));
            out.push(EmbeddedTriangle {
                a: a_pt,
                b: GridPoint::origin(),
                c: c_pt.clone(),
            });
        };
        let two_xc = Int::from(2) * &xc;
        let two_yc = Int::from(2) * &yc;
        if two_yc.is_zero() {
            // xA fixed by the linear equation; yA from the circle.
            let (xa, r) = rhs.div_rem(&two_xc);
            if !r.is_zero() {
                continue;
            }
            let rem = &c2 - &xa * &xa;
            if rem.is_negative() {
                continue;
            }
            if let Some(ya) = perfect_square_root(&rem) {
                if ya.is_zero() {
                    continue; // A on the x-axis with C: collinear
                }
                push(GridPoint::new(xa.clone(), ya.clone()));
                push(GridPoint::new(xa, -ya));
            }
        } else {
            // yA = (rhs - 2*xC*xA) / (2*yC); substitute into the circle.
            let qa = &two_xc * &two_xc + &two_yc * &two_yc;
            let qb = Int::from(-2) * &two_xc * &rhs;
            let qc = &rhs * &rhs - &c2 * &two_yc * &two_yc;
            if let Roots::Finite(roots) = integer_roots(&qa, &qb, &qc) {
                for xa in roots {
                    let num = &rhs - &two_xc * &xa;
                    let (ya, r) = num.div_rem(&two_yc);
                    if !r.is_zero() {
                        continue;
                    }
                    let a_pt = GridPoint::new(xa, ya);
                    if collinear(&a_pt, &GridPoint::origin(), &c_pt) {
                        continue;
                    }
                    push(a_pt);
                }
            }
        }
    }
    if dedup {
        let mut seen: Vec<(canon::CanonicalForm, EmbeddedTriangle)> = Vec::new();
        for e in out {
            let nf = canon::normal_form(&e.point_set())?;
            if !seen.iter().any(|(k, _)| *k == nf) {
                seen.push((nf, e));
            }
        }
        seen.sort_by(|(k1, _), (k2, _)| k1.cmp(k2));
        Ok(seen.into_iter().map(|(_, e)| e).collect())
    } else {
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{is_integral_set, PointSet};

    fn tri(a: i64, b: i64, c: i64) -> HeronTriangle {
        HeronTriangle::new(a, b, c).unwrap()
    }

    #[test]
    fn enumeration_small() {
        let five = heronian_triangles(&Int::from(5)).unwrap();
        assert_eq!(five, vec![tri(5, 4, 3)]);
        assert!(heronian_triangles(&Int::from(4)).unwrap().is_empty());
        assert!(heronian_triangles(&Int::from(1)).unwrap().is_empty());
    }

    #[test]
    fn enumeration_contains_2066_triangle() {
        let list = heronian_triangles(&Int::from(2066)).unwrap();
        assert!(list.contains(&tri(2066, 1803, 505)));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Independent brute force over all ordered triples for d <= 60.
        let mut expected = 0usize;
        let mut found = 0usize;
        for a in 1i64..=60 {
            for b in 1..=a {
                for c in 1..=b {
                    if b + c <= a {
                        continue;
                    }
                    let p = (a + b + c) * (a + b - c) * (a + c - b) * (b + c - a);
                    let s = (p as f64).sqrt().round() as i64;
                    if s * s == p && s % 4 == 0 {
                        expected += 1;
                    }
                }
            }
            found += heronian_triangles(&Int::from(a)).unwrap().len();
        }
        assert_eq!(found, expected);
    }

    #[test]
    fn right_triangle_check() {
        assert!(is_right_triangle(&tri(5, 4, 3)));
        assert!(is_right_triangle(&tri(25, 20, 15)));
        assert!(!is_right_triangle(&tri(2066, 1803, 505)));
    }

    #[test]
    fn area_examples() {
        assert_eq!(tri(5, 4, 3).area(), Int::from(6));
        assert_eq!(tri(25, 20, 15).area(), Int::from(150));
    }

    fn set(pts: &[(i64, i64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(x, y)| GridPoint::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn embeddings_of_345() {
        let all = embeddings(&tri(5, 4, 3), false).unwrap();
        assert!(!all.is_empty());
        for e in &all {
            assert_eq!(e.b(), &GridPoint::origin());
            assert_eq!(
                e.side_lengths(),
                [Int::from(5), Int::from(4), Int::from(3)]
            );
            assert!(is_integral_set(&e.point_set()));
        }
        let classes = embeddings(&tri(5, 4, 3), true).unwrap();
        assert_eq!(classes.len(), 1);
        let target = set(&[(0, 0), (3, 0), (3, 4)]);
        assert!(canon::isomorphic(&classes[0].point_set(), &target).unwrap());
    }

    #[test]
    fn embeddings_of_25_20_15() {
        let classes = embeddings(&tri(25, 20, 15), true).unwrap();
        assert_eq!(classes.len(), 3);
        let e1 = set(&[(0, 0), (0, 25), (12, 16)]);
        let e2 = set(&[(0, 0), (15, 20), (0, 20)]);
        let e3 = set(&[(0, 0), (7, 24), (16, 12)]);
        for target in [&e1, &e2, &e3] {
            assert!(
                classes
                    .iter()
                    .any(|c| canon::isomorphic(&c.point_set(), target).unwrap()),
                "missing embedding class {target}"
            );
        }
    }

    #[test]
    fn embeddings_respect_sides() {
        for t in heronian_triangles(&Int::from(25)).unwrap() {
            for e in embeddings(&t, false).unwrap() {
                assert_eq!(e.side_lengths(), [t.a().clone(), t.b().clone(), t.c().clone()]);
            }
        }
    }
}
