//! Total ordering on grid points, list representations and normal forms
//! under the automorphism group of the grid (the 8 integer orthogonal
//! matrices combined with integer translations).

use std::cmp::Ordering;

use crate::geometry::{GridPoint, PointSet};
use crate::{Error, Int, Result};

use num_traits::Signed;

/// The strict total order on grid points, as comparison of the key
/// (|x|, x>0, |y|, y>0) with false < true. (0,0) is the global minimum.
pub fn coord_cmp(px: &Int, py: &Int, qx: &Int, qy: &Int) -> Ordering {
    let key = |x: &Int, y: &Int| (x.abs(), x.is_positive(), y.abs(), y.is_positive());
    key(px, py).cmp(&key(qx, qy))
}

pub fn point_cmp(p: &GridPoint, q: &GridPoint) -> Ordering {
    coord_cmp(&p.x, &p.y, &q.x, &q.y)
}

pub fn point_less(p: &GridPoint, q: &GridPoint) -> bool {
    point_cmp(p, q) == Ordering::Less
}

/// Points of the set sorted ascending by the total order.
pub fn list_repr(set: &PointSet) -> Vec<GridPoint> {
    // PointSet already stores its points in canonical order.
    set.points().to_vec()
}

/// One of the 8 orthogonal matrices over the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrthoMatrix {
    entries: [[i8; 2]; 2],
}

impl OrthoMatrix {
    pub const ALL: [OrthoMatrix; 8] = [
        OrthoMatrix { entries: [[1, 0], [0, 1]] },
        OrthoMatrix { entries: [[1, 0], [0, -1]] },
        OrthoMatrix { entries: [[-1, 0], [0, 1]] },
        OrthoMatrix { entries: [[-1, 0], [0, -1]] },
        OrthoMatrix { entries: [[0, 1], [1, 0]] },
        OrthoMatrix { entries: [[0, 1], [-1, 0]] },
        OrthoMatrix { entries: [[0, -1], [1, 0]] },
        OrthoMatrix { entries: [[0, -1], [-1, 0]] },
    ];

    pub fn apply(&self, p: &GridPoint) -> GridPoint {
        let e = &self.entries;
        GridPoint::new(
            scaled(&p.x, e[0][0]) + scaled(&p.y, e[0][1]),
            scaled(&p.x, e[1][0]) + scaled(&p.y, e[1][1]),
        )
    }
}

fn scaled(v: &Int, c: i8) -> Int {
    match c {
        0 => Int::from(0),
        1 => v.clone(),
        -1 => -v,
        _ => unreachable!(),
    }
}

/// Minimum list representation of a point set under the automorphism group.
/// For non-empty sets the representation always starts at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    repr: Vec<GridPoint>,
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(&self.repr, &other.repr)
    }
}

impl CanonicalForm {
    pub fn points(&self) -> &[GridPoint] {
        &self.repr
    }

    pub fn to_point_set(&self) -> PointSet {
        PointSet::new(self.repr.clone()).expect("canonical form has distinct points")
    }

    /// Stable dedup-key serialization: decimal coordinates, `,` between
    /// coordinates, `;` between points, no whitespace.
    pub fn serialize(&self) -> String {
        self.repr
            .iter()
            .map(|p| format!("{},{}", p.x, p.y))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(s: &str) -> Result<CanonicalForm> {
        let mut repr = Vec::new();
        for part in s.split(';') {
            let (x, y) = part
                .split_once(',')
                .ok_or_else(|| Error::domain(format!("bad canonical point {part:?}")))?;
            let px: Int = x.parse().map_err(|_| Error::domain(format!("bad integer {x:?}")))?;
            let py: Int = y.parse().map_err(|_| Error::domain(format!("bad integer {y:?}")))?;
            repr.push(GridPoint::new(px, py));
        }
        Ok(CanonicalForm { repr })
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.serialize())
    }
}

fn lex_cmp(a: &[GridPoint], b: &[GridPoint]) -> Ordering {
    for (p, q) in a.iter().zip(b.iter()) {
        match point_cmp(p, q) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// The minimum, over all 8 matrices and all translations moving a set point
/// to the origin, of the sorted point list. O(n^2) point operations.
pub fn normal_form(set: &PointSet) -> Result<CanonicalForm> {
    if set.is_empty() {
        return Err(Error::domain("normal_form of empty set"));
    }
    let mut champion: Option<Vec<GridPoint>> = None;
    for anchor in set.iter() {
        for m in &OrthoMatrix::ALL {
            let mut candidate: Vec<GridPoint> = set
                .iter()
                .map(|p| m.apply(&GridPoint::new(&p.x - &anchor.x, &p.y - &anchor.y)))
                .collect();
            candidate.sort_by(point_cmp);
            match &champion {
                Some(best) if lex_cmp(&candidate, best) != Ordering::Less => {}
                _ => champion = Some(candidate),
            }
        }
    }
    Ok(CanonicalForm { repr: champion.unwrap() })
}

/// True iff the two sets are related by an automorphism-group isometry.
pub fn isomorphic(p: &PointSet, q: &PointSet) -> Result<bool> {
    if p.len() != q.len() {
        return Ok(false);
    }
    Ok(normal_form(p)? == normal_form(q)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn set(pts: &[(i64, i64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn order_examples() {
        assert!(point_less(&pt(0, 0), &pt(1, 0)));
        assert!(point_less(&pt(0, 0), &pt(0, -1)));
        assert!(point_less(&pt(-3, 7), &pt(3, 0)));
        // (0,-3) < (0,3) < (-4,0) < (4,0)
        let mut pts = vec![pt(4, 0), pt(0, 3), pt(-4, 0), pt(0, -3)];
        pts.sort_by(point_cmp);
        assert_eq!(pts, vec![pt(0, -3), pt(0, 3), pt(-4, 0), pt(4, 0)]);
    }

    #[test]
    fn list_repr_examples() {
        assert_eq!(list_repr(&set(&[(3, 0), (0, 0)])), vec![pt(0, 0), pt(3, 0)]);
    }

    #[test]
    fn normal_form_reference_sets() {
        let left = set(&[(0, -4), (-3, 0), (0, 0), (3, 0), (0, 4)]);
        let nf = normal_form(&left).unwrap();
        assert_eq!(nf.serialize(), "0,0;0,-3;0,3;-4,0;4,0");

        let right = set(&[(0, 12), (9, 0), (16, 0), (9, 24), (16, 24), (25, 12)]);
        let nf = normal_form(&right).unwrap();
        assert_eq!(nf.serialize(), "0,0;0,-7;-12,9;-12,-16;-24,0;-24,-7");
    }

    #[test]
    fn normal_form_single_point() {
        let nf = normal_form(&set(&[(5, 5)])).unwrap();
        assert_eq!(nf.serialize(), "0,0");
    }

    #[test]
    fn normal_form_idempotent() {
        let s = set(&[(0, 12), (9, 0), (16, 0), (9, 24), (16, 24), (25, 12)]);
        let nf = normal_form(&s).unwrap();
        let again = normal_form(&nf.to_point_set()).unwrap();
        assert_eq!(nf, again);
    }

    #[test]
    fn isomorphic_examples() {
        let t = set(&[(0, 0), (3, 0), (0, 4)]);
        let translated = set(&[(7, -2), (10, -2), (7, 2)]);
        assert!(isomorphic(&t, &translated).unwrap());
        let reflected = set(&[(0, 0), (-3, 0), (0, 4)]);
        assert!(isomorphic(&t, &reflected).unwrap());
        let swapped = set(&[(0, 0), (4, 0), (0, 3)]);
        assert!(isomorphic(&t, &swapped).unwrap());
        let other = set(&[(0, 0), (5, 0), (0, 12)]);
        assert!(!isomorphic(&t, &other).unwrap());
    }

    #[test]
    fn serialize_round_trip() {
        let nf = normal_form(&set(&[(0, -4), (-3, 0), (0, 0), (3, 0), (0, 4)])).unwrap();
        assert_eq!(CanonicalForm::parse(&nf.serialize()).unwrap(), nf);
    }
}
