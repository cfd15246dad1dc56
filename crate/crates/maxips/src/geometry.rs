//! Grid points, exact distances, collinearity/concyclicity predicates,
//! position classification, characteristic and scaling.

use num_traits::{Signed, Zero};

use crate::canon;
use crate::exactmath::{perfect_square_root, squarefree_part};
use crate::{Error, Int, Rat, Result};

/// A point of the integer grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub x: Int,
    pub y: Int,
}

impl GridPoint {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        GridPoint { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        GridPoint::new(0, 0)
    }

    pub fn to_rat(&self) -> RatPoint {
        RatPoint { x: Rat::from_integer(self.x.clone()), y: Rat::from_integer(self.y.clone()) }
    }
}

impl std::fmt::Display for GridPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A point with reduced rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPoint {
    pub x: Rat,
    pub y: Rat,
}

impl RatPoint {
    pub fn new(x: Rat, y: Rat) -> Self {
        RatPoint { x, y }
    }

    /// Back to the grid, if both coordinates are integers.
    pub fn to_grid(&self) -> Option<GridPoint> {
        if self.x.is_integer() && self.y.is_integer() {
            Some(GridPoint::new(self.x.to_integer(), self.y.to_integer()))
        } else {
            None
        }
    }
}

impl std::fmt::Display for RatPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Finite set of distinct grid points, stored sorted in the canonical point
/// order so that equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<GridPoint>,
}

impl PointSet {
    /// Builds a set from arbitrary points; sorts canonically and rejects
    /// duplicates.
    pub fn new(mut points: Vec<GridPoint>) -> Result<Self> {
        points.sort_by(canon::point_cmp);
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(Error::domain(format!("duplicate point {}", w[0])));
            }
        }
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &GridPoint) -> bool {
        self.points.binary_search_by(|q| canon::point_cmp(q, p)).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GridPoint> {
        self.points.iter()
    }

    /// Set with `p` added; error if already present.
    pub fn with_point(&self, p: GridPoint) -> Result<PointSet> {
        let mut pts = self.points.clone();
        pts.push(p);
        PointSet::new(pts)
    }
}

impl std::fmt::Display for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", strs.join(","))
    }
}

/// Squared Euclidean distance.
pub fn dist2(p: &GridPoint, q: &GridPoint) -> Int {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// The exact distance if it is an integer, else `None`.
pub fn integral_distance(p: &GridPoint, q: &GridPoint) -> Option<Int> {
    perfect_square_root(&dist2(p, q))
}

/// Squared distance between rational points.
pub fn rat_dist2(p: &RatPoint, q: &RatPoint) -> Rat {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// True iff all pairwise distances are integral and, for three or more
/// points, the set is not entirely collinear.
pub fn is_integral_set(set: &PointSet) -> bool {
    let pts = set.points();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if integral_distance(p, q).is_none() {
                return false;
            }
        }
    }
    if pts.len() >= 3 && all_collinear(pts) {
        return false;
    }
    true
}

pub fn all_collinear(pts: &[GridPoint]) -> bool {
    if pts.len() < 3 {
        return true;
    }
    pts[2..].iter().all(|r| collinear(&pts[0], &pts[1], r))
}

/// Maximum pairwise distance; errors on a non-integral pair.
pub fn diameter(set: &PointSet) -> Result<Int> {
    let pts = set.points();
    if pts.len() < 2 {
        return Err(Error::domain("diameter requires at least 2 points"));
    }
    let mut best = Int::zero();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let d = integral_distance(p, q)
                .ok_or_else(|| Error::domain(format!("non-integral distance {p} - {q}")))?;
            if d > best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// 3x3 determinant test for collinearity.
pub fn collinear(p: &GridPoint, q: &GridPoint, r: &GridPoint) -> bool {
    orient2(p, q, r).is_zero()
}

fn orient2(p: &GridPoint, q: &GridPoint, r: &GridPoint) -> Int {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

pub fn rat_collinear(p: &RatPoint, q: &RatPoint, r: &RatPoint) -> bool {
    ((&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)).is_zero()
}

/// 4x4 determinant test for four points on a genuine circle. Returns false
/// when any three of the four are collinear: the determinant also vanishes
/// for a degenerate "circle" through three collinear points, which is not a
/// circle at all.
pub fn concyclic(p: &GridPoint, q: &GridPoint, r: &GridPoint, s: &GridPoint) -> bool {
    let quad = [p, q, r, s];
    for i in 0..4 {
        let rest: Vec<&GridPoint> =
            (0..4).filter(|&j| j != i).map(|j| quad[j]).collect();
        if collinear(rest[0], rest[1], rest[2]) {
            return false;
        }
    }
    circle_det(p, q, r, s).is_zero()
}

fn circle_det(p: &GridPoint, q: &GridPoint, r: &GridPoint, s: &GridPoint) -> Int {
    // Expand along the last column after subtracting the first row; this is
    // the standard in-circle determinant with rows (x, y, x^2+y^2, 1).
    let rows: Vec<[Int; 3]> = [q, r, s]
        .iter()
        .map(|t| {
            let dx = &t.x - &p.x;
            let dy = &t.y - &p.y;
            let dz = (&t.x * &t.x + &t.y * &t.y) - (&p.x * &p.x + &p.y * &p.y);
            [dx, dy, dz]
        })
        .collect();
    det3(&rows)
}

fn det3(m: &[[Int; 3]]) -> Int {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionClass {
    Arbitrary,
    SemiGeneral,
    General,
}

impl std::fmt::Display for PositionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PositionClass::Arbitrary => write!(f, "arbitrary"),
            PositionClass::SemiGeneral => write!(f, "semi_general"),
            PositionClass::General => write!(f, "general"),
        }
    }
}

/// Classifies the set: general if no 3 collinear and no 4 concyclic,
/// semi-general if only the collinearity condition holds.
pub fn position_class(set: &PointSet) -> Result<PositionClass> {
    let pts = set.points();
    if pts.len() < 3 {
        return Err(Error::domain("position_class requires at least 3 points"));
    }
    if !no_three_collinear(pts) {
        return Ok(PositionClass::Arbitrary);
    }
    if !no_four_concyclic(pts) {
        return Ok(PositionClass::SemiGeneral);
    }
    Ok(PositionClass::General)
}

pub fn no_three_collinear(pts: &[GridPoint]) -> bool {
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                if collinear(&pts[i], &pts[j], &pts[k]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn no_four_concyclic(pts: &[GridPoint]) -> bool {
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                for l in k + 1..pts.len() {
                    if concyclic(&pts[i], &pts[j], &pts[k], &pts[l]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The square-free invariant shared by every non-degenerate triangle of an
/// integral point set. Computed from the first non-collinear triple in
/// canonical order; with debug assertions on, a second triple cross-checks.
pub fn characteristic(set: &PointSet) -> Result<Int> {
    let triples = non_collinear_triples(set);
    let first = triples
        .first()
        .ok_or_else(|| Error::domain("characteristic: all triples collinear"))?;
    let k = triple_characteristic(set, first)?;
    #[cfg(debug_assertions)]
    if let Some(second) = triples.get(1) {
        debug_assert_eq!(k, triple_characteristic(set, second)?);
    }
    Ok(k)
}

fn non_collinear_triples(set: &PointSet) -> Vec<[usize; 3]> {
    let pts = set.points();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                if !collinear(&pts[i], &pts[j], &pts[k]) {
                    out.push([i, j, k]);
                    if out.len() >= 2 {
                        return out;
                    }
                }
            }
        }
    }
    out
}

fn triple_characteristic(set: &PointSet, idx: &[usize; 3]) -> Result<Int> {
    let pts = set.points();
    let sides: Vec<Int> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(u, v)| {
            integral_distance(&pts[idx[u]], &pts[idx[v]])
                .ok_or_else(|| Error::domain("characteristic requires integral distances"))
        })
        .collect::<Result<_>>()?;
    characteristic_of_sides(&sides[0], &sides[1], &sides[2])
}

/// Characteristic of an abstract integral triangle from its side lengths.
pub fn characteristic_of_sides(a: &Int, b: &Int, c: &Int) -> Result<Int> {
    let p = heron_product(a, b, c);
    if !p.is_positive() {
        return Err(Error::domain("degenerate triangle"));
    }
    squarefree_part(&p)
}

/// (a+b+c)(a+b-c)(a-b+c)(-a+b+c); 16 times the squared area.
pub fn heron_product(a: &Int, b: &Int, c: &Int) -> Int {
    (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c)
}

/// Every coordinate multiplied by lambda >= 1.
pub fn scale(set: &PointSet, lambda: &Int) -> Result<PointSet> {
    if lambda < &Int::from(1) {
        return Err(Error::domain(format!("scale factor must be >= 1, got {lambda}")));
    }
    PointSet::new(
        set.iter().map(|p| GridPoint::new(&p.x * lambda, &p.y * lambda)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pt(x: i64, y: i64) -> GridPoint {
        GridPoint::new(x, y)
    }

    pub(crate) fn set(pts: &[(i64, i64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn dist2_examples() {
        assert_eq!(dist2(&pt(0, 0), &pt(3, 4)), Int::from(25));
        assert_eq!(dist2(&pt(0, 0), &pt(0, 0)), Int::from(0));
        assert_eq!(
            dist2(&pt(-5940, 4455), &pt(9112, -6834)),
            Int::from(354004225u64)
        );
        assert_eq!(Int::from(18815) * Int::from(18815), Int::from(354004225u64));
    }

    #[test]
    fn integral_distance_examples() {
        assert_eq!(integral_distance(&pt(0, 0), &pt(3, 4)), Some(Int::from(5)));
        assert_eq!(integral_distance(&pt(0, 0), &pt(1, 1)), None);
        assert_eq!(integral_distance(&pt(0, 0), &pt(15, 20)), Some(Int::from(25)));
    }

    #[test]
    fn integral_set_examples() {
        assert!(is_integral_set(&set(&[(0, 0), (3, 0), (0, 4), (3, 4)])));
        assert!(!is_integral_set(&set(&[(0, 0), (1, 0), (0, 1)])));
        assert!(!is_integral_set(&set(&[(0, 0), (1, 0), (2, 0)])));
    }

    #[test]
    fn diameter_examples() {
        // The two sets of the minimum-diameter figure: a rhombus with center
        // and a six-point set.
        let left = set(&[(0, -4), (-3, 0), (0, 0), (3, 0), (0, 4)]);
        assert_eq!(diameter(&left).unwrap(), Int::from(8));
        let right = set(&[(0, 12), (9, 0), (16, 0), (9, 24), (16, 24), (25, 12)]);
        assert_eq!(diameter(&right).unwrap(), Int::from(25));
        assert_eq!(diameter(&set(&[(0, 0), (3, 4)])).unwrap(), Int::from(5));
        assert!(diameter(&set(&[(0, 0), (1, 1)])).is_err());
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&pt(0, 0), &pt(1, 1), &pt(2, 2)));
        assert!(!collinear(&pt(0, 0), &pt(3, 0), &pt(0, 4)));
        assert!(!collinear(&pt(0, 12), &pt(9, 0), &pt(16, 0)));
    }

    #[test]
    fn concyclic_examples() {
        assert!(concyclic(&pt(0, 0), &pt(3, 0), &pt(0, 4), &pt(3, 4)));
        // Three collinear points: determinant vanishes but it is no circle.
        assert!(!concyclic(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(0, 1)));
        assert!(!concyclic(&pt(0, 0), &pt(3, 0), &pt(0, 4), &pt(1, 1)));
    }

    #[test]
    fn position_class_examples() {
        let general = set(&[(0, 0), (0, -33), (-16, 30), (44, -33)]);
        assert_eq!(position_class(&general).unwrap(), PositionClass::General);
        let crab = set(&[(0, 0), (0, 4), (0, -4), (3, 0), (-3, 0)]);
        assert_eq!(position_class(&crab).unwrap(), PositionClass::Arbitrary);
        // Four points on a circle plus an apex off it.
        let semi = set(&[(0, 0), (0, -78), (-20, 21), (-20, -99), (-52, -39)]);
        assert_eq!(position_class(&semi).unwrap(), PositionClass::SemiGeneral);
    }

    #[test]
    fn characteristic_examples() {
        assert_eq!(characteristic(&set(&[(0, 0), (3, 0), (0, 4)])).unwrap(), Int::from(1));
        assert_eq!(
            characteristic_of_sides(&Int::from(2), &Int::from(2), &Int::from(3)).unwrap(),
            Int::from(7)
        );
    }

    #[test]
    fn scale_examples() {
        let rect = set(&[(0, 0), (3, 0), (0, 4), (3, 4)]);
        assert_eq!(
            scale(&rect, &Int::from(2)).unwrap(),
            set(&[(0, 0), (6, 0), (0, 8), (6, 8)])
        );
        assert_eq!(scale(&rect, &Int::from(1)).unwrap(), rect);
        assert_eq!(
            scale(&rect, &Int::from(3)).unwrap(),
            set(&[(0, 0), (9, 0), (0, 12), (9, 12)])
        );
        assert_eq!(
            diameter(&scale(&rect, &Int::from(3)).unwrap()).unwrap(),
            Int::from(15)
        );
    }
}
