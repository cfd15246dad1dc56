//! The two-hyperbola extension solver: all points at prescribed distance
//! differences from a triangle, extension-point enumeration, and the
//! maximality / strong maximality decision procedures.
//!
//! A point P with dist(P,A) - dist(P,C) = d1 and dist(P,B) - dist(P,C) = d2
//! lies on the intersection of two conic branches. Squaring once turns each
//! equation into "linear form = 2 * d * dist(P,C)"; eliminating the distance
//! term gives a line, substituting the line into one squared equation gives
//! a univariate quadratic, and every candidate root is verified against the
//! original signed system.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::algebra::{integer_roots, rational_roots, Roots};
use crate::canon;
use crate::exactmath::{perfect_square_root, rat_sqrt};
use crate::geometry::{all_collinear, collinear, dist2, rat_dist2, GridPoint, PointSet, RatPoint};
use crate::heronian::EmbeddedTriangle;
use crate::{Error, Int, Rat, Result};

/// The linear equation c1*x + c2*y + c3 = 0 obtained by eliminating the
/// distance term from the squared system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub c1: Int,
    pub c2: Int,
    pub c3: Int,
}

/// A linear expression e0 + e1*x + e2*y, kept separate from [`LinearForm`]
/// because here the value matters, not just the zero set.
#[derive(Debug, Clone)]
struct LinExpr {
    e0: Int,
    e1: Int,
    e2: Int,
}

/// The system dist(P,A) - dist(P,C) = d1, dist(P,B) - dist(P,C) = d2 over a
/// fixed non-collinear triple A, B, C.
#[derive(Debug, Clone)]
pub struct HyperbolaSystem {
    a: GridPoint,
    b: GridPoint,
    c: GridPoint,
    d1: Int,
    d2: Int,
}

/// Upper bound 4(k+1)^2 on the number of extension points of a triangle
/// with maximum side k (the Anning-Erdos counting argument).
pub fn anning_erdos_bound(k: &Int) -> Int {
    let k1 = k + Int::from(1);
    Int::from(4) * &k1 * &k1
}

impl HyperbolaSystem {
    pub fn new(
        a: GridPoint,
        b: GridPoint,
        c: GridPoint,
        d1: impl Into<Int>,
        d2: impl Into<Int>,
    ) -> Result<Self> {
        let (d1, d2) = (d1.into(), d2.into());
        if collinear(&a, &b, &c) {
            return Err(Error::domain(format!("collinear triple {a} {b} {c}")));
        }
        if &d1 * &d1 > dist2(&a, &c) {
            return Err(Error::domain(format!("|d1| = |{d1}| exceeds dist(A,C)")));
        }
        if &d2 * &d2 > dist2(&b, &c) {
            return Err(Error::domain(format!("|d2| = |{d2}| exceeds dist(B,C)")));
        }
        Ok(HyperbolaSystem { a, b, c, d1, d2 })
    }

    fn from_parts(a: &GridPoint, b: &GridPoint, c: &GridPoint, d1: i64, d2: i64) -> Self {
        HyperbolaSystem {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            d1: Int::from(d1),
            d2: Int::from(d2),
        }
    }

    /// e0 + e1*x + e2*y = 2 * d * dist(P,C), from squaring the equation for
    /// vertex V with difference d.
    fn squared_form(&self, v: &GridPoint, d: &Int) -> LinExpr {
        LinExpr {
            e0: (&v.x * &v.x + &v.y * &v.y) - (&self.c.x * &self.c.x + &self.c.y * &self.c.y)
                - d * d,
            e1: Int::from(2) * (&self.c.x - &v.x),
            e2: Int::from(2) * (&self.c.y - &v.y),
        }
    }

    /// The derived linear equation of the case analysis: the first squared
    /// equation directly when d1 = 0, the second when d2 = 0, else the
    /// combination d2*(first) - d1*(second) which cancels the distance term.
    pub fn linear_form(&self) -> Result<LinearForm> {
        let l1 = self.squared_form(&self.a, &self.d1);
        let l2 = self.squared_form(&self.b, &self.d2);
        let (c1, c2, c3) = if self.d1.is_zero() {
            (l1.e1, l1.e2, l1.e0)
        } else if self.d2.is_zero() {
            (l2.e1, l2.e2, l2.e0)
        } else {
            (
                &self.d2 * &l1.e1 - &self.d1 * &l2.e1,
                &self.d2 * &l1.e2 - &self.d1 * &l2.e2,
                &self.d2 * &l1.e0 - &self.d1 * &l2.e0,
            )
        };
        if c1.is_zero() && c2.is_zero() {
            // d2*(C-A) = d1*(C-B) forces A, B, C collinear; unreachable for
            // a valid system.
            return Err(Error::Internal(format!(
                "vanishing linear form for {} {} {} d1={} d2={}",
                self.a, self.b, self.c, self.d1, self.d2
            )));
        }
        Ok(LinearForm { c1, c2, c3 })
    }

    /// Restriction of (e0+e1x+e2y)^2 = 4 d^2 ((x-xc)^2 + (y-yc)^2) to the
    /// line, as an integer quadratic in the free variable (x when c2 != 0,
    /// else y). The whole equation is scaled by c2^2 (resp. c1^2).
    fn restricted_quadratic(&self, line: &LinearForm, l: &LinExpr, d: &Int) -> (Int, Int, Int) {
        let four_d2 = Int::from(4) * d * d;
        let (xc, yc) = (&self.c.x, &self.c.y);
        if !line.c2.is_zero() {
            let u1 = &line.c2 * &l.e1 - &l.e2 * &line.c1;
            let u0 = &line.c2 * &l.e0 - &l.e2 * &line.c3;
            let v1 = -&line.c1;
            let v0 = -&line.c3 - &line.c2 * yc;
            let c2sq = &line.c2 * &line.c2;
            let qa = &u1 * &u1 - &four_d2 * (&c2sq + &v1 * &v1);
            let qb = Int::from(2) * &u0 * &u1
                - &four_d2 * (Int::from(-2) * &c2sq * xc + Int::from(2) * &v0 * &v1);
            let qc = &u0 * &u0 - &four_d2 * (&c2sq * xc * xc + &v0 * &v0);
            (qa, qb, qc)
        } else {
            let u1 = &line.c1 * &l.e2;
            let u0 = &line.c1 * &l.e0 - &l.e1 * &line.c3;
            let w0 = -&line.c3 - &line.c1 * xc;
            let c1sq = &line.c1 * &line.c1;
            let qa = &u1 * &u1 - &four_d2 * &c1sq;
            let qb = Int::from(2) * &u0 * &u1 + Int::from(8) * d * d * &c1sq * yc;
            let qc = &u0 * &u0 - &four_d2 * (&w0 * &w0 + &c1sq * yc * yc);
            (qa, qb, qc)
        }
    }

    /// Ordered squared-equation sources with nonzero difference, primary
    /// first. A source can degenerate (the line lies inside the squared
    /// conic); then the next one is consulted.
    fn sources(&self) -> Vec<(LinExpr, Int)> {
        let mut out = Vec::with_capacity(2);
        if !self.d1.is_zero() {
            out.push((self.squared_form(&self.a, &self.d1), self.d1.clone()));
        }
        if !self.d2.is_zero() {
            out.push((self.squared_form(&self.b, &self.d2), self.d2.clone()));
        }
        out
    }

    /// All grid points solving the signed system exactly.
    pub fn solve_integral(&self) -> Result<Vec<GridPoint>> {
        if self.d1.is_zero() && self.d2.is_zero() {
            return Ok(self
                .circumcenter()
                .and_then(|p| p.to_grid())
                .filter(|p| self.verify_grid(p))
                .into_iter()
                .collect());
        }
        let line = self.linear_form()?;
        for (l, d) in self.sources() {
            let (qa, qb, qc) = self.restricted_quadratic(&line, &l, &d);
            let Roots::Finite(roots) = integer_roots(&qa, &qb, &qc) else {
                continue;
            };
            let mut out: Vec<GridPoint> = Vec::new();
            for t in roots {
                let Some(p) = point_on_line_int(&line, &t) else {
                    continue;
                };
                if self.verify_grid(&p) && !out.contains(&p) {
                    out.push(p);
                }
            }
            return Ok(out);
        }
        Err(Error::Internal(format!(
            "all squared equations degenerate on the line for {} {} {}",
            self.a, self.b, self.c
        )))
    }

    /// All rational points solving the signed system exactly.
    pub fn solve_rational(&self) -> Result<Vec<RatPoint>> {
        if self.d1.is_zero() && self.d2.is_zero() {
            return Ok(self
                .circumcenter()
                .filter(|p| self.verify_rat(p))
                .into_iter()
                .collect());
        }
        let line = self.linear_form()?;
        for (l, d) in self.sources() {
            let (qa, qb, qc) = self.restricted_quadratic(&line, &l, &d);
            let Roots::Finite(roots) = rational_roots(&qa, &qb, &qc) else {
                continue;
            };
            let mut out: Vec<RatPoint> = Vec::new();
            for t in roots {
                let p = point_on_line_rat(&line, &t);
                if self.verify_rat(&p) && !out.contains(&p) {
                    out.push(p);
                }
            }
            return Ok(out);
        }
        Err(Error::Internal(format!(
            "all squared equations degenerate on the line for {} {} {}",
            self.a, self.b, self.c
        )))
    }

    /// Intersection of the two perpendicular bisectors, the only candidate
    /// of the d1 = d2 = 0 cell.
    fn circumcenter(&self) -> Option<RatPoint> {
        let l1 = self.squared_form(&self.a, &Int::from(0));
        let l2 = self.squared_form(&self.b, &Int::from(0));
        let det = &l1.e1 * &l2.e2 - &l1.e2 * &l2.e1;
        if det.is_zero() {
            return None; // cannot happen for non-collinear A, B, C
        }
        let x = Rat::new(&l1.e2 * &l2.e0 - &l1.e0 * &l2.e2, det.clone());
        let y = Rat::new(&l1.e0 * &l2.e1 - &l1.e1 * &l2.e0, det);
        Some(RatPoint::new(x, y))
    }

    /// Check a grid candidate against the original signed system.
    fn verify_grid(&self, p: &GridPoint) -> bool {
        let pa2 = dist2(p, &self.a);
        let pb2 = dist2(p, &self.b);
        let pc2 = dist2(p, &self.c);
        if self.d1.is_zero() && self.d2.is_zero() {
            return pa2 == pc2 && pb2 == pc2;
        }
        let Some(pc) = perfect_square_root(&pc2) else {
            return false;
        };
        signed_branch_int(&pa2, &self.d1, &pc) && signed_branch_int(&pb2, &self.d2, &pc)
    }

    fn verify_rat(&self, p: &RatPoint) -> bool {
        let pa2 = rat_dist2(p, &self.a.to_rat());
        let pb2 = rat_dist2(p, &self.b.to_rat());
        let pc2 = rat_dist2(p, &self.c.to_rat());
        if self.d1.is_zero() && self.d2.is_zero() {
            return pa2 == pc2 && pb2 == pc2;
        }
        let Some(pc) = rat_sqrt(&pc2) else {
            return false;
        };
        signed_branch_rat(&pa2, &self.d1, &pc) && signed_branch_rat(&pb2, &self.d2, &pc)
    }
}

/// dist(P,V) = d + dist(P,C) requires d + pc >= 0 and (d + pc)^2 = pv2.
fn signed_branch_int(pv2: &Int, d: &Int, pc: &Int) -> bool {
    let e = d + pc;
    !e.is_negative() && &(&e * &e) == pv2
}

fn signed_branch_rat(pv2: &Rat, d: &Int, pc: &Rat) -> bool {
    let e = Rat::from_integer(d.clone()) + pc;
    !e.is_negative() && &(&e * &e) == pv2
}

fn point_on_line_int(line: &LinearForm, t: &Int) -> Option<GridPoint> {
    if !line.c2.is_zero() {
        let num = -(&line.c1 * t + &line.c3);
        let (y, r) = num.div_rem(&line.c2);
        if r.is_zero() {
            Some(GridPoint::new(t.clone(), y))
        } else {
            None
        }
    } else {
        let (x, r) = (-&line.c3).div_rem(&line.c1);
        if r.is_zero() {
            Some(GridPoint::new(x, t.clone()))
        } else {
            None
        }
    }
}

fn point_on_line_rat(line: &LinearForm, t: &Rat) -> RatPoint {
    if !line.c2.is_zero() {
        let num = -(Rat::from_integer(line.c1.clone()) * t + Rat::from_integer(line.c3.clone()));
        RatPoint::new(t.clone(), num / Rat::from_integer(line.c2.clone()))
    } else {
        RatPoint::new(Rat::new(-&line.c3, line.c1.clone()), t.clone())
    }
}

/// Labeling of the triangle minimizing the sweep area: C is placed at the
/// vertex joining the two shortest sides, so the (d1, d2) ranges are the two
/// small side lengths.
fn sweep_labels(e: &EmbeddedTriangle) -> (GridPoint, GridPoint, GridPoint) {
    let pts = e.points();
    let mut best: Option<(Int, [GridPoint; 3])> = None;
    for ci in 0..3 {
        let c = pts[ci];
        let rest: Vec<&GridPoint> = (0..3).filter(|&j| j != ci).map(|j| pts[j]).collect();
        let score = dist2(rest[0], c) * dist2(rest[1], c);
        let labels = [rest[0].clone(), rest[1].clone(), c.clone()];
        match &best {
            Some((s, _)) if *s <= score => {}
            _ => best = Some((score, labels)),
        }
    }
    let (_, [a, b, c]) = best.unwrap();
    (a, b, c)
}

fn side_ranges(a: &GridPoint, b: &GridPoint, c: &GridPoint) -> Result<(i64, i64)> {
    let ac = perfect_square_root(&dist2(a, c))
        .ok_or_else(|| Error::domain("non-integral side A-C"))?;
    let bc = perfect_square_root(&dist2(b, c))
        .ok_or_else(|| Error::domain("non-integral side B-C"))?;
    let ac = ac.to_i64().ok_or_else(|| Error::domain("side A-C exceeds the sweep range"))?;
    let bc = bc.to_i64().ok_or_else(|| Error::domain("side B-C exceeds the sweep range"))?;
    Ok((ac, bc))
}

fn grid_candidate_ok(p: &GridPoint, pts: [&GridPoint; 3]) -> bool {
    pts.iter().all(|v| perfect_square_root(&dist2(p, v)).is_some())
}

/// Integral distances (not merely rational) are required of a rational
/// extension point.
fn rat_candidate_ok(p: &RatPoint, pts: [&GridPoint; 3]) -> bool {
    pts.iter().all(|v| match rat_sqrt(&rat_dist2(p, &v.to_rat())) {
        Some(d) => d.is_integer(),
        None => false,
    })
}

fn grid_cell(a: &GridPoint, b: &GridPoint, c: &GridPoint, d1: i64, d2: i64) -> Vec<GridPoint> {
    let sys = HyperbolaSystem::from_parts(a, b, c, d1, d2);
    sys.solve_integral()
        .expect("non-collinear sweep cell")
        .into_iter()
        .filter(|p| grid_candidate_ok(p, [a, b, c]) && p != a && p != b && p != c)
        .collect()
}

fn rat_cell(a: &GridPoint, b: &GridPoint, c: &GridPoint, d1: i64, d2: i64) -> Vec<RatPoint> {
    let sys = HyperbolaSystem::from_parts(a, b, c, d1, d2);
    let (ar, br, cr) = (a.to_rat(), b.to_rat(), c.to_rat());
    sys.solve_rational()
        .expect("non-collinear sweep cell")
        .into_iter()
        .filter(|p| rat_candidate_ok(p, [a, b, c]) && *p != ar && *p != br && *p != cr)
        .collect()
}

fn rat_point_cmp(p: &RatPoint, q: &RatPoint) -> std::cmp::Ordering {
    let key = |v: &RatPoint| (v.x.abs(), v.x.is_positive(), v.y.abs(), v.y.is_positive());
    key(p).cmp(&key(q))
}

/// All grid points at integral distance to every vertex of E, excluding the
/// vertices themselves, sorted canonically. Parallel over the d1 range when
/// the `parallel` feature is on.
pub fn extension_points(e: &EmbeddedTriangle) -> Result<Vec<GridPoint>> {
    let (a, b, c) = sweep_labels(e);
    let (ac, bc) = side_ranges(&a, &b, &c)?;
    #[cfg(feature = "parallel")]
    let mut all: Vec<GridPoint> = (-ac..=ac)
        .into_par_iter()
        .flat_map_iter(|d1| {
            (-bc..=bc).flat_map(|d2| grid_cell(&a, &b, &c, d1, d2)).collect::<Vec<_>>()
        })
        .collect();
    #[cfg(not(feature = "parallel"))]
    let mut all: Vec<GridPoint> = (-ac..=ac)
        .flat_map(|d1| {
            (-bc..=bc).flat_map(|d2| grid_cell(&a, &b, &c, d1, d2)).collect::<Vec<GridPoint>>()
        })
        .collect();
    all.sort_by(canon::point_cmp);
    all.dedup();
    Ok(all)
}

/// Sequential reference implementation of [`extension_points`]; used by the
/// benchmarks and available regardless of features.
pub fn extension_points_seq(e: &EmbeddedTriangle) -> Result<Vec<GridPoint>> {
    let (a, b, c) = sweep_labels(e);
    let (ac, bc) = side_ranges(&a, &b, &c)?;
    let mut all: Vec<GridPoint> = Vec::new();
    for d1 in -ac..=ac {
        for d2 in -bc..=bc {
            all.extend(grid_cell(&a, &b, &c, d1, d2));
        }
    }
    all.sort_by(canon::point_cmp);
    all.dedup();
    Ok(all)
}

/// All rational points at integral distance to every vertex of E, excluding
/// the vertices, sorted deterministically.
pub fn extension_points_rational(e: &EmbeddedTriangle) -> Result<Vec<RatPoint>> {
    let (a, b, c) = sweep_labels(e);
    let (ac, bc) = side_ranges(&a, &b, &c)?;
    #[cfg(feature = "parallel")]
    let mut all: Vec<RatPoint> = (-ac..=ac)
        .into_par_iter()
        .flat_map_iter(|d1| {
            (-bc..=bc).flat_map(|d2| rat_cell(&a, &b, &c, d1, d2)).collect::<Vec<_>>()
        })
        .collect();
    #[cfg(not(feature = "parallel"))]
    let mut all: Vec<RatPoint> = (-ac..=ac)
        .flat_map(|d1| {
            (-bc..=bc).flat_map(|d2| rat_cell(&a, &b, &c, d1, d2)).collect::<Vec<RatPoint>>()
        })
        .collect();
    all.sort_by(rat_point_cmp);
    all.dedup();
    Ok(all)
}

/// Early-exit test: does E admit ANY rational point (outside its vertices)
/// at integral distance to all three vertices?
pub fn has_rational_extension(e: &EmbeddedTriangle) -> Result<bool> {
    let (a, b, c) = sweep_labels(e);
    let (ac, bc) = side_ranges(&a, &b, &c)?;
    let scan = |d1: i64| (-bc..=bc).any(|d2| !rat_cell(&a, &b, &c, d1, d2).is_empty());
    #[cfg(feature = "parallel")]
    let found = (-ac..=ac).into_par_iter().any(scan);
    #[cfg(not(feature = "parallel"))]
    let found = (-ac..=ac).any(scan);
    Ok(found)
}

/// Early-exit test: does E admit ANY grid point (outside its vertices) at
/// integral distance to all three vertices?
pub fn has_integral_extension(e: &EmbeddedTriangle) -> Result<bool> {
    let (a, b, c) = sweep_labels(e);
    let (ac, bc) = side_ranges(&a, &b, &c)?;
    let scan = |d1: i64| (-bc..=bc).any(|d2| !grid_cell(&a, &b, &c, d1, d2).is_empty());
    #[cfg(feature = "parallel")]
    let found = (-ac..=ac).into_par_iter().any(scan);
    #[cfg(not(feature = "parallel"))]
    let found = (-ac..=ac).any(scan);
    Ok(found)
}

/// The seed triple used by the maximality tests: the non-collinear triple
/// minimizing the longest side, ties broken by canonical point order.
pub fn seed_triangle(p: &PointSet) -> Result<EmbeddedTriangle> {
    let pts = p.points();
    let mut best: Option<(Int, EmbeddedTriangle)> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                if collinear(&pts[i], &pts[j], &pts[k]) {
                    continue;
                }
                let max_side = [
                    dist2(&pts[i], &pts[j]),
                    dist2(&pts[i], &pts[k]),
                    dist2(&pts[j], &pts[k]),
                ]
                .into_iter()
                .max()
                .unwrap();
                // Points are scanned in canonical order, so the first triple
                // achieving the minimum is the canonical tie-break.
                if best.as_ref().is_none_or(|(s, _)| max_side < *s) {
                    let t = EmbeddedTriangle::new(
                        pts[i].clone(),
                        pts[j].clone(),
                        pts[k].clone(),
                    )?;
                    best = Some((max_side, t));
                }
            }
        }
    }
    best.map(|(_, t)| t)
        .ok_or_else(|| Error::domain("all points collinear; no seed triangle"))
}

/// True iff no grid point outside P is at integral distance to every point
/// of P.
pub fn is_maximal(p: &PointSet) -> Result<bool> {
    check_maximality_input(p)?;
    let seed = seed_triangle(p)?;
    for cand in extension_points(&seed)? {
        if p.contains(&cand) {
            continue;
        }
        let extends = p
            .iter()
            .all(|q| perfect_square_root(&dist2(&cand, q)).is_some());
        if extends {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All grid points extending P (integral distance to every point of P).
/// Empty exactly when P is maximal.
pub fn extension_points_of_set(p: &PointSet) -> Result<Vec<GridPoint>> {
    check_maximality_input(p)?;
    let seed = seed_triangle(p)?;
    let mut out: Vec<GridPoint> = extension_points(&seed)?
        .into_iter()
        .filter(|cand| {
            !p.contains(cand)
                && p.iter().all(|q| perfect_square_root(&dist2(cand, q)).is_some())
        })
        .collect();
    out.sort_by(canon::point_cmp);
    Ok(out)
}

/// True iff no RATIONAL point outside P is at integral distance to every
/// point of P.
pub fn is_strongly_maximal(p: &PointSet) -> Result<bool> {
    check_maximality_input(p)?;
    let seed = seed_triangle(p)?;
    if p.len() == 3 {
        return Ok(!has_rational_extension(&seed)?);
    }
    let grid_rats: Vec<RatPoint> = p.iter().map(|q| q.to_rat()).collect();
    for cand in extension_points_rational(&seed)? {
        if grid_rats.contains(&cand) {
            continue;
        }
        let extends = p.iter().all(|q| {
            rat_sqrt(&rat_dist2(&cand, &q.to_rat())).is_some_and(|d| d.is_integer())
        });
        if extends {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_maximality_input(p: &PointSet) -> Result<()> {
    if p.len() < 3 {
        return Err(Error::domain("maximality needs at least 3 points"));
    }
    if all_collinear(p.points()) {
        return Err(Error::domain("maximality undefined for collinear sets"));
    }
    for (i, a) in p.iter().enumerate() {
        for b in &p.points()[i + 1..] {
            if perfect_square_root(&dist2(a, b)).is_none() {
                return Err(Error::domain(format!("non-integral distance {a} - {b}")));
            }
        }
    }
    Ok(())
}
