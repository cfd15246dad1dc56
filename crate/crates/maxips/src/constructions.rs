//! Direct constructions of integral point sets: rectangles, rhombi, crabs
//! from the decomposition lemma, semi-crabs, and point sets on circles from
//! Gaussian-integer factorizations.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::canon::{self, CanonicalForm};
use crate::exactmath::{
    divisors, factorize, gaussian_prime_factor, perfect_square_root, rat_sqrt, GaussInt,
};
use crate::geometry::{heron_product, rat_collinear, rat_dist2, GridPoint, PointSet, RatPoint};
use crate::heronian::{embeddings, HeronTriangle};
use crate::{Error, Int, Rat, Result};

/// Integers a, b with a^2 + b^2 a perfect square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PythagoreanPair {
    a: Int,
    b: Int,
    c: Int,
}

impl PythagoreanPair {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::domain(format!("pair legs must be positive, got {a},{b}")));
        }
        let c = perfect_square_root(&(&a * &a + &b * &b))
            .ok_or_else(|| Error::domain(format!("({a},{b}) is not a Pythagorean pair")))?;
        Ok(PythagoreanPair { a, b, c })
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn b(&self) -> &Int {
        &self.b
    }

    /// The hypotenuse.
    pub fn c(&self) -> &Int {
        &self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).is_one()
    }
}

/// The four corners {(0,0),(a,0),(0,b),(a,b)}.
pub fn rectangle(p: &PythagoreanPair) -> PointSet {
    PointSet::new(vec![
        GridPoint::origin(),
        GridPoint::new(p.a.clone(), Int::zero()),
        GridPoint::new(Int::zero(), p.b.clone()),
        GridPoint::new(p.a.clone(), p.b.clone()),
    ])
    .expect("rectangle corners are distinct")
}

/// The five points {(0,0),(+-a,0),(0,+-b)}.
pub fn rhombus(p: &PythagoreanPair) -> PointSet {
    PointSet::new(vec![
        GridPoint::origin(),
        GridPoint::new(p.a.clone(), Int::zero()),
        GridPoint::new(-&p.a, Int::zero()),
        GridPoint::new(Int::zero(), p.b.clone()),
        GridPoint::new(Int::zero(), -&p.b),
    ])
    .expect("rhombus points are distinct")
}

/// Body height a and arm offsets b_1 < ... < b_k, each (a, b_i) a
/// Pythagorean pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrabSpec {
    a: Int,
    arms: Vec<Int>,
}

impl CrabSpec {
    pub fn new(a: impl Into<Int>, arms: Vec<Int>) -> Result<Self> {
        let a = a.into();
        if !a.is_positive() {
            return Err(Error::domain("crab height must be positive"));
        }
        if arms.is_empty() {
            return Err(Error::domain("crab needs at least one arm"));
        }
        for w in arms.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::domain("crab arms must be strictly increasing"));
            }
        }
        for b in &arms {
            if !b.is_positive() {
                return Err(Error::domain("crab arms must be positive"));
            }
            PythagoreanPair::new(a.clone(), b.clone()).map_err(|_| {
                Error::domain(format!("({a},{b}) is not a Pythagorean pair"))
            })?;
        }
        Ok(CrabSpec { a, arms })
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn arms(&self) -> &[Int] {
        &self.arms
    }

    pub fn order(&self) -> usize {
        self.arms.len()
    }
}

/// {(0,0), (0,+-a), (+-b_i,0)}; cardinality 2k+3.
pub fn crab(spec: &CrabSpec) -> PointSet {
    let mut pts = vec![
        GridPoint::origin(),
        GridPoint::new(Int::zero(), spec.a.clone()),
        GridPoint::new(Int::zero(), -&spec.a),
    ];
    for b in &spec.arms {
        pts.push(GridPoint::new(b.clone(), Int::zero()));
        pts.push(GridPoint::new(-b, Int::zero()));
    }
    PointSet::new(pts).expect("crab points are distinct")
}

fn validate_triangle(a: &Int, b: &Int, c: &Int) -> Result<()> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::domain("triangle sides must be positive"));
    }
    if a + b <= c.clone() || a + c <= b.clone() || b + c <= a.clone() {
        return Err(Error::domain(format!("degenerate triangle {a},{b},{c}")));
    }
    Ok(())
}

/// D = (a+b+c)(a+b-c)(a-b+c)(-a+b+c) / gcd(b^2-c^2+a^2, 2a)^2, the number
/// whose two-factor splittings encode integral points on the side a.
pub fn decomposition_number(a: &Int, b: &Int, c: &Int) -> Result<Int> {
    validate_triangle(a, b, c)?;
    let g = (b * b - c * c + a * a).gcd(&(Int::from(2) * a));
    Ok(heron_product(a, b, c) / (&g * &g))
}

/// g = 2a / gcd(b^2-c^2+a^2, 2a): the denominator of the foot position of
/// the height on side a.
pub fn decomposition_g(a: &Int, b: &Int, c: &Int) -> Result<Int> {
    validate_triangle(a, b, c)?;
    let g = (b * b - c * c + a * a).gcd(&(Int::from(2) * a));
    Ok(Int::from(2) * a / g)
}

/// Factor pairs f1 > f2 of n with f1 = f2 (mod 2), optionally also
/// f1 + f2 = 0 (mod g). Ascending in f2.
fn factor_pairs(n: &Int, modulus: Option<&Int>) -> Result<Vec<(Int, Int)>> {
    let mut out = Vec::new();
    for f2 in divisors(n)? {
        let f1 = n / &f2;
        if f1 <= f2 {
            break;
        }
        if (&f1 - &f2).is_odd() {
            continue;
        }
        if let Some(g) = modulus {
            if !((&f1 + &f2) % g).is_zero() {
                continue;
            }
        }
        out.push((f1, f2));
    }
    Ok(out)
}

/// The crab specification of decompose(h): height h, arms (f1 - f2)/2 over
/// the admissible factor pairs of h^2.
pub fn decompose_crab_spec(h: &Int) -> Result<CrabSpec> {
    if !h.is_positive() {
        return Err(Error::domain("h must be positive"));
    }
    let mut arms: Vec<Int> = factor_pairs(&(h * h), None)?
        .into_iter()
        .map(|(f1, f2)| (f1 - f2) / Int::from(2))
        .collect();
    arms.sort();
    if arms.is_empty() {
        return Err(Error::domain(format!("no admissible factor pair for h = {h}")));
    }
    CrabSpec::new(h.clone(), arms)
}

/// decompose(h): the crab of order given by the divisor-count formula.
pub fn decompose_crab(h: &Int) -> Result<PointSet> {
    Ok(crab(&decompose_crab_spec(h)?))
}

/// The order of decompose(h) straight from the prime factorization:
/// k = ((2*max(a1-1,0)+1) * prod(2*ai+1) - 1) / 2 with a1 the exponent of 2.
pub fn crab_order(h: &Int) -> Result<Int> {
    if !h.is_positive() {
        return Err(Error::domain("h must be positive"));
    }
    let mut prod = Int::one();
    for (p, e) in factorize(h)? {
        let e = Int::from(e);
        let eff = if p == Int::from(2) {
            std::cmp::max(e - Int::from(1), Int::zero())
        } else {
            e
        };
        prod *= Int::from(2) * eff + Int::from(1);
    }
    Ok((prod - Int::from(1)) / Int::from(2))
}

/// The abstract (rational-coordinate) semi-crab data for base g^2 h^2 =
/// (gh)^2: apex at height gh/g over the base foot, base points at signed
/// positions +-gc_i/g split by the residue classes +-m (mod g).
#[derive(Debug, Clone)]
pub struct SemiCrabData {
    pub gh: Int,
    pub g: Int,
    pub m: Int,
    /// Scaled positions g*c_i of points left of the foot (residue m).
    pub left_gc: Vec<Int>,
    /// Scaled positions g*c_i of points right of the foot (residue -m).
    pub right_gc: Vec<Int>,
    /// Apex-to-base distances of the selected points, ascending.
    pub b: Vec<Int>,
}

impl SemiCrabData {
    pub fn cardinality(&self) -> usize {
        1 + self.left_gc.len() + self.right_gc.len()
    }

    /// Apex plus base points, exact rational coordinates.
    pub fn rational_points(&self) -> Vec<RatPoint> {
        let g = self.g.clone();
        let mut pts = vec![RatPoint::new(
            Rat::zero(),
            Rat::new(self.gh.clone(), g.clone()),
        )];
        for gc in &self.left_gc {
            pts.push(RatPoint::new(Rat::new(-gc, g.clone()), Rat::zero()));
        }
        for gc in &self.right_gc {
            pts.push(RatPoint::new(Rat::new(gc.clone(), g.clone()), Rat::zero()));
        }
        pts
    }
}

/// Selects the factor pairs of (gh)^2 with f1 = f2 (mod 2) and
/// f1 + f2 = 0 (mod g), then splits the gc values by residue class m.
/// Without an explicit m the residue maximizing cardinality is used
/// (smallest m on ties).
pub fn semi_crab_data(gh: &Int, g: &Int, m: Option<Int>) -> Result<SemiCrabData> {
    if g < &Int::from(2) {
        return Err(Error::domain("semi-crab requires g >= 2; g = 1 is the crab case"));
    }
    if !gh.is_positive() {
        return Err(Error::domain("gh must be positive"));
    }
    if (gh % g).is_zero() {
        return Err(Error::domain(format!(
            "h = {gh}/{g} is an integer; that case is decompose_crab"
        )));
    }
    let pairs = factor_pairs(&(gh * gh), Some(g))?;
    if pairs.is_empty() {
        return Err(Error::domain(format!(
            "no factor pair of ({gh})^2 satisfies the parity and mod-{g} conditions"
        )));
    }
    // gb = (f1+f2)/2 and gc = (f1-f2)/2; b = gb/g is an integer by the
    // mod-g condition.
    let gcs: Vec<(Int, Int)> = pairs
        .iter()
        .map(|(f1, f2)| ((f1 - f2) / Int::from(2), (f1 + f2) / (Int::from(2) * g)))
        .collect();
    let class_size = |m: &Int| -> usize {
        let neg = (g - m) % g;
        gcs.iter()
            .filter(|(gc, _)| {
                let r = gc % g;
                r == *m || r == neg
            })
            .count()
    };
    let m = match m {
        Some(m) => {
            if !m.is_positive() || m >= *g {
                return Err(Error::domain(format!("m must lie in [1, {}]", g - Int::from(1))));
            }
            m
        }
        None => {
            let mut best = Int::one();
            let mut best_n = class_size(&Int::one());
            let mut m = Int::from(2);
            while m < *g {
                let n = class_size(&m);
                if n > best_n {
                    best = m.clone();
                    best_n = n;
                }
                m += 1;
            }
            best
        }
    };
    let neg = (g - &m) % g;
    let mut left_gc = Vec::new();
    let mut right_gc = Vec::new();
    let mut b = Vec::new();
    for (gc, bi) in gcs {
        let r = &gc % g;
        if r == m {
            left_gc.push(gc);
            b.push(bi);
        } else if r == neg {
            right_gc.push(gc);
            b.push(bi);
        }
    }
    if left_gc.is_empty() && right_gc.is_empty() {
        return Err(Error::domain(format!("no gc value in the residue classes +-{m} (mod {g})")));
    }
    b.sort();
    Ok(SemiCrabData { gh: gh.clone(), g: g.clone(), m, left_gc, right_gc, b })
}

/// decompose(gh, g): the semi-crab realized with integer coordinates, in
/// canonical form.
pub fn semi_crab(gh: &Int, g: &Int, m: Option<Int>) -> Result<PointSet> {
    let data = semi_crab_data(gh, g, m)?;
    integral_realization(&data.rational_points())
}

/// The 2*tau(R) rational points eta^2 / R on the circle of radius R around
/// the origin, from the Gaussian prime factorization of R. Requires every
/// prime factor of R to be 1 (mod 4).
pub fn circle_rational(r: &Int) -> Result<Vec<RatPoint>> {
    if !r.is_positive() {
        return Err(Error::domain("radius must be positive"));
    }
    let factors = factorize(r)?;
    let mut omegas = Vec::new();
    for (p, v) in &factors {
        if (p % Int::from(4)) != Int::one() {
            return Err(Error::domain(format!(
                "prime factor {p} of {r} is not congruent to 1 mod 4"
            )));
        }
        omegas.push((gaussian_prime_factor(p)?, *v));
    }
    // Enumerate u_j in 0..=v_j, divisor order.
    let mut points: Vec<RatPoint> = Vec::new();
    let mut u = vec![0u32; omegas.len()];
    loop {
        let mut eta = GaussInt::new(1, 0);
        for (j, (omega, v)) in omegas.iter().enumerate() {
            eta = eta.mul(&omega.pow(v + u[j]));
            eta = eta.mul(&omega.conj().pow(v - u[j]));
        }
        for eta in [eta.mul_i(), eta] {
            let sq = eta.mul(&eta);
            let p = RatPoint::new(Rat::new(sq.re.clone(), r.clone()), Rat::new(sq.im, r.clone()));
            if !points.contains(&p) {
                points.push(p);
            }
        }
        // mixed-radix increment
        let mut j = 0;
        loop {
            if j == u.len() {
                let tau: u32 = omegas.iter().map(|(_, v)| v + 1).product();
                debug_assert_eq!(points.len(), 2 * tau as usize);
                return Ok(points);
            }
            if u[j] < omegas[j].1 {
                u[j] += 1;
                break;
            }
            u[j] = 0;
            j += 1;
        }
    }
}

/// circle(R): the 2*tau(R) circle points together with the center, realized
/// with integer coordinates in canonical form.
pub fn circle_set(r: &Int) -> Result<PointSet> {
    let mut pts = circle_rational(r)?;
    pts.push(RatPoint::new(Rat::zero(), Rat::zero()));
    integral_realization(&pts)
}

/// circle~(R): the circle points without the center, halved (their pairwise
/// distances are all even), on a circle of radius R/2.
pub fn circle_tilde(r: &Int) -> Result<PointSet> {
    let half = Rat::new(Int::one(), Int::from(2));
    let pts: Vec<RatPoint> = circle_rational(r)?
        .into_iter()
        .map(|p| RatPoint::new(p.x * &half, p.y * &half))
        .collect();
    integral_realization(&pts)
}

/// circle(R)/t: scale the circle points by 1/t, join points at integral
/// distance, and realize every maximal clique of the resulting graph.
/// Sorted by canonical form.
pub fn circle_scaled(r: &Int, t: &Int) -> Result<Vec<PointSet>> {
    if !t.is_positive() {
        return Err(Error::domain("scale divisor must be positive"));
    }
    let inv = Rat::new(Int::one(), t.clone());
    let pts: Vec<RatPoint> = circle_rational(r)?
        .into_iter()
        .map(|p| RatPoint::new(p.x * &inv, p.y * &inv))
        .collect();
    let n = pts.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let edge = rat_integral_distance(&pts[i], &pts[j]).is_some();
            adj[i][j] = edge;
            adj[j][i] = edge;
        }
    }
    let mut out = Vec::new();
    for clique in crate::cliques::bron_kerbosch_matrix(&adj) {
        let chosen: Vec<RatPoint> = clique.iter().map(|&i| pts[i].clone()).collect();
        let set = match chosen.len() {
            1 => PointSet::new(vec![GridPoint::origin()])?,
            2 => {
                let d = rat_integral_distance(&chosen[0], &chosen[1])
                    .expect("clique edge has integral distance");
                PointSet::new(vec![GridPoint::origin(), GridPoint::new(d, Int::zero())])?
            }
            _ => integral_realization(&chosen)?,
        };
        out.push(set);
    }
    out.sort_by_key(|s| canon::normal_form(s).expect("non-empty set").serialize());
    Ok(out)
}

fn rat_integral_distance(p: &RatPoint, q: &RatPoint) -> Option<Int> {
    let d2 = rat_dist2(p, q);
    if d2.is_zero() {
        return None;
    }
    let d = rat_sqrt(&d2)?;
    if d.is_integer() {
        Some(d.to_integer())
    } else {
        None
    }
}

/// Finds an integer-coordinate congruent copy of a rational point set with
/// pairwise integral distances: every grid embedding of a small anchor
/// triangle induces a rational isometry, and each isometry mapping all
/// points to the grid yields a realization. The minimum canonical form over
/// all realizations is returned.
pub fn integral_realization(pts: &[RatPoint]) -> Result<PointSet> {
    if pts.len() < 3 {
        return Err(Error::domain("realization needs at least 3 points"));
    }
    let anchor = choose_anchor(pts)?;
    let [p1, p2, p3] = anchor.map(|i| pts[i].clone());
    let sides = [
        rat_integral_distance(&p1, &p2),
        rat_integral_distance(&p1, &p3),
        rat_integral_distance(&p2, &p3),
    ];
    let mut side_lens = Vec::with_capacity(3);
    for s in sides {
        side_lens
            .push(s.ok_or_else(|| Error::domain("anchor triangle has a non-integral side"))?);
    }
    side_lens.sort();
    let t = HeronTriangle::new(
        side_lens[2].clone(),
        side_lens[1].clone(),
        side_lens[0].clone(),
    )?;
    let mut best: Option<CanonicalForm> = None;
    for e in embeddings(&t, false)? {
        let verts = e.points();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let q: Vec<RatPoint> = perm.iter().map(|&i| verts[i].to_rat()).collect();
            if rat_dist2(&p1, &p2) != rat_dist2(&q[0], &q[1])
                || rat_dist2(&p1, &p3) != rat_dist2(&q[0], &q[2])
                || rat_dist2(&p2, &p3) != rat_dist2(&q[1], &q[2])
            {
                continue;
            }
            if let Some(image) = apply_isometry(pts, [&p1, &p2, &p3], [&q[0], &q[1], &q[2]]) {
                let set = PointSet::new(image)?;
                let nf = canon::normal_form(&set)?;
                match &best {
                    Some(b) if *b <= nf => {}
                    _ => best = Some(nf),
                }
            }
        }
    }
    match best {
        Some(nf) => Ok(nf.to_point_set()),
        None => Err(Error::NoIntegralEmbedding(format!(
            "no anchor embedding maps all {} points to the grid",
            pts.len()
        ))),
    }
}

/// Deterministic anchor triple: the non-collinear triple minimizing its
/// largest squared side (cheapest embedding enumeration), first such triple
/// in index order on ties.
fn choose_anchor(pts: &[RatPoint]) -> Result<[usize; 3]> {
    let mut best: Option<(Rat, [usize; 3])> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                if rat_collinear(&pts[i], &pts[j], &pts[k]) {
                    continue;
                }
                let m = [
                    rat_dist2(&pts[i], &pts[j]),
                    rat_dist2(&pts[i], &pts[k]),
                    rat_dist2(&pts[j], &pts[k]),
                ]
                .into_iter()
                .max()
                .unwrap();
                match &best {
                    Some((s, _)) if *s <= m => {}
                    _ => best = Some((m, [i, j, k])),
                }
            }
        }
    }
    best.map(|(_, t)| t)
        .ok_or_else(|| Error::domain("all points collinear; no anchor triangle"))
}

/// The unique affine map sending the three source anchors to the three
/// targets, applied to all points; `None` unless every image is integral.
fn apply_isometry(
    pts: &[RatPoint],
    src: [&RatPoint; 3],
    dst: [&RatPoint; 3],
) -> Option<Vec<GridPoint>> {
    let u1 = (&src[1].x - &src[0].x, &src[1].y - &src[0].y);
    let u2 = (&src[2].x - &src[0].x, &src[2].y - &src[0].y);
    let w1 = (&dst[1].x - &dst[0].x, &dst[1].y - &dst[0].y);
    let w2 = (&dst[2].x - &dst[0].x, &dst[2].y - &dst[0].y);
    let det = &u1.0 * &u2.1 - &u2.0 * &u1.1;
    debug_assert!(!det.is_zero());
    // M = W * U^{-1} with U = [u1 u2], W = [w1 w2].
    let m11 = (&w1.0 * &u2.1 - &w2.0 * &u1.1) / &det;
    let m12 = (&w2.0 * &u1.0 - &w1.0 * &u2.0) / &det;
    let m21 = (&w1.1 * &u2.1 - &w2.1 * &u1.1) / &det;
    let m22 = (&w2.1 * &u1.0 - &w1.1 * &u2.0) / &det;
    let mut out = Vec::with_capacity(pts.len());
    for p in pts {
        let dx = &p.x - &src[0].x;
        let dy = &p.y - &src[0].y;
        let x = &dst[0].x + &m11 * &dx + &m12 * &dy;
        let y = &dst[0].y + &m21 * &dx + &m22 * &dy;
        out.push(RatPoint::new(x, y).to_grid()?);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::is_maximal;
    use crate::geometry::{characteristic, diameter, is_integral_set};

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    fn pair(a: i64, b: i64) -> PythagoreanPair {
        PythagoreanPair::new(a, b).unwrap()
    }

    #[test]
    fn pythagorean_pairs() {
        assert_eq!(pair(3, 4).c(), &int(5));
        assert!(pair(3, 4).is_primitive());
        assert!(!pair(9, 12).is_primitive());
        assert!(PythagoreanPair::new(2, 3).is_err());
    }

    #[test]
    fn rectangle_examples() {
        let r = rectangle(&pair(3, 4));
        assert_eq!(r.len(), 4);
        assert_eq!(diameter(&r).unwrap(), int(5));
        assert!(is_integral_set(&r));
        assert!(is_maximal(&r).unwrap());
        assert!(is_maximal(&rectangle(&pair(9, 12))).unwrap());
        assert!(!is_maximal(&rectangle(&pair(7, 24))).unwrap());
    }

    #[test]
    fn rhombus_examples() {
        let r = rhombus(&pair(3, 4));
        assert_eq!(r.len(), 5);
        assert_eq!(diameter(&r).unwrap(), int(8));
        assert!(is_maximal(&r).unwrap());
        assert!(!is_maximal(&rhombus(&pair(5, 12))).unwrap());
        // rhombus(a,b) is the order-1 crab with height b and arm a.
        let c = crab(&CrabSpec::new(4, vec![int(3)]).unwrap());
        assert!(canon::isomorphic(&r, &c).unwrap());
    }

    #[test]
    fn crab_examples() {
        let spec = CrabSpec::new(12, vec![int(5), int(9), int(16), int(35)]).unwrap();
        let c = crab(&spec);
        assert_eq!(c.len(), 11);
        assert_eq!(diameter(&c).unwrap(), int(70));
        assert!(is_integral_set(&c));
        assert!(CrabSpec::new(12, vec![int(7)]).is_err());
    }

    #[test]
    fn decompose_examples() {
        let spec = decompose_crab_spec(&int(30)).unwrap();
        assert_eq!(spec.arms(), &[int(16), int(40), int(72), int(224)]);
        let c = decompose_crab(&int(30)).unwrap();
        assert_eq!(diameter(&c).unwrap(), int(448));
        // decompose(2^2 * 3) is the 11-point crab of diameter 70.
        let c12 = decompose_crab(&int(12)).unwrap();
        assert_eq!(c12.len(), 11);
        assert_eq!(diameter(&c12).unwrap(), int(70));
        assert!(decompose_crab(&int(1)).is_err());
        assert!(decompose_crab(&int(2)).is_err());
    }

    #[test]
    fn crab_order_examples() {
        assert_eq!(crab_order(&int(30)).unwrap(), int(4));
        assert_eq!(crab_order(&int(1)).unwrap(), int(0));
        for k in 1u32..=4 {
            assert_eq!(crab_order(&Int::from(3u64.pow(k))).unwrap(), Int::from(k));
            assert_eq!(crab_order(&Int::from(7u64.pow(k))).unwrap(), Int::from(k));
        }
    }

    #[test]
    fn decompose_matches_order_and_diameter_laws() {
        for h in 3i64..=60 {
            let spec = match decompose_crab_spec(&int(h)) {
                Ok(s) => s,
                Err(_) => {
                    assert_eq!(crab_order(&int(h)).unwrap(), int(0), "h={h}");
                    continue;
                }
            };
            assert_eq!(Int::from(spec.order()), crab_order(&int(h)).unwrap(), "h={h}");
            if h > 4 {
                let d = diameter(&crab(&spec)).unwrap();
                let expect = if h % 2 == 1 { h * h - 1 } else { h * h / 2 - 2 };
                assert_eq!(d, int(expect), "h={h}");
            }
        }
    }

    #[test]
    fn decomposition_number_examples() {
        // For the (5,4,3) right triangle the height foot on side 5 is at
        // 9/5 * ... : g = 10 / gcd(16+25-9? ...) computed exactly below.
        let a = int(5);
        let b = int(4);
        let c = int(3);
        let gcd = (&b * &b - &c * &c + &a * &a).gcd(&(int(2) * &a));
        let d = decomposition_number(&a, &b, &c).unwrap();
        assert_eq!(&d * (&gcd * &gcd), heron_product(&a, &b, &c));
        assert_eq!(decomposition_g(&a, &b, &c).unwrap(), int(2) * &a / &gcd);
        assert!(decomposition_number(&int(1), &int(1), &int(2)).is_err());
    }

    #[test]
    fn semi_crab_672_5() {
        let data = semi_crab_data(&int(672), &int(5), Some(int(1))).unwrap();
        assert_eq!(data.cardinality(), 21);
        let expect_b: Vec<Int> = [
            136, 140, 156, 168, 183, 202, 224, 250, 328, 371, 480, 546, 712, 812, 1258, 1884,
            2824, 3227, 7527, 11290,
        ]
        .iter()
        .map(|&v| int(v))
        .collect();
        assert_eq!(data.b, expect_b);
        let set = semi_crab(&int(672), &int(5), Some(int(1))).unwrap();
        assert_eq!(set.len(), 21);
        assert_eq!(diameter(&set).unwrap(), int(18815));
        assert!(is_integral_set(&set));
        assert_eq!(characteristic(&set).unwrap(), int(1));
        let nf = canon::normal_form(&set).unwrap();
        assert_eq!(
            nf.serialize(),
            "0,0;0,-168;-40,30;64,-48;-88,66;112,-84;144,-108;180,-135;-196,147;224,-168;\
             -288,216;320,-240;504,-378;-560,420;640,-480;-920,690;1584,-1188;-2176,1632;\
             2660,-1995;-5940,4455;9112,-6834"
        );
    }

    #[test]
    fn semi_crab_default_residue() {
        // m defaults to the cardinality-maximizing residue; for gh=672, g=5
        // every residue class is +-1, so m=1 is chosen.
        let data = semi_crab_data(&int(672), &int(5), None).unwrap();
        assert_eq!(data.m, int(1));
        assert_eq!(data.cardinality(), 21);
    }

    #[test]
    fn semi_crab_invalid_g() {
        // g dividing gh belongs to decompose_crab.
        assert!(semi_crab(&int(672), &int(3), None).is_err());
        assert!(semi_crab(&int(672), &int(2), None).is_err());
        assert!(semi_crab(&int(672), &int(4), None).is_err());
        // For prime g = 3 (mod 4) not dividing gh, no factor pair survives:
        // f1 + f2 = 0 (mod g) would make -1 a quadratic residue.
        for g in [11i64, 19, 23, 31, 43, 47] {
            assert!(semi_crab_data(&int(672), &int(g), None).is_err(), "g={g}");
        }
        // while g = 1 (mod 4) primes work:
        for g in [5i64, 13, 17] {
            assert!(semi_crab_data(&int(672), &int(g), None).is_ok(), "g={g}");
        }
    }

    #[test]
    fn circle_rational_counts() {
        assert_eq!(circle_rational(&int(5)).unwrap().len(), 4);
        assert_eq!(circle_rational(&int(25)).unwrap().len(), 6);
        assert_eq!(circle_rational(&int(65)).unwrap().len(), 8);
        assert!(circle_rational(&int(15)).is_err());
        assert!(circle_rational(&int(13 * 7)).is_err());
    }

    #[test]
    fn circle_65() {
        let s = circle_set(&int(65)).unwrap();
        assert_eq!(s.len(), 9);
        assert_eq!(diameter(&s).unwrap(), int(130));
        let nf = canon::normal_form(&s).unwrap();
        assert_eq!(
            nf.serialize(),
            "0,0;0,-32;-30,40;-30,-72;-63,-16;-96,40;-96,-72;-126,0;-126,-32"
        );
    }

    #[test]
    fn circle_tilde_examples() {
        let t5 = circle_tilde(&int(5)).unwrap();
        assert_eq!(t5.len(), 4);
        assert_eq!(diameter(&t5).unwrap(), int(5));
        assert!(canon::isomorphic(&t5, &rectangle(&pair(3, 4))).unwrap());
        let t25 = circle_tilde(&int(25)).unwrap();
        assert_eq!(t25.len(), 6);
        assert_eq!(diameter(&t25).unwrap(), int(25));
        let t65 = circle_tilde(&int(65)).unwrap();
        assert_eq!(t65.len(), 8);
        assert_eq!(diameter(&t65).unwrap(), int(65));
    }

    #[test]
    fn circle_scaled_trivial() {
        let sets = circle_scaled(&int(25), &int(1)).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].len(), 6);
        assert_eq!(diameter(&sets[0]).unwrap(), int(50));
    }

    #[test]
    fn constructions_have_characteristic_one() {
        for s in [
            rectangle(&pair(3, 4)),
            rhombus(&pair(5, 12)),
            decompose_crab(&int(12)).unwrap(),
            circle_tilde(&int(25)).unwrap(),
        ] {
            assert!(is_integral_set(&s));
            assert_eq!(characteristic(&s).unwrap(), int(1));
        }
    }
}
