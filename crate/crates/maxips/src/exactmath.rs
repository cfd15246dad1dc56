//! Arbitrary-precision integer kernels: integer square roots, perfect-square
//! tests, factorization, divisors, sums of two squares and Gaussian integer
//! arithmetic. All results are exact.


use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Int, Rat, Result};

/// Gaussian integer a + bi.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: Int,
    pub im: Int,
}

impl GaussInt {
    pub fn new(re: impl Into<Int>, im: impl Into<Int>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn norm(&self) -> Int {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> GaussInt {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn mul(&self, other: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// Multiplication by i.
    pub fn mul_i(&self) -> GaussInt {
        GaussInt { re: -&self.im, im: self.re.clone() }
    }

    pub fn pow(&self, mut exp: u32) -> GaussInt {
        let mut base = self.clone();
        let mut acc = GaussInt::new(1, 0);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }
}

/// Floor of the square root of a non-negative integer, by Newton iteration.
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::domain(format!("isqrt of negative number {n}")));
    }
    if let Some(v) = n.to_u64() {
        return Ok(Int::from(isqrt_u64(v)));
    }
    // Initial guess: 2^(ceil(bits/2)) >= sqrt(n).
    let bits = n.bits();
    let mut x: Int = Int::one() << ((bits + 1) / 2) as usize;
    loop {
        let y: Int = (&x + n / &x) >> 1;
        if y >= x {
            return Ok(x);
        }
        x = y;
    }
}

fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    // The float estimate can be off by one in either direction.
    while x.checked_mul(x).map_or(true, |s| s > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).map_or(false, |s| s <= n) {
        x += 1;
    }
    x
}

/// Returns `Some(s)` with s >= 0 and s^2 = n, or `None`.
pub fn perfect_square_root(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    // Squares end in 0,1,4,9 mod 16; cheap rejection for the hot paths.
    let low = (n & Int::from(15u32)).to_u32().unwrap();
    if ![0, 1, 4, 9].contains(&low) {
        return None;
    }
    let s = isqrt(n).expect("non-negative");
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

pub fn is_perfect_square(n: &Int) -> bool {
    perfect_square_root(n).is_some()
}

/// Exact square root of a non-negative rational, if it is rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = perfect_square_root(r.numer())?;
    let den = perfect_square_root(r.denom())?;
    Some(Rat::new(num, den))
}

/// Deterministic Miller-Rabin; the fixed base set is proven for n < 3.3 * 10^24
/// and the inputs in this crate stay far below that.
pub fn is_prime(n: &Int) -> bool {
    let two = Int::from(2);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = Int::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1: Int = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d: Int = &n_minus_1 >> s as usize;
    'bases: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = Int::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Exact prime factorization of n >= 1, primes ascending.
pub fn factorize(n: &Int) -> Result<Vec<(Int, u32)>> {
    if n < &Int::one() {
        return Err(Error::domain(format!("factorize requires n >= 1, got {n}")));
    }
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let mut m = n.clone();
    // Trial division up to 10^6 covers everything this artifact produces;
    // Pollard rho handles stray larger cofactors.
    let push = |p: Int, e: u32, factors: &mut Vec<(Int, u32)>| {
        if e > 0 {
            factors.push((p, e));
        }
    };
    for p in [2u64, 3, 5] {
        let pb = Int::from(p);
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        push(pb, e, &mut factors);
    }
    let mut d: u64 = 7;
    let wheel = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut wi = 0;
    while d <= 1_000_000 {
        if let Some(mu) = m.to_u64() {
            if (d as u128) * (d as u128) > mu as u128 {
                break;
            }
        }
        let db = Int::from(d);
        if (&m % &db).is_zero() {
            let mut e = 0;
            while (&m % &db).is_zero() {
                m /= &db;
                e += 1;
            }
            push(db, e, &mut factors);
        }
        d += wheel[wi];
        wi = (wi + 1) % wheel.len();
    }
    if !m.is_one() {
        let mut rest = vec![m];
        while let Some(c) = rest.pop() {
            if is_prime(&c) {
                match factors.iter_mut().find(|(p, _)| *p == c) {
                    Some((_, e)) => *e += 1,
                    None => factors.push((c, 1)),
                }
            } else {
                let f = pollard_rho(&c);
                rest.push(&c / &f);
                rest.push(f);
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(factors)
}

/// Brent-style Pollard rho; returns a non-trivial factor of composite n.
fn pollard_rho(n: &Int) -> Int {
    if n.is_even() {
        return Int::from(2);
    }
    let one = Int::one();
    for c in 1u32.. {
        let cb = Int::from(c);
        let f = |x: &Int| (x * x + &cb) % n;
        let mut x = Int::from(2);
        let mut y = Int::from(2);
        let mut d = Int::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        let _ = &one;
    }
    unreachable!()
}

/// The unique square-free k with |n| = q^2 * k.
pub fn squarefree_part(n: &Int) -> Result<Int> {
    if n.is_zero() {
        return Err(Error::domain("squarefree_part of zero"));
    }
    let mut k = Int::one();
    for (p, e) in factorize(&n.abs())? {
        if e % 2 == 1 {
            k *= p;
        }
    }
    Ok(k)
}

/// All positive divisors of n >= 1 in ascending order.
pub fn divisors(n: &Int) -> Result<Vec<Int>> {
    if n < &Int::one() {
        return Err(Error::domain(format!("divisors requires n >= 1, got {n}")));
    }
    let mut divs = vec![Int::one()];
    for (p, e) in factorize(n)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        let mut pk = Int::one();
        for _ in 0..=e {
            for d in &divs {
                next.push(d * &pk);
            }
            pk *= &p;
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Number of positive divisors.
pub fn tau(n: &Int) -> Result<Int> {
    let mut t = Int::one();
    for (_, e) in factorize(n)? {
        t *= Int::from(e + 1);
    }
    Ok(t)
}

/// Default crossover between the brute-force scan and the Gaussian-integer
/// composition path of [`sum_of_two_squares`].
pub const SUM_OF_TWO_SQUARES_BRUTE_LIMIT: u64 = 100_000_000;

/// All integer pairs (x, y), signs and order included, with x^2 + y^2 = n.
/// Sorted by the canonical point order so output is deterministic.
pub fn sum_of_two_squares(n: &Int) -> Result<Vec<(Int, Int)>> {
    sum_of_two_squares_with_threshold(n, SUM_OF_TWO_SQUARES_BRUTE_LIMIT)
}

pub fn sum_of_two_squares_with_threshold(n: &Int, brute_limit: u64) -> Result<Vec<(Int, Int)>> {
    if n.is_negative() {
        return Ok(Vec::new());
    }
    if n.is_zero() {
        return Ok(vec![(Int::zero(), Int::zero())]);
    }
    let base = match n.to_u64() {
        Some(v) if v <= brute_limit => s2s_brute(v),
        _ => s2s_gaussian(n)?,
    };
    let mut out: Vec<(Int, Int)> = Vec::new();
    for (x, y) in base {
        for (a, b) in [(&x, &y), (&y, &x)] {
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push((a * Int::from(sa), b * Int::from(sb)));
            }
        }
    }
    out.sort_by(|p, q| crate::canon::coord_cmp(&p.0, &p.1, &q.0, &q.1));
    out.dedup();
    Ok(out)
}

/// Base representations 0 <= x <= y via direct scan; exact machine arithmetic.
fn s2s_brute(n: u64) -> Vec<(Int, Int)> {
    let mut base = Vec::new();
    let mut x: u64 = 0;
    while x * x * 2 <= n {
        let rem = n - x * x;
        let y = isqrt_u64(rem);
        if y * y == rem {
            base.push((Int::from(x), Int::from(y)));
        }
        x += 1;
    }
    base
}

/// Base representations via composition of Gaussian prime factorizations.
fn s2s_gaussian(n: &Int) -> Result<Vec<(Int, Int)>> {
    let factors = factorize(n)?;
    let mut odd_prime_parts: Vec<(GaussInt, u32)> = Vec::new();
    let mut fixed = GaussInt::new(1, 0);
    for (p, e) in &factors {
        if p == &Int::from(2) {
            fixed = fixed.mul(&GaussInt::new(1, 1).pow(*e));
        } else if (p % Int::from(4u32)) == Int::from(3) {
            if e % 2 == 1 {
                return Ok(Vec::new());
            }
            fixed = fixed.mul(&GaussInt { re: p.clone(), im: Int::zero() }.pow(e / 2));
        } else {
            let omega = gaussian_prime_factor(p)?;
            odd_prime_parts.push((omega, *e));
        }
    }
    let mut reps: Vec<GaussInt> = vec![fixed];
    for (omega, e) in &odd_prime_parts {
        let conj = omega.conj();
        let mut next = Vec::with_capacity(reps.len() * (*e as usize + 1));
        for s in 0..=*e {
            let part = omega.pow(s).mul(&conj.pow(*e - s));
            for r in &reps {
                next.push(r.mul(&part));
            }
        }
        reps = next;
    }
    let mut base: Vec<(Int, Int)> = reps
        .into_iter()
        .map(|z| {
            let (a, b) = (z.re.abs(), z.im.abs());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    base.sort();
    base.dedup();
    Ok(base)
}

/// The Gaussian prime omega = a + bi with a^2 + b^2 = p, normalized a >= b >= 1,
/// for a prime p congruent to 1 mod 4. Uses x^((p-1)/4) to find a square root
/// of -1 and a Cornacchia-style Euclidean reduction.
pub fn gaussian_prime_factor(p: &Int) -> Result<GaussInt> {
    let four = Int::from(4);
    if (p % &four) != Int::one() || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not a prime congruent to 1 mod 4")));
    }
    let exp: Int = (p - 1) / &four;
    let mut root = Int::zero();
    for x in 2u32.. {
        let r = Int::from(x).modpow(&exp, p);
        if (&r * &r) % p == p - 1 {
            root = r;
            break;
        }
    }
    // Euclidean descent: the first remainder below sqrt(p) is one leg.
    let mut a = p.clone();
    let mut b = root;
    let sqrt_p = isqrt(p)?;
    while b > sqrt_p {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    let other2: Int = p - &b * &b;
    let other = perfect_square_root(&other2)
        .ok_or_else(|| Error::Internal(format!("cornacchia failed for {p}")))?;
    let (hi, lo) = if b >= other { (b, other) } else { (other, b) };
    Ok(GaussInt { re: hi, im: lo })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(25)).unwrap(), int(5));
        // 2066^2 = 4268356
        assert_eq!(int(2066) * int(2066), int(4268356));
        assert_eq!(isqrt(&int(4268356)).unwrap(), int(2066));
        assert!(isqrt(&int(-1)).is_err());
    }

    #[test]
    fn isqrt_bounds_around_large_values() {
        let big: Int = Int::from(10u32).pow(40) + 12345;
        let s = isqrt(&big).unwrap();
        assert!(&s * &s <= big);
        assert!((&s + 1) * (&s + 1) > big);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(perfect_square_root(&int(576)), Some(int(24)));
        assert_eq!(perfect_square_root(&int(63)), None);
        assert_eq!(perfect_square_root(&int(360)), None); // 18^2=324, 19^2=361
        assert_eq!(perfect_square_root(&int(-4)), None);
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&int(576)).unwrap(), int(1));
        assert_eq!(squarefree_part(&int(63)).unwrap(), int(7));
        assert_eq!(squarefree_part(&int(12)).unwrap(), int(3));
        assert!(squarefree_part(&int(0)).is_err());
    }

    #[test]
    fn divisors_examples() {
        let d900: Vec<i64> = vec![
            1, 2, 3, 4, 5, 6, 9, 10, 12, 15, 18, 20, 25, 30, 36, 45, 50, 60, 75, 90, 100, 150,
            180, 225, 300, 450, 900,
        ];
        assert_eq!(divisors(&int(900)).unwrap(), d900.into_iter().map(int).collect::<Vec<_>>());
        assert_eq!(divisors(&int(1)).unwrap(), vec![int(1)]);
        assert_eq!(divisors(&int(65)).unwrap(), vec![int(1), int(5), int(13), int(65)]);
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(&int(672)).unwrap(), vec![(int(2), 5), (int(3), 1), (int(7), 1)]);
        assert_eq!(
            factorize(&int(451584)).unwrap(),
            vec![(int(2), 10), (int(3), 2), (int(7), 2)]
        );
        assert_eq!(factorize(&int(1)).unwrap(), vec![]);
    }

    #[test]
    fn factorize_reconstructs_and_is_prime() {
        for n in 1i64..2000 {
            let fs = factorize(&int(n)).unwrap();
            let mut prod = Int::one();
            for (p, e) in &fs {
                assert!(is_prime(p), "{p} not prime (factor of {n})");
                prod *= p.pow(*e);
            }
            assert_eq!(prod, int(n));
        }
    }

    #[test]
    fn factorize_large_semiprime() {
        let n: Int = Int::from(1_000_003u64) * Int::from(1_000_033u64);
        let fs = factorize(&n).unwrap();
        assert_eq!(fs, vec![(Int::from(1_000_003u64), 1), (Int::from(1_000_033u64), 1)]);
    }

    #[test]
    fn sum_of_two_squares_examples() {
        let r25 = sum_of_two_squares(&int(25)).unwrap();
        assert_eq!(r25.len(), 12);
        assert!(r25.contains(&(int(3), int(4))));
        assert!(r25.contains(&(int(0), int(-5))));
        let r2 = sum_of_two_squares(&int(2)).unwrap();
        assert_eq!(r2.len(), 4);
        let r4225 = sum_of_two_squares(&int(4225)).unwrap();
        for p in [(16, 63), (25, 60), (33, 56), (39, 52)] {
            assert!(r4225.contains(&(int(p.0), int(p.1))));
        }
        assert_eq!(sum_of_two_squares(&int(0)).unwrap(), vec![(int(0), int(0))]);
        assert_eq!(sum_of_two_squares(&int(3)).unwrap(), vec![]);
    }

    #[test]
    fn sum_of_two_squares_paths_agree() {
        for n in 0u64..3000 {
            let brute = sum_of_two_squares_with_threshold(&Int::from(n), u64::MAX).unwrap();
            let gauss = sum_of_two_squares_with_threshold(&Int::from(n), 0).unwrap();
            assert_eq!(brute, gauss, "mismatch at n={n}");
        }
    }

    #[test]
    fn gaussian_prime_examples() {
        assert_eq!(gaussian_prime_factor(&int(5)).unwrap(), GaussInt::new(2, 1));
        assert_eq!(gaussian_prime_factor(&int(13)).unwrap(), GaussInt::new(3, 2));
        assert_eq!(gaussian_prime_factor(&int(17)).unwrap(), GaussInt::new(4, 1));
        assert!(gaussian_prime_factor(&int(7)).is_err());
        assert!(gaussian_prime_factor(&int(21)).is_err());
        for p in [5i64, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 1_000_249] {
            let w = gaussian_prime_factor(&int(p)).unwrap();
            assert_eq!(w.norm(), int(p));
            assert!(w.re >= w.im && w.im >= Int::one());
        }
    }
}
