//! Exact univariate quadratic solving over the integers and rationals.

use num_traits::{Signed, Zero};

use crate::exactmath::perfect_square_root;
use crate::{Int, Rat};

/// Solutions of a*x^2 + b*x + c = 0 over the requested domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Roots<T> {
    Finite(Vec<T>),
    /// The equation reduced to 0 = 0; every value solves it.
    Indeterminate,
}

/// Integer roots only; rational roots are discarded.
pub(crate) fn integer_roots(a: &Int, b: &Int, c: &Int) -> Roots<Int> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() { Roots::Indeterminate } else { Roots::Finite(vec![]) };
        }
        let (q, r) = num_integer::Integer::div_rem(&-c, b);
        return Roots::Finite(if r.is_zero() { vec![q] } else { vec![] });
    }
    let disc = b * b - Int::from(4) * a * c;
    let Some(s) = perfect_square_root(&disc) else {
        return Roots::Finite(vec![]);
    };
    let two_a = Int::from(2) * a;
    let mut out = Vec::with_capacity(2);
    for num in [-b + &s, -b - &s] {
        let (q, r) = num_integer::Integer::div_rem(&num, &two_a);
        if r.is_zero() && !out.contains(&q) {
            out.push(q);
        }
    }
    Roots::Finite(out)
}

/// Rational roots; exist exactly when the discriminant is a perfect square.
pub(crate) fn rational_roots(a: &Int, b: &Int, c: &Int) -> Roots<Rat> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() { Roots::Indeterminate } else { Roots::Finite(vec![]) };
        }
        return Roots::Finite(vec![Rat::new(-c, b.clone())]);
    }
    let disc = b * b - Int::from(4) * a * c;
    if disc.is_negative() {
        return Roots::Finite(vec![]);
    }
    let Some(s) = perfect_square_root(&disc) else {
        return Roots::Finite(vec![]);
    };
    let two_a = Int::from(2) * a;
    let mut out = vec![Rat::new(-b + &s, two_a.clone())];
    if !s.is_zero() {
        out.push(Rat::new(-b - &s, two_a));
    }
    Roots::Finite(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn integer_quadratics() {
        // (x-3)(x+5) = x^2 + 2x - 15
        assert_eq!(
            integer_roots(&int(1), &int(2), &int(-15)),
            Roots::Finite(vec![int(3), int(-5)])
        );
        // 2x^2 - x - 1 has roots 1 and -1/2; only 1 is integral.
        assert_eq!(integer_roots(&int(2), &int(-1), &int(-1)), Roots::Finite(vec![int(1)]));
        assert_eq!(integer_roots(&int(1), &int(0), &int(2)), Roots::Finite(vec![]));
        assert_eq!(integer_roots(&int(0), &int(0), &int(0)), Roots::Indeterminate);
        assert_eq!(integer_roots(&int(0), &int(3), &int(-6)), Roots::Finite(vec![int(2)]));
    }

    #[test]
    fn rational_quadratics() {
        let Roots::Finite(r) = rational_roots(&int(2), &int(-1), &int(-1)) else {
            panic!()
        };
        assert_eq!(r, vec![Rat::from_integer(int(1)), Rat::new(int(-1), int(2))]);
        assert_eq!(rational_roots(&int(1), &int(0), &int(-2)), Roots::Finite(vec![]));
        // Double root.
        let Roots::Finite(r) = rational_roots(&int(1), &int(-4), &int(4)) else {
            panic!()
        };
        assert_eq!(r, vec![Rat::from_integer(int(2))]);
    }
}
