//! Rational helpers on top of `BigRational`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p` for integers and `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in(&-hi, &-lo);
    }
    // 0 < lo <= hi: continued fraction descent.
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl + Rational::one() <= *hi {
        return lo.floor() + Rational::one();
    }
    let whole = lo.floor();
    let a = lo - &whole;
    let b = hi - &whole;
    // a in (0,1), b in (a, 1) or equal 1 handled above
    let inner = simplest_in(&b.recip(), &a.recip());
    whole + inner.recip()
}

/// Lower and upper rational bounds on sqrt(x) with gap at most `2^-bits` (x >= 0).
pub fn sqrt_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    debug_assert!(!x.is_negative());
    if x.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let mut lo = Rational::zero();
    let mut hi = if *x > Rational::one() { x.clone() } else { Rational::one() };
    let eps = Rational::new(BigInt::one(), BigInt::one() << bits);
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / int(2);
        match (&mid * &mid).cmp(x) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return (mid.clone(), mid),
        }
    }
    (lo, hi)
}

/// Exact rational square root, if there is one.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub(crate) fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplest_rational_picks_small_denominator() {
        assert_eq!(simplest_in(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_in(&rat(-4, 10), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_in(&rat(-1, 10), &rat(1, 10)), int(0));
        assert_eq!(simplest_in(&rat(7, 5), &rat(7, 5)), rat(7, 5));
        assert_eq!(simplest_in(&rat(5, 2), &rat(7, 2)), int(3));
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["3/5", "-7", "0", "-1/2"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn sqrt_helpers() {
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&int(2)), None);
        let (lo, hi) = sqrt_bounds(&int(2), 20);
        assert!(&lo * &lo <= int(2) && &hi * &hi >= int(2));
    }
}
