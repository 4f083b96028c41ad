//! Real root isolation (Descartes bisection) and Sturm sequence counting.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{zpoly, QPoly};
use super::rational::Rational;

/// One isolated real root of a square-free polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootBox {
    /// The root is this rational number.
    Exact(Rational),
    /// Exactly one root in the open interval, neither endpoint is a root.
    Open(Rational, Rational),
}

impl RootBox {
    pub fn lower(&self) -> &Rational {
        match self {
            RootBox::Exact(r) => r,
            RootBox::Open(lo, _) => lo,
        }
    }
}

/// Isolates the real roots of a square-free integer polynomial, sorted increasingly.
pub fn isolate_squarefree(p: &[BigInt]) -> Vec<RootBox> {
    let mut p = zpoly::trim(p.to_vec());
    let mut out = Vec::new();
    if p.len() <= 1 {
        return out;
    }
    let zero_root = p[0].is_zero();
    if zero_root {
        out.push(RootBox::Exact(Rational::zero()));
        p.remove(0);
    }
    let mut pos = positive_roots(&p);
    let neg_p: Vec<BigInt> = p.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
    let mut neg: Vec<RootBox> = positive_roots(&neg_p)
        .into_iter()
        .map(|b| match b {
            RootBox::Exact(r) => RootBox::Exact(-r),
            RootBox::Open(lo, hi) => RootBox::Open(-hi, -lo),
        })
        .collect();
    neg.reverse();
    let mut all = neg;
    all.append(&mut out);
    all.append(&mut pos);
    let full = zpoly::trim(if zero_root { std::iter::once(BigInt::zero()).chain(p).collect() } else { p });
    all.into_iter().map(|b| detach_endpoints(&full, b)).collect()
}

/// Shrinks an open box until neither endpoint is a root of `p`.
/// Bisection can leave an exact root (found at a midpoint) on the boundary of a neighbouring box.
fn detach_endpoints(p: &[BigInt], b: RootBox) -> RootBox {
    use std::cmp::Ordering;
    let RootBox::Open(mut lo, mut hi) = b else { return b };
    let dp: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let mut inside_lo = match zpoly::sign_at(p, &lo) {
        Ordering::Equal => zpoly::sign_at(&dp, &lo),
        s => s,
    };
    while zpoly::sign_at(p, &lo) == Ordering::Equal || zpoly::sign_at(p, &hi) == Ordering::Equal {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        match zpoly::sign_at(p, &mid) {
            Ordering::Equal => return RootBox::Exact(mid),
            s if s == inside_lo => {
                lo = mid;
                inside_lo = s;
            }
            _ => hi = mid,
        }
    }
    RootBox::Open(lo, hi)
}

fn bit_len(c: &BigInt) -> i64 {
    c.bits() as i64
}

/// Roots in (0, inf) of `p` with `p(0) != 0`.
fn positive_roots(p: &[BigInt]) -> Vec<RootBox> {
    let n = p.len() - 1;
    if n == 0 || zpoly::variations(p) == 0 {
        return vec![];
    }
    // Cauchy-style bound 2^k with |root| < 1 + max|a_i / a_n|
    let lead = bit_len(&p[n]);
    let k = p[..n].iter().map(|c| bit_len(c) - lead + 2).max().unwrap_or(1).max(1) as u64;
    // q(x) = p(2^k x), roots in (0, 1)
    let q: Vec<BigInt> = p.iter().enumerate().map(|(i, c)| c << (k * i as u64)).collect();
    let scale = Rational::from_integer(BigInt::one() << k);

    let mut out = Vec::new();
    // (poly on (0,1), numerator c, level): interval (c/2^level, (c+1)/2^level)
    let mut stack = vec![(q, BigInt::zero(), 0u64)];
    while let Some((f, c, level)) = stack.pop() {
        let v = zpoly::unit_interval_variations(&f);
        let denom = Rational::from_integer(BigInt::one() << level);
        if v == 0 {
            continue;
        }
        if v == 1 {
            let lo = Rational::from_integer(c.clone()) / &denom * &scale;
            let hi = Rational::from_integer(&c + 1) / &denom * &scale;
            out.push(RootBox::Open(lo, hi));
            continue;
        }
        let deg = f.len() - 1;
        // f_L(x) = 2^deg f(x/2)
        let fl: Vec<BigInt> = f.iter().enumerate().map(|(i, a)| a << (deg - i)).collect();
        // midpoint check: f(1/2) = 0 <=> f_L(1) = 0
        let mid_val: BigInt = fl.iter().sum();
        let mut fr = fl.clone();
        zpoly::taylor_shift1(&mut fr);
        let c2 = &c * 2;
        if mid_val.is_zero() {
            let mid = Rational::from_integer(&c2 + 1) / Rational::from_integer(BigInt::one() << (level + 1)) * &scale;
            out.push(RootBox::Exact(mid));
        }
        stack.push((fr, &c2 + 1, level + 1));
        stack.push((fl, c2, level + 1));
    }
    out.sort_by(|a, b| a.lower().cmp(b.lower()));
    out
}

/// Sturm chain of a polynomial (signed remainder sequence, scaled by positive constants).
pub fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        // keep sign, shrink size
        let prim = QPoly::from_ints(&positive_primitive(&(-&r)));
        chain.push(prim);
    }
    chain
}

fn positive_primitive(p: &QPoly) -> Vec<BigInt> {
    // primitive with the sign of the original leading coefficient
    let mut v = p.to_primitive_ints();
    if p.lc().is_negative() {
        v.iter_mut().for_each(|c| *c = -c.clone());
    }
    v
}

fn sign_changes_at(chain: &[QPoly], x: &Rational) -> usize {
    let vals: Vec<BigInt> = chain
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_positive() {
                BigInt::one()
            } else if v.is_negative() {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    zpoly::variations(&vals)
}

/// Number of distinct real roots of `p` in the half-open interval (a, b].
pub fn sturm_count(p: &QPoly, a: &Rational, b: &Rational) -> usize {
    if p.is_constant() {
        return 0;
    }
    let chain = sturm_chain(p);
    sign_changes_at(&chain, a).saturating_sub(sign_changes_at(&chain, b))
}

/// Number of distinct real roots of `p` on the whole line.
pub fn sturm_count_all(p: &QPoly) -> usize {
    if p.is_constant() {
        return 0;
    }
    let chain = sturm_chain(p);
    let signs_inf = |neg: bool| -> usize {
        let vals: Vec<BigInt> = chain
            .iter()
            .map(|q| {
                let d = q.degree().unwrap_or(0);
                let mut s = if q.lc().is_positive() { 1 } else { -1 };
                if neg && d % 2 == 1 {
                    s = -s;
                }
                BigInt::from(s)
            })
            .collect();
        zpoly::variations(&vals)
    };
    signs_inf(true).saturating_sub(signs_inf(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::int;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn isolates_sqrt_two() {
        let r = isolate_squarefree(&ints(&[-2, 0, 1]));
        assert_eq!(r.len(), 2);
        for b in &r {
            match b {
                RootBox::Open(lo, hi) => {
                    let p = ints(&[-2, 0, 1]);
                    assert_ne!(zpoly::sign_at(&p, lo), zpoly::sign_at(&p, hi));
                }
                RootBox::Exact(_) => panic!("sqrt 2 is irrational"),
            }
        }
    }

    #[test]
    fn isolates_rational_roots_exactly_when_dyadic() {
        let r = isolate_squarefree(&ints(&[0, -1, 0, 1]));
        assert_eq!(r.len(), 3);
        assert_eq!(r[1], RootBox::Exact(int(0)));
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_squarefree(&ints(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn sturm_counts() {
        let p = QPoly::from_i64(&[0, -1, 0, 1]); // x^3 - x
        assert_eq!(sturm_count_all(&p), 3);
        assert_eq!(sturm_count(&p, &int(-2), &int(0)), 2);
        assert_eq!(sturm_count(&p, &int(0), &int(2)), 1);
        assert_eq!(sturm_count_all(&QPoly::from_i64(&[1, 0, 1])), 0);
    }

    #[test]
    fn box_endpoints_are_never_roots() {
        // roots ±1 are found at bisection midpoints next to open boxes
        let p = ints(&[-1, 0, 99, 0, -99, 0, 1]);
        let boxes = isolate_squarefree(&p);
        assert_eq!(boxes.len(), 6);
        for b in &boxes {
            if let RootBox::Open(lo, hi) = b {
                assert_ne!(zpoly::sign_at(&p, lo), std::cmp::Ordering::Equal);
                assert_ne!(zpoly::sign_at(&p, hi), std::cmp::Ordering::Equal);
            }
        }
    }
}
