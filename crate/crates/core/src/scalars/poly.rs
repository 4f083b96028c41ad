//! Dense univariate polynomials over the rationals and over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, lcm_of_denominators, Rational};

/// Polynomial with rational coefficients, stored lowest degree first and
/// trimmed so that the leading coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let dl = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Exact quotient (the remainder is discarded).
    pub fn div_exact(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).0
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = primitive_q(&r);
        }
        a.monic()
    }

    /// Monic square-free part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> QPoly {
        if self.is_constant() {
            return self.monic();
        }
        let g = QPoly::gcd(self, &self.derivative());
        self.div_exact(&g).monic()
    }

    /// `p(x + r)`
    pub fn shift(&self, r: &Rational) -> QPoly {
        let mut out = QPoly::zero();
        let lin = QPoly::new(vec![r.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &QPoly::constant(c.clone());
        }
        out
    }

    /// `p(s x)`
    pub fn scale_var(&self, s: &Rational) -> QPoly {
        let mut pow = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(c * &pow);
            pow *= s;
        }
        QPoly::new(v)
    }

    /// `p(-x)`
    pub fn negate_var(&self) -> QPoly {
        self.scale_var(&-Rational::one())
    }

    /// `x^deg p(1/x)`
    pub fn reverse(&self) -> QPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        QPoly::new(v)
    }

    /// `p(x^2)`
    pub fn compose_square(&self) -> QPoly {
        let mut v = vec![Rational::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = c.clone();
        }
        QPoly::new(v)
    }

    /// Power sums `s_0..=s_n` of the roots (with multiplicity) via Newton's identities.
    pub fn power_sums(&self, n: usize) -> Vec<Rational> {
        let m = self.monic();
        let d = m.degree().unwrap_or(0);
        // m = x^d + a_{d-1} x^{d-1} + ... ; e_k = (-1)^k a_{d-k}
        let a = |k: usize| -> Rational {
            if k > d {
                Rational::zero()
            } else {
                m.coeff(d - k)
            }
        };
        let mut s = vec![Rational::from_integer(d.into())];
        for k in 1..=n {
            // s_k = -(k a_{d-k} + sum_{i=1}^{k-1} a_{d-i} s_{k-i})   (a_{d-i} = coefficient c_i)
            let mut acc = a(k) * Rational::from_integer(k.into());
            for i in 1..k.min(d + 1) {
                acc += a(i) * &s[k - i];
            }
            s.push(-acc);
        }
        s
    }

    /// Monic polynomial of degree `deg` whose root power sums are `sums[1..=deg]`.
    pub fn from_power_sums(deg: usize, sums: &[Rational]) -> QPoly {
        // c_0 = 1 (leading), k c_k = -sum_{i=1}^k s_i c_{k-i}
        let mut c = vec![Rational::one()];
        for k in 1..=deg {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &sums[i] * &c[k - i];
            }
            c.push(-acc / Rational::from_integer(k.into()));
        }
        c.reverse();
        QPoly::new(c)
    }

    /// Primitive integer polynomial with positive leading coefficient and the same roots.
    pub fn to_primitive_ints(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let l = lcm_of_denominators(&self.coeffs);
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut v = zpoly::primitive(&ints);
        if v.last().is_some_and(|c| c.is_negative()) {
            v.iter_mut().for_each(|c| *c = -c.clone());
        }
        v
    }

    /// Resultant of two polynomials (Euclidean algorithm over the rationals).
    pub fn resultant(a: &QPoly, b: &QPoly) -> Rational {
        if a.is_zero() || b.is_zero() {
            return Rational::zero();
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut res = Rational::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                return res * num_traits::pow(b.lc(), da);
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return Rational::zero();
            }
            let dr = r.degree().unwrap();
            if (da * db) % 2 == 1 {
                res = -res;
            }
            res *= num_traits::pow(b.lc(), da - dr);
            a = b;
            b = r;
        }
    }
}

fn primitive_q(p: &QPoly) -> QPoly {
    if p.is_zero() {
        return p.clone();
    }
    QPoly::from_ints(&p.to_primitive_ints())
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Helpers on integer coefficient vectors (lowest degree first).
pub mod zpoly {
    use super::*;
    use std::cmp::Ordering;

    pub fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn content(p: &[BigInt]) -> BigInt {
        p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(p: &[BigInt]) -> Vec<BigInt> {
        let g = content(p);
        if g.is_zero() || g.is_one() {
            return p.to_vec();
        }
        p.iter().map(|c| c / &g).collect()
    }

    /// Sign of `p(x)` for rational `x`, using only integer arithmetic.
    pub fn sign_at(p: &[BigInt], x: &Rational) -> Ordering {
        if p.is_empty() {
            return Ordering::Equal;
        }
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        // Homogenised Horner: sum a_i n^i d^(deg-i)
        for c in p.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        // acc currently equals sum a_i n^i d^{deg - i} * d^0; the extra factors of d are positive.
        acc.sign_ordering()
    }

    trait SignOrd {
        fn sign_ordering(&self) -> Ordering;
    }
    impl SignOrd for BigInt {
        fn sign_ordering(&self) -> Ordering {
            if self.is_positive() {
                Ordering::Greater
            } else if self.is_negative() {
                Ordering::Less
            } else {
                Ordering::Equal
            }
        }
    }

    /// Number of sign variations, ignoring zeros.
    pub fn variations(p: &[BigInt]) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for c in p {
            let s = if c.is_positive() {
                1
            } else if c.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// In-place `p(x) -> p(x + 1)`.
    pub fn taylor_shift1(p: &mut [BigInt]) {
        let n = p.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = p[j + 1].clone();
                p[j] += t;
            }
        }
    }

    /// Upper bound on the number of roots in the open interval (0, 1)
    /// (exact when it is 0 or 1).
    pub fn unit_interval_variations(p: &[BigInt]) -> usize {
        let mut r: Vec<BigInt> = p.iter().rev().cloned().collect();
        taylor_shift1(&mut r);
        variations(&r)
    }

    /// `p(a + (b - a) x)` scaled to a primitive integer polynomial.
    pub fn to_unit_interval(p: &[BigInt], a: &Rational, b: &Rational) -> Vec<BigInt> {
        let q = QPoly::from_ints(p).shift(a).scale_var(&(b - a));
        q.to_primitive_ints()
    }

    /// Mod-p check that `p` (with leading coefficient not divisible by the prime)
    /// is square-free over the rationals. `false` means "not certified".
    pub fn certify_squarefree(p: &[BigInt]) -> bool {
        const PRIMES: [u64; 4] = [2_147_483_647, 2_147_483_629, 2_147_483_587, 1_000_000_007];
        PRIMES.iter().any(|&m| squarefree_mod(p, m))
    }

    fn squarefree_mod(p: &[BigInt], m: u64) -> bool {
        let red: Vec<u64> = p.iter().map(|c| c.mod_floor(&BigInt::from(m)).try_into().unwrap()).collect();
        if red.last().copied().unwrap_or(0) == 0 {
            return false;
        }
        let der: Vec<u64> = red.iter().enumerate().skip(1).map(|(i, c)| (c * (i as u64 % m)) % m).collect();
        let g = gcd_mod(red, der, m);
        g.len() == 1
    }

    fn trim_mod(mut p: Vec<u64>) -> Vec<u64> {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    fn inv_mod(a: u64, m: u64) -> u64 {
        pow_mod(a, m - 2, m)
    }

    fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
        let mut r = 1u64;
        a %= m;
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * a as u128) % m as u128) as u64;
            }
            a = ((a as u128 * a as u128) % m as u128) as u64;
            e >>= 1;
        }
        r
    }

    fn gcd_mod(a: Vec<u64>, b: Vec<u64>, m: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim_mod(a), trim_mod(b));
        while !b.is_empty() {
            let inv = inv_mod(*b.last().unwrap(), m);
            let db = b.len() - 1;
            while a.len() > db && !a.is_empty() {
                let shift = a.len() - 1 - db;
                let c = ((*a.last().unwrap() as u128 * inv as u128) % m as u128) as u64;
                for (j, bc) in b.iter().enumerate() {
                    let sub = ((c as u128 * *bc as u128) % m as u128) as u64;
                    a[shift + j] = (a[shift + j] + m - sub) % m;
                }
                a = trim_mod(a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{int, rat};

    #[test]
    fn division_and_gcd() {
        let a = QPoly::from_i64(&[-1, 0, 1]); // x^2 - 1
        let b = QPoly::from_i64(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, QPoly::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        let c = QPoly::from_i64(&[-1, 1]);
        let d = QPoly::from_i64(&[2, 1]);
        assert_eq!(QPoly::gcd(&(&a * &d), &(&c * &d)), &c * &d);
    }

    #[test]
    fn squarefree_part_drops_repeated_roots() {
        let c = QPoly::from_i64(&[-1, 1]);
        let p = &(&c * &c) * &QPoly::from_i64(&[2, 1]);
        assert_eq!(p.squarefree(), &c * &QPoly::from_i64(&[2, 1]));
    }

    #[test]
    fn power_sum_round_trip() {
        let p = QPoly::from_i64(&[6, -5, 1]); // roots 2, 3
        let s = p.power_sums(4);
        assert_eq!(s[1], int(5));
        assert_eq!(s[2], int(13));
        assert_eq!(s[3], int(35));
        assert_eq!(QPoly::from_power_sums(2, &s), p);
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(x^2 - 2, x - 1) = (1 - 2) * ... = lc-normalised product of b at roots of a
        let a = QPoly::from_i64(&[-2, 0, 1]);
        let b = QPoly::from_i64(&[-1, 1]);
        // prod over roots a of b(a) = (sqrt2 - 1)(-sqrt2 - 1) = -1
        assert_eq!(QPoly::resultant(&a, &b), int(-1));
        assert_eq!(QPoly::resultant(&a, &QPoly::from_i64(&[0, 0, 1])), int(4));
    }

    #[test]
    fn shift_scale_reverse() {
        let p = QPoly::from_i64(&[1, 2, 3]);
        assert_eq!(p.shift(&int(1)).eval(&int(0)), p.eval(&int(1)));
        assert_eq!(p.scale_var(&rat(1, 2)).eval(&int(2)), p.eval(&int(1)));
        assert_eq!(p.reverse(), QPoly::from_i64(&[3, 2, 1]));
    }

    #[test]
    fn integer_helpers() {
        let p: Vec<BigInt> = [-2, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(zpoly::sign_at(&p, &rat(3, 2)), std::cmp::Ordering::Greater);
        assert_eq!(zpoly::sign_at(&p, &int(1)), std::cmp::Ordering::Less);
        assert!(zpoly::certify_squarefree(&p));
        let sq: Vec<BigInt> = [1, 2, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert!(!zpoly::certify_squarefree(&sq));
        let mut s: Vec<BigInt> = [1, 1].iter().map(|&c| BigInt::from(c)).collect();
        zpoly::taylor_shift1(&mut s);
        assert_eq!(s, vec![BigInt::from(2), BigInt::from(1)]);
    }
}
