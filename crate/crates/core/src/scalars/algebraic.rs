//! Real algebraic numbers.
//!
//! Two exact representations are used:
//!
//! * [`RootRepr`]: a square-free primitive integer polynomial together with an
//!   open isolating interval that contains exactly one of its roots.
//! * [`FieldElem`]: a quotient `A(θ)/B(θ)` of rational polynomials evaluated at
//!   a real root `θ` of a square-free generator polynomial (a real number field
//!   given by one embedding). Arithmetic inside one field never leaves the
//!   field, which keeps high-degree coordinates tractable.
//!
//! Isolating intervals only ever shrink; they are cached behind a mutex so that
//! values stay logically immutable and shareable across threads.

use std::cmp::Ordering;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::isolate::{isolate_squarefree, sturm_count, RootBox};
use super::poly::{zpoly, QPoly};
use super::rational::{int, simplest_in, Rational};
use crate::error::{Error, Result};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(r: Rational) -> Self {
        Interval { lo: r.clone(), hi: r }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Interval {
        debug_assert!(!self.contains_zero());
        Interval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    pub fn intersects(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }
}

/// Largest numerator or denominator size among the coefficients, in bits.
fn coeff_bits(p: &QPoly) -> u64 {
    p.coeffs().iter().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
}

/// `p` times the lcm of its denominators.
fn positive_multiple(p: &QPoly) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Interval Horner in fixed point: `(l, h, P)` with `l/2^P <= p(x) <= h/2^P` on `[lo, hi]`.
/// Every product is rounded outward to `P` fractional bits, which keeps the integers short.
fn interval_eval_int(p: &[BigInt], lo: &Rational, hi: &Rational) -> (BigInt, BigInt, usize) {
    let prec = (lo.denom().bits().max(hi.denom().bits()) + 64) as usize;
    let floor = |q: &Rational| (q.numer() << prec).div_floor(q.denom());
    let ceil = |q: &Rational| -((-q.numer() << prec).div_floor(q.denom()));
    let (a, c) = (floor(lo), ceil(hi));
    let (mut l, mut h) = (BigInt::zero(), BigInt::zero());
    for (k, coef) in p.iter().rev().enumerate() {
        if k > 0 {
            let prods = [&l * &a, &l * &c, &h * &a, &h * &c];
            l = prods.iter().min().unwrap() >> prec;
            h = -((-prods.iter().max().unwrap()) >> prec);
        }
        let t = coef << prec;
        l += &t;
        h += t;
    }
    (l, h, prec)
}

/// Sign of `p` on `[lo, hi]` when interval Horner proves it constant.
fn interval_sign(p: &[BigInt], lo: &Rational, hi: &Rational) -> Option<Ordering> {
    let (l, h, _) = interval_eval_int(p, lo, hi);
    if l.is_positive() {
        Some(Ordering::Greater)
    } else if h.is_negative() {
        Some(Ordering::Less)
    } else {
        None
    }
}

/// Interval Horner evaluation.
pub fn eval_interval(p: &QPoly, x: &Interval) -> Interval {
    let mut acc = Interval::point(Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Interval::point(c.clone()));
    }
    acc
}

/// Unique root of `poly` inside the open interval `(lo, hi)`.
#[derive(Debug)]
pub struct RootRepr {
    poly: Vec<BigInt>,
    q: QPoly,
    sign_lo: Ordering,
    interval: Mutex<(Rational, Rational)>,
}

impl Clone for RootRepr {
    fn clone(&self) -> Self {
        RootRepr {
            poly: self.poly.clone(),
            q: self.q.clone(),
            sign_lo: self.sign_lo,
            interval: Mutex::new(self.interval()),
        }
    }
}

/// Result of refining an isolating interval.
pub(crate) enum Refined {
    Open,
    /// The midpoint hit the root exactly.
    Hit(Rational),
}

impl RootRepr {
    /// Trusted constructor: `poly` square-free, `(lo, hi)` isolates one simple root.
    pub(crate) fn from_isolated(poly: Vec<BigInt>, lo: Rational, hi: Rational) -> Self {
        let mut poly = zpoly::primitive(&poly);
        if poly.last().is_some_and(|c| c.is_negative()) {
            poly.iter_mut().for_each(|c| *c = -c.clone());
        }
        let sign_lo = zpoly::sign_at(&poly, &lo);
        debug_assert_ne!(sign_lo, Ordering::Equal);
        let q = QPoly::from_ints(&poly);
        RootRepr { poly, q, sign_lo, interval: Mutex::new((lo, hi)) }
    }

    /// Checked constructor used for user input.
    pub fn new_certified(poly: Vec<BigInt>, lo: Rational, hi: Rational) -> Result<Self> {
        let poly = zpoly::trim(poly);
        if poly.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if lo >= hi {
            return Err(Error::Invalid("isolating interval must satisfy lo < hi".into()));
        }
        let q = QPoly::from_ints(&poly);
        if q.squarefree().degree() != q.degree() {
            return Err(Error::Invalid("polynomial must be square-free".into()));
        }
        let s_lo = zpoly::sign_at(&poly, &lo);
        let s_hi = zpoly::sign_at(&poly, &hi);
        if s_lo == Ordering::Equal || s_hi == Ordering::Equal {
            return Err(Error::Invalid("interval endpoints must not be roots".into()));
        }
        if sturm_count(&q, &lo, &hi) != 1 {
            return Err(Error::Invalid("interval must contain exactly one root".into()));
        }
        Ok(Self::from_isolated(poly, lo, hi))
    }

    pub fn poly(&self) -> &[BigInt] {
        &self.poly
    }

    pub fn qpoly(&self) -> &QPoly {
        &self.q
    }

    pub fn interval(&self) -> (Rational, Rational) {
        self.interval.lock().unwrap().clone()
    }

    pub fn closed(&self) -> Interval {
        let (lo, hi) = self.interval();
        Interval { lo, hi }
    }

    pub(crate) fn refine_once(&self) -> Refined {
        let mut g = self.interval.lock().unwrap();
        let mid = (&g.0 + &g.1) / int(2);
        match zpoly::sign_at(&self.poly, &mid) {
            Ordering::Equal => Refined::Hit(mid),
            s if s == self.sign_lo => {
                g.0 = mid;
                Refined::Open
            }
            _ => {
                g.1 = mid;
                Refined::Open
            }
        }
    }

    /// Shrinks the interval below `width`.
    pub(crate) fn refine_to(&self, width: &Rational) -> Refined {
        loop {
            let (lo, hi) = self.interval();
            if &(&hi - &lo) <= width {
                return Refined::Open;
            }
            if let Refined::Hit(r) = self.refine_once() {
                return Refined::Hit(r);
            }
        }
    }

    /// Returns the root as a rational number if it is one.
    pub(crate) fn rational_value(&self) -> Option<Rational> {
        if self.poly.len() == 2 {
            return Some(Rational::new(-self.poly[0].clone(), self.poly[1].clone()));
        }
        let lc = self.poly.last().unwrap().clone();
        // Distinct fractions with denominator <= lc are at least 1/lc^2 apart.
        let w = Rational::new(BigInt::one(), &lc * &lc * 2);
        if let Refined::Hit(r) = self.refine_to(&w) {
            return Some(r);
        }
        let (lo, hi) = self.interval();
        let s = simplest_in(&lo, &hi);
        (zpoly::sign_at(&self.poly, &s) == Ordering::Equal).then_some(s)
    }

    /// Sign of this root compared with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let (lo, hi) = self.interval();
        if r <= &lo {
            return Ordering::Greater;
        }
        if r >= &hi {
            return Ordering::Less;
        }
        match zpoly::sign_at(&self.poly, r) {
            Ordering::Equal => Ordering::Equal,
            s if s == self.sign_lo => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    pub fn cmp_root(&self, o: &RootRepr) -> Ordering {
        let a = self.closed();
        let b = o.closed();
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        let g = QPoly::gcd(&self.q, &o.q);
        if !g.is_constant() {
            let lo = a.lo.clone().max(b.lo.clone());
            let hi = a.hi.clone().min(b.hi.clone());
            if sturm_count(&g, &lo, &hi) > 0 {
                return Ordering::Equal;
            }
        }
        loop {
            let a = self.closed();
            let b = o.closed();
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let Refined::Hit(r) = self.refine_once() {
                return o.cmp_rational(&r).reverse();
            }
            if let Refined::Hit(r) = o.refine_once() {
                return self.cmp_rational(&r);
            }
        }
    }

    pub(crate) fn negated(&self) -> RootRepr {
        let p: Vec<BigInt> = self.poly.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
        let (lo, hi) = self.interval();
        RootRepr::from_isolated(p, -hi, -lo)
    }
}

/// A real number field `ℚ(θ)` embedded through one real root `θ` of `gen`.
#[derive(Debug)]
pub struct NumberField {
    gen: QPoly,
    theta: RootRepr,
}

impl NumberField {
    /// `gen` must be square-free and `theta` one of its real roots.
    pub fn new(gen: QPoly, theta: RootRepr) -> Arc<Self> {
        Arc::new(NumberField { gen: gen.monic(), theta })
    }

    pub fn generator(&self) -> &QPoly {
        &self.gen
    }

    pub fn theta(&self) -> &RootRepr {
        &self.theta
    }

    pub fn degree(&self) -> usize {
        self.gen.degree().unwrap_or(0)
    }

    pub fn reduce(&self, p: &QPoly) -> QPoly {
        if p.degree().unwrap_or(0) < self.degree() {
            p.clone()
        } else {
            p.rem(&self.gen)
        }
    }

    /// Exact sign of `p(θ)`.
    pub fn sign_at_theta(&self, p: &QPoly) -> Ordering {
        let p = self.reduce(p);
        if p.is_constant() {
            return p.coeff(0).cmp(&Rational::zero());
        }
        // interval attempts on ever finer boxes before the exact gcd test;
        // cancellation among large coefficients needs about as many bisections as they have bits
        let budget = 2 * (coeff_bits(&p) + coeff_bits(&self.gen)) + 128;
        let (mut spent, mut step) = (0, 1);
        let ints = positive_multiple(&p);
        while spent <= budget {
            let (lo, hi) = self.theta.interval();
            if let Some(s) = interval_sign(&ints, &lo, &hi) {
                return s;
            }
            for _ in 0..step {
                if let Refined::Hit(r) = self.theta.refine_once() {
                    return p.eval(&r).cmp(&Rational::zero());
                }
            }
            spent += step;
            step = (step * 2).min(32);
        }
        let g = QPoly::gcd(&p, &self.gen);
        if !g.is_constant() {
            let (lo, hi) = self.theta.interval();
            let gi = g.to_primitive_ints();
            if zpoly::sign_at(&gi, &lo) != zpoly::sign_at(&gi, &hi) {
                return Ordering::Equal;
            }
        }
        loop {
            let (lo, hi) = self.theta.interval();
            if let Some(s) = interval_sign(&ints, &lo, &hi) {
                return s;
            }
            if let Refined::Hit(r) = self.theta.refine_once() {
                // θ rational: the generator has a rational root here
                return p.eval(&r).cmp(&Rational::zero());
            }
        }
    }
}

/// `num(θ) / den(θ)` with `den(θ) ≠ 0`.
#[derive(Clone, Debug)]
pub struct FieldElem {
    pub(crate) field: Arc<NumberField>,
    pub(crate) num: QPoly,
    pub(crate) den: QPoly,
}

impl FieldElem {
    pub fn new(field: &Arc<NumberField>, num: QPoly, den: QPoly) -> Result<Self> {
        let den = field.reduce(&den);
        if field.sign_at_theta(&den) == Ordering::Equal {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(field, field.reduce(&num), den))
    }

    fn normalized(field: &Arc<NumberField>, num: QPoly, den: QPoly) -> Self {
        // Make the denominator monic to keep coefficient sizes down.
        let (num, den) = if den.is_zero() {
            (num, den)
        } else {
            let lc = den.lc();
            (num.scale(&lc.recip()), den.monic())
        };
        FieldElem { field: field.clone(), num, den }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn same_field(&self, o: &FieldElem) -> bool {
        Arc::ptr_eq(&self.field, &o.field)
    }

    /// The rational value if numerator and denominator are both constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        if self.num.degree() != self.den.degree() {
            return None;
        }
        // num = c * den
        let c = self.num.lc() / self.den.lc();
        (self.den.scale(&c) == self.num).then_some(c)
    }

    pub fn sign(&self) -> Ordering {
        let s = self.field.sign_at_theta(&self.num);
        let d = self.field.sign_at_theta(&self.den);
        if d == Ordering::Less {
            s.reverse()
        } else {
            s
        }
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        let f = &self.field;
        if self.den == o.den {
            return Self::normalized(f, &self.num + &o.num, self.den.clone());
        }
        let num = f.reduce(&(&(&self.num * &o.den) + &(&o.num * &self.den)));
        let den = f.reduce(&(&self.den * &o.den));
        Self::normalized(f, num, den)
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem { field: self.field.clone(), num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        let f = &self.field;
        let num = f.reduce(&(&self.num * &o.num));
        let den = f.reduce(&(&self.den * &o.den));
        Self::normalized(f, num, den)
    }

    pub fn add_rational(&self, r: &Rational) -> FieldElem {
        let num = &self.num + &self.den.scale(r);
        Self::normalized(&self.field, num, self.den.clone())
    }

    pub fn mul_rational(&self, r: &Rational) -> FieldElem {
        FieldElem { field: self.field.clone(), num: self.num.scale(r), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<FieldElem> {
        if self.field.sign_at_theta(&self.num) == Ordering::Equal {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.field, self.den.clone(), self.num.clone()))
    }

    /// Enclosure of the value; narrows as θ is refined.
    pub fn enclosure(&self, width: &Rational) -> Interval {
        let den_sign = self.field.sign_at_theta(&self.den);
        debug_assert_ne!(den_sign, Ordering::Equal);
        if self.num.is_zero() {
            return Interval::point(Rational::zero());
        }
        // num = N/ln and den = D/ld with integer N, D
        let (n_int, d_int) = (positive_multiple(&self.num), positive_multiple(&self.den));
        let scale = |p: &QPoly, ints: &[BigInt]| {
            let i = p.coeffs().iter().zip(ints).position(|(c, _)| !c.is_zero()).unwrap_or(0);
            Rational::from_integer(ints[i].clone()) / &p.coeffs()[i]
        };
        let factor = scale(&self.den, &d_int) / scale(&self.num, &n_int);
        let mut step = 1;
        loop {
            let (lo, hi) = self.field.theta.interval();
            let (nl, nh, np) = interval_eval_int(&n_int, &lo, &hi);
            let (dl, dh, dp) = interval_eval_int(&d_int, &lo, &hi);
            let (ne, de) = (BigInt::one() << np, BigInt::one() << dp);
            if dl.is_positive() || dh.is_negative() {
                let n = Interval { lo: Rational::new(nl, ne.clone()), hi: Rational::new(nh, ne) };
                let d = Interval { lo: Rational::new(dl, de.clone()), hi: Rational::new(dh, de) };
                let v = n.mul(&d.recip()).mul(&Interval::point(factor.clone()));
                if &v.width() <= width {
                    return v;
                }
            }
            for _ in 0..step {
                if let Refined::Hit(r) = self.field.theta.refine_once() {
                    return Interval::point(self.num.eval(&r) / self.den.eval(&r));
                }
            }
            step = (step * 2).min(64);
        }
    }

    /// Characteristic polynomial of the element over the generator's roots:
    /// `Res_u(gen(u), X·den(u) − num(u))`, computed by interpolation in `X`.
    pub fn characteristic_poly(&self) -> QPoly {
        let d = self.field.degree();
        let xs: Vec<Rational> = (0..=d as i64).map(int).collect();
        let ys: Vec<Rational> = xs
            .iter()
            .map(|x| {
                let h = &self.den.scale(x) - &self.num;
                QPoly::resultant(&self.field.gen, &h)
            })
            .collect();
        interpolate(&xs, &ys)
    }

    /// Converts to the minimal-polynomial-plus-interval form.
    pub fn to_root_form(&self) -> RootOrRational {
        let cp = self.characteristic_poly();
        let this = self.clone();
        select_root(&cp, move |w| this.enclosure(w))
    }
}

/// Newton interpolation through the points `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> QPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = QPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &QPoly::linear_root(&xs[i])) + &QPoly::constant(coef[i].clone());
    }
    p
}

/// A canonical exact real algebraic value: rational when possible.
#[derive(Clone, Debug)]
pub enum RootOrRational {
    Rational(Rational),
    Root(RootRepr),
}

impl RootRepr {
    pub(crate) fn canonical(self) -> RootOrRational {
        match self.rational_value() {
            Some(r) => RootOrRational::Rational(r),
            None => RootOrRational::Root(self),
        }
    }
}

/// Candidate roots of a polynomial, used to pick the one a target enclosure converges to.
enum Candidate {
    Exact(Rational),
    Open(RootRepr),
}

/// Real roots of `p` (any nonzero rational polynomial), canonicalised and sorted.
pub fn real_roots(p: &QPoly) -> Vec<RootOrRational> {
    let sq = p.squarefree();
    let ints = sq.to_primitive_ints();
    isolate_squarefree(&ints)
        .into_iter()
        .map(|b| match b {
            RootBox::Exact(r) => RootOrRational::Rational(r),
            RootBox::Open(lo, hi) => RootRepr::from_isolated(ints.clone(), lo, hi).canonical(),
        })
        .collect()
}

/// Picks the real root of `p` that the enclosures `target(width)` converge to.
/// The target must be a root of `p`.
pub fn select_root(p: &QPoly, mut target: impl FnMut(&Rational) -> Interval) -> RootOrRational {
    let sq = p.squarefree();
    let ints = sq.to_primitive_ints();
    let mut cands: Vec<Candidate> = isolate_squarefree(&ints)
        .into_iter()
        .map(|b| match b {
            RootBox::Exact(r) => Candidate::Exact(r),
            RootBox::Open(lo, hi) => Candidate::Open(RootRepr::from_isolated(ints.clone(), lo, hi)),
        })
        .collect();
    let mut width = Rational::new(BigInt::one(), BigInt::from(16));
    loop {
        let t = target(&width);
        cands.retain(|c| match c {
            Candidate::Exact(r) => &t.lo <= r && r <= &t.hi,
            Candidate::Open(rr) => rr.closed().intersects(&t),
        });
        match cands.len() {
            0 => panic!("root selection lost its target: enclosure does not meet any root"),
            1 => {
                return match cands.pop().unwrap() {
                    Candidate::Exact(r) => RootOrRational::Rational(r),
                    Candidate::Open(rr) => rr.canonical(),
                };
            }
            _ => {}
        }
        let tw = t.width().max(Rational::new(BigInt::one(), BigInt::one() << 2000u32));
        for c in cands.iter_mut() {
            if let Candidate::Open(rr) = c {
                if let Refined::Hit(r) = rr.refine_to(&tw) {
                    *c = Candidate::Exact(r);
                }
            }
        }
        width = width / int(16);
    }
}

/// Monic polynomial whose roots are all sums `α_i + β_j` (with multiplicity).
pub fn sum_poly(f: &QPoly, g: &QPoly) -> QPoly {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let d = m * n;
    let sf = f.power_sums(d);
    let sg = g.power_sums(d);
    let mut sums = vec![Rational::zero(); d + 1];
    let mut binom = vec![BigInt::one()];
    for (k, slot) in sums.iter_mut().enumerate() {
        if k > 0 {
            let mut next = vec![BigInt::one(); k + 1];
            for l in 1..k {
                next[l] = &binom[l - 1] + &binom[l];
            }
            binom = next;
        }
        let mut acc = Rational::zero();
        for l in 0..=k {
            acc += Rational::from_integer(binom[l].clone()) * &sf[l] * &sg[k - l];
        }
        *slot = acc;
    }
    QPoly::from_power_sums(d, &sums)
}

/// Monic polynomial whose roots are all products `α_i β_j` (with multiplicity).
pub fn product_poly(f: &QPoly, g: &QPoly) -> QPoly {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let d = m * n;
    let sf = f.power_sums(d);
    let sg = g.power_sums(d);
    let sums: Vec<Rational> = (0..=d).map(|k| &sf[k] * &sg[k]).collect();
    QPoly::from_power_sums(d, &sums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;

    fn sqrt2() -> RootRepr {
        RootRepr::new_certified(vec![BigInt::from(-2), BigInt::zero(), BigInt::one()], int(1), int(2)).unwrap()
    }

    #[test]
    fn certified_constructor_rejects_bad_intervals() {
        let p = vec![BigInt::from(-2), BigInt::zero(), BigInt::one()];
        assert!(RootRepr::new_certified(p.clone(), int(-2), int(2)).is_err());
        assert!(RootRepr::new_certified(p.clone(), int(2), int(3)).is_err());
        assert!(RootRepr::new_certified(p, int(2), int(1)).is_err());
    }

    #[test]
    fn compare_with_rationals() {
        let s = sqrt2();
        assert_eq!(s.cmp_rational(&rat(141, 100)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&rat(142, 100)), Ordering::Less);
        assert_eq!(s.negated().cmp_rational(&int(0)), Ordering::Less);
    }

    #[test]
    fn sum_and_product_polys() {
        let f = QPoly::from_i64(&[-2, 0, 1]);
        // roots of sum poly: ±2√2 and 0 (twice)
        let s = sum_poly(&f, &f);
        assert_eq!(s, QPoly::from_i64(&[0, 0, -8, 0, 1]));
        let p = product_poly(&f, &f);
        // products: 2, 2, -2, -2
        assert_eq!(p, QPoly::from_i64(&[16, 0, -8, 0, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = QPoly::from_i64(&[3, -1, 0, 2]);
        let xs: Vec<Rational> = (0..4).map(int).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }

    #[test]
    fn non_dyadic_rational_root_is_detected() {
        // 3x - 1 times x^2 - 2: the root 1/3 is isolated as an open interval
        let p = &QPoly::from_i64(&[-1, 3]) * &QPoly::from_i64(&[-2, 0, 1]);
        let roots = real_roots(&p);
        assert_eq!(roots.len(), 3);
        assert!(matches!(&roots[1], RootOrRational::Rational(r) if *r == rat(1, 3)));
    }

    #[test]
    fn field_elements_share_arithmetic() {
        let f = NumberField::new(QPoly::from_i64(&[-2, 0, 1]), sqrt2());
        let t = FieldElem::new(&f, QPoly::x(), QPoly::one()).unwrap();
        let sq = t.mul(&t);
        assert_eq!(sq.as_rational(), Some(int(2)));
        let inv = t.recip().unwrap();
        assert_eq!(inv.mul(&t).as_rational(), Some(int(1)));
        assert_eq!(t.add_rational(&int(-1)).sign(), Ordering::Greater);
        assert_eq!(t.add_rational(&int(-2)).sign(), Ordering::Less);
        let cp = t.characteristic_poly();
        assert_eq!(cp, QPoly::from_i64(&[-2, 0, 1]));
    }
}
