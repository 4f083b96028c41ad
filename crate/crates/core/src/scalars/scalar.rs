//! The exact scalar type: a rational or a real algebraic number.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebraic::{
    product_poly, real_roots, select_root, sum_poly, FieldElem, Interval, Refined, RootOrRational, RootRepr,
};
use super::poly::QPoly;
use super::rational::{exact_sqrt, format_rational, parse_rational, sqrt_bounds, Rational};
use crate::error::{Error, Result};

/// Irrational real algebraic number.
#[derive(Debug)]
pub struct RealAlgebraic {
    repr: Repr,
}

#[derive(Debug)]
enum Repr {
    Root(RootRepr),
    Field { elem: FieldElem, root: OnceLock<RootOrRational> },
}

impl RealAlgebraic {
    /// Minimal-polynomial-plus-interval form (computed lazily for field elements).
    fn root_form(&self) -> RootOrRational {
        match &self.repr {
            Repr::Root(r) => RootOrRational::Root(r.clone()),
            Repr::Field { elem, root } => root.get_or_init(|| elem.to_root_form()).clone(),
        }
    }
}

/// Element of the real closure of ℚ.
#[derive(Clone)]
pub enum Scalar {
    Rat(Rational),
    Alg(Arc<RealAlgebraic>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(Rational::one())
    }

    pub fn from_i64(n: i64) -> Scalar {
        Scalar::Rat(Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar::Rat(r)
    }

    pub fn from_root_repr(r: RootRepr) -> Scalar {
        Self::from_root_or_rational(r.canonical())
    }

    pub(crate) fn from_root_or_rational(r: RootOrRational) -> Scalar {
        match r {
            RootOrRational::Rational(q) => Scalar::Rat(q),
            RootOrRational::Root(r) => Scalar::Alg(Arc::new(RealAlgebraic { repr: Repr::Root(r) })),
        }
    }

    /// Wraps a number-field element; constant elements become rationals.
    pub fn from_field_elem(e: FieldElem) -> Scalar {
        match e.as_rational() {
            Some(q) => Scalar::Rat(q),
            None => Scalar::Alg(Arc::new(RealAlgebraic { repr: Repr::Field { elem: e, root: OnceLock::new() } })),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Alg(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn field_elem(&self) -> Option<&FieldElem> {
        match self {
            Scalar::Alg(a) => match &a.repr {
                Repr::Field { elem, .. } => Some(elem),
                Repr::Root(_) => None,
            },
            Scalar::Rat(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    pub fn sign(&self) -> Ordering {
        match self {
            Scalar::Rat(q) => q.cmp(&Rational::zero()),
            Scalar::Alg(a) => match &a.repr {
                Repr::Field { elem, .. } => elem.sign(),
                Repr::Root(r) => r.cmp_rational(&Rational::zero()),
            },
        }
    }

    /// Rational enclosure of width at most `width`.
    pub fn enclosure(&self, width: &Rational) -> Interval {
        match self {
            Scalar::Rat(q) => Interval::point(q.clone()),
            Scalar::Alg(a) => match &a.repr {
                Repr::Field { elem, .. } => elem.enclosure(width),
                Repr::Root(r) => match r.refine_to(width) {
                    Refined::Hit(q) => Interval::point(q),
                    Refined::Open => r.closed(),
                },
            },
        }
    }

    /// Floating-point approximation (for display and diagnostics only).
    pub fn to_f64(&self) -> f64 {
        let e = self.enclosure(&Rational::new(BigInt::one(), BigInt::one() << 60u32));
        let m = (&e.lo + &e.hi) / Rational::from_integer(2.into());
        rational_to_f64(&m)
    }

    fn root_form(&self) -> RootOrRational {
        match self {
            Scalar::Rat(q) => RootOrRational::Rational(q.clone()),
            Scalar::Alg(a) => a.root_form(),
        }
    }

    /// Primitive integer polynomial vanishing at this value (square-free, lc > 0).
    pub fn defining_poly(&self) -> Vec<BigInt> {
        match self.root_form() {
            RootOrRational::Rational(q) => vec![-q.numer().clone(), q.denom().clone()],
            RootOrRational::Root(r) => r.poly().to_vec(),
        }
    }

    /// Current isolating interval for irrational values; `None` for rationals.
    pub fn isolating_interval(&self) -> Option<(Rational, Rational)> {
        match self.root_form() {
            RootOrRational::Rational(_) => None,
            RootOrRational::Root(r) => Some(r.interval()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Alg(a) => match &a.repr {
                Repr::Field { elem, .. } => Scalar::from_field_elem(elem.neg()),
                Repr::Root(r) => Scalar::Alg(Arc::new(RealAlgebraic { repr: Repr::Root(r.negated()) })),
            },
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(q), x) | (x, Scalar::Rat(q)) => x.add_rational(q),
            _ => {
                if let (Some(a), Some(b)) = (self.field_elem(), o.field_elem()) {
                    if a.same_field(b) {
                        return Scalar::from_field_elem(a.add(b));
                    }
                }
                match (self.root_form(), o.root_form()) {
                    (RootOrRational::Rational(q), _) => o.add_rational(&q),
                    (_, RootOrRational::Rational(q)) => self.add_rational(&q),
                    (RootOrRational::Root(ra), RootOrRational::Root(rb)) => {
                        let p = sum_poly(ra.qpoly(), rb.qpoly());
                        Scalar::from_root_or_rational(select_root(&p, |w| {
                            let h = w / Rational::from_integer(2.into());
                            self.enclosure(&h).add(&o.enclosure(&h))
                        }))
                    }
                }
            }
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(q), x) | (x, Scalar::Rat(q)) => x.mul_rational(q),
            _ => {
                if let (Some(a), Some(b)) = (self.field_elem(), o.field_elem()) {
                    if a.same_field(b) {
                        return Scalar::from_field_elem(a.mul(b));
                    }
                }
                match (self.root_form(), o.root_form()) {
                    (RootOrRational::Rational(q), _) => o.mul_rational(&q),
                    (_, RootOrRational::Rational(q)) => self.mul_rational(&q),
                    (RootOrRational::Root(ra), RootOrRational::Root(rb)) => {
                        let p = product_poly(ra.qpoly(), rb.qpoly());
                        Scalar::from_root_or_rational(select_root(&p, |w| {
                            let a = self.enclosure(w);
                            let b = o.enclosure(w);
                            a.mul(&b)
                        }))
                    }
                }
            }
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(q.recip()))
                }
            }
            Scalar::Alg(a) => match &a.repr {
                Repr::Field { elem, .. } => Ok(Scalar::from_field_elem(elem.recip()?)),
                Repr::Root(r) => Ok(Scalar::from_root_or_rational(RootOrRational::Root(root_recip(r)))),
            },
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn add_rational(&self, q: &Rational) -> Scalar {
        if q.is_zero() {
            return self.clone();
        }
        match self {
            Scalar::Rat(a) => Scalar::Rat(a + q),
            Scalar::Alg(a) => match &a.repr {
                Repr::Field { elem, .. } => Scalar::from_field_elem(elem.add_rational(q)),
                Repr::Root(r) => {
                    let p = r.qpoly().shift(&-q).to_primitive_ints();
                    let (lo, hi) = r.interval();
                    let rr = RootRepr::from_isolated(p, lo + q, hi + q);
                    Scalar::Alg(Arc::new(RealAlgebraic { repr: Repr::Root(rr) }))
                }
            },
        }
    }

    fn mul_rational(&self, q: &Rational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        if q.is_one() {
            return self.clone();
        }
        match self {
            Scalar::Rat(a) => Scalar::Rat(a * q),
            Scalar::Alg(a) => match &a.repr {
                Repr::Field { elem, .. } => Scalar::from_field_elem(elem.mul_rational(q)),
                Repr::Root(r) => {
                    let p = r.qpoly().scale_var(&q.recip()).to_primitive_ints();
                    let (lo, hi) = r.interval();
                    let (lo, hi) = if q.is_positive() { (lo * q, hi * q) } else { (hi * q, lo * q) };
                    let rr = RootRepr::from_isolated(p, lo, hi);
                    Scalar::Alg(Arc::new(RealAlgebraic { repr: Repr::Root(rr) }))
                }
            },
        }
    }

    /// Exact trichotomy.
    pub fn compare(&self, o: &Scalar) -> Ordering {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            _ => {
                if let (Some(a), Some(b)) = (self.field_elem(), o.field_elem()) {
                    if a.same_field(b) {
                        return a.add(&b.neg()).sign();
                    }
                }
                if let (Some(a), Scalar::Rat(q)) = (self.field_elem(), o) {
                    return a.add_rational(&-q).sign();
                }
                if let (Scalar::Rat(q), Some(b)) = (self, o.field_elem()) {
                    return b.add_rational(&-q).sign().reverse();
                }
                match (self.root_form(), o.root_form()) {
                    (RootOrRational::Rational(a), RootOrRational::Rational(b)) => a.cmp(&b),
                    (RootOrRational::Rational(a), RootOrRational::Root(b)) => b.cmp_rational(&a).reverse(),
                    (RootOrRational::Root(a), RootOrRational::Rational(b)) => a.cmp_rational(&b),
                    (RootOrRational::Root(a), RootOrRational::Root(b)) => a.cmp_root(&b),
                }
            }
        }
    }

    /// Nonnegative square root of a nonnegative scalar.
    pub fn sqrt(&self) -> Result<Scalar> {
        match self.sign() {
            Ordering::Less => return Err(Error::Invalid("square root of a negative scalar".into())),
            Ordering::Equal => return Ok(Scalar::zero()),
            Ordering::Greater => {}
        }
        if let Scalar::Rat(q) = self {
            if let Some(r) = exact_sqrt(q) {
                return Ok(Scalar::Rat(r));
            }
        }
        let f = match self.root_form() {
            RootOrRational::Rational(q) => QPoly::linear_root(&q),
            RootOrRational::Root(r) => r.qpoly().clone(),
        };
        let g = f.compose_square();
        Ok(Scalar::from_root_or_rational(select_root(&g, |w| {
            let e = self.enclosure(w);
            let bits = (w.denom().bits() as i64 - w.numer().bits() as i64 + 2).max(4) as u32;
            let lo = if e.lo.is_positive() { sqrt_bounds(&e.lo, bits).0 } else { Rational::zero() };
            Interval { lo, hi: sqrt_bounds(&e.hi, bits).1 }
        })))
    }
}

fn root_recip(r: &RootRepr) -> RootRepr {
    let zero = Rational::zero();
    loop {
        let (lo, hi) = r.interval();
        if lo > zero || hi < zero {
            let p = r.qpoly().reverse().to_primitive_ints();
            return RootRepr::from_isolated(p, hi.recip(), lo.recip());
        }
        if let Refined::Hit(q) = r.refine_once() {
            // cannot happen for an irrational root; keep the loop total anyway
            debug_assert!(q.is_zero() || lo < q);
        }
    }
}

fn rational_to_f64(q: &Rational) -> f64 {
    let n = q.numer();
    let d = q.denom();
    let shift = (n.bits().max(d.bits()) as i64 - 60).max(0) as u32;
    let nf = (n >> shift).to_string().parse::<f64>().unwrap_or(0.0);
    let df = (d >> shift).to_string().parse::<f64>().unwrap_or(1.0);
    if df == 0.0 {
        return if n.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
    }
    nf / df
}

/// All distinct real roots of an integer polynomial, increasing and exact.
pub fn isolate_real_roots(p: &[BigInt]) -> Result<Vec<Scalar>> {
    let q = QPoly::from_ints(p);
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(real_roots(&q).into_iter().map(Scalar::from_root_or_rational).collect())
}

/// Field operation dispatcher.
pub fn scalar_arith(op: ArithOp, a: &Scalar, b: &Scalar) -> Result<Scalar> {
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b)?,
    })
}

pub fn scalar_compare(a: &Scalar, b: &Scalar) -> Ordering {
    a.compare(b)
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        self.compare(o) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, o: &Scalar) -> Option<Ordering> {
        Some(self.compare(o))
    }
}

impl Ord for Scalar {
    fn cmp(&self, o: &Scalar) -> Ordering {
        self.compare(o)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Scalar {
        Scalar::Rat(q)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Scalar::$m(self, o)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root_form() {
            RootOrRational::Rational(q) => write!(f, "{}", format_rational(&q)),
            RootOrRational::Root(r) => {
                let cs: Vec<String> = r.poly().iter().map(|c| c.to_string()).collect();
                let (lo, hi) = r.interval();
                write!(f, "alg([{}], {}, {})", cs.join(", "), format_rational(&lo), format_rational(&hi))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p`, `p/q` or `alg([c0, c1, ...], lo, hi)` (coefficients lowest degree first).
    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let Some(body) = s.strip_prefix("alg(") else {
            return parse_rational(s).map(Scalar::Rat);
        };
        let bad = || Error::Invalid(format!("malformed algebraic literal `{s}`"));
        let body = body.strip_suffix(')').ok_or_else(bad)?.trim();
        let body = body.strip_prefix('[').ok_or_else(bad)?;
        let (list, rest) = body.split_once(']').ok_or_else(bad)?;
        let coeffs = list
            .split(',')
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let rest = rest.trim().strip_prefix(',').ok_or_else(bad)?;
        let (lo, hi) = rest.split_once(',').ok_or_else(bad)?;
        let lo = parse_rational(lo)?;
        let hi = parse_rational(hi)?;
        Ok(Scalar::from_root_repr(RootRepr::new_certified(coeffs, lo, hi)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{int, rat};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn sqrt2() -> Scalar {
        isolate_real_roots(&ints(&[-2, 0, 1])).unwrap()[1].clone()
    }

    #[test]
    fn roots_of_x2_minus_2() {
        let r = isolate_real_roots(&ints(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let (a, b) = (r[0].isolating_interval().unwrap(), r[1].isolating_interval().unwrap());
        assert!(a.1 <= b.0);
        assert_eq!(r[0].defining_poly(), ints(&[-2, 0, 1]));
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(isolate_real_roots(&[]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn cubic_roots_are_rational() {
        let r = isolate_real_roots(&ints(&[0, -1, 0, 1])).unwrap();
        assert_eq!(r, vec![Scalar::from_i64(-1), Scalar::zero(), Scalar::one()]);
        assert!(r.iter().all(Scalar::is_rational));
    }

    #[test]
    fn spec_arithmetic_examples() {
        let s = sqrt2();
        let z = s.add(&s.neg());
        assert!(z.is_rational() && z.is_zero());
        let two = s.mul(&s);
        assert!(matches!(&two, Scalar::Rat(q) if *q == int(2)));
        let half = scalar_arith(ArithOp::Div, &Scalar::one(), &Scalar::from_i64(2)).unwrap();
        assert_eq!(half, Scalar::Rat(rat(1, 2)));
        assert_eq!(scalar_arith(ArithOp::Div, &s, &Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn spec_compare_examples() {
        let s = sqrt2();
        assert_eq!(s.compare(&Scalar::Rat(rat(141, 100))), Ordering::Greater);
        assert_eq!(Scalar::Rat(rat(1, 3)).compare(&Scalar::Rat(rat(1, 3))), Ordering::Equal);
        assert_eq!(s.neg().compare(&Scalar::zero()), Ordering::Less);
    }

    #[test]
    fn mixed_radicals() {
        let s2 = sqrt2();
        let s3 = Scalar::from_i64(3).sqrt().unwrap();
        let s6 = Scalar::from_i64(6).sqrt().unwrap();
        assert_eq!(s2.mul(&s3), s6);
        let sum = s2.add(&s3);
        // (√2 + √3)^2 = 5 + 2√6
        assert_eq!(sum.mul(&sum), Scalar::from_i64(5).add(&s6.add(&s6)));
        assert_eq!(sum.defining_poly(), ints(&[1, 0, -10, 0, 1]));
    }

    #[test]
    fn sqrt_of_algebraic() {
        let s2 = sqrt2();
        let r = s2.sqrt().unwrap();
        assert_eq!(r.mul(&r), s2);
        assert_eq!(r.defining_poly(), ints(&[-2, 0, 0, 0, 1]));
        assert!(Scalar::from_i64(-1).sqrt().is_err());
    }

    #[test]
    fn text_round_trip() {
        let s = sqrt2();
        let t = s.to_string();
        assert!(t.starts_with("alg([-2, 0, 1], "));
        let back: Scalar = t.parse().unwrap();
        assert_eq!(back, s);
        let q: Scalar = "-7/3".parse().unwrap();
        assert_eq!(q.to_string(), "-7/3");
        assert!("alg([-2, 0, 1], -2, 2)".parse::<Scalar>().is_err());
        // a linear defining polynomial is normalised to a rational
        let lin: Scalar = "alg([-1, 3], 0, 1)".parse().unwrap();
        assert!(lin.is_rational());
    }

    #[test]
    fn reciprocal_of_root() {
        let s = sqrt2();
        let r = s.recip().unwrap();
        assert_eq!(r.add(&r), s);
    }
}
