//! Ordered polynomials `Σ_α q_1^{α_1}·…·q_n^{α_n}·a_α` with right coefficients.
//!
//! A monomial is evaluated strictly left to right, one factor at a time:
//! `((q_1·q_1)·…·q_n)·a_α`. In an alternative algebra this equals
//! `((q_1^{α_1}·q_2^{α_2})·…·q_n^{α_n})·a_α`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, AlgebraSignature};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Exponent vector; ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Several-variable ordered polynomial over a built-in or generic algebra.
#[derive(Clone, Debug)]
pub struct OrderedPoly {
    sig: Arc<AlgebraSignature>,
    names: Vec<String>,
    terms: BTreeMap<Monomial, AlgebraElement>,
}

/// Default variable names: `q` for one variable, otherwise `q1..qn`.
pub fn default_names(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["q".into()]
    } else {
        (1..=n).map(|i| format!("q{i}")).collect()
    }
}

impl OrderedPoly {
    pub fn zero(sig: &Arc<AlgebraSignature>, nvars: usize) -> Self {
        Self::with_names(sig, default_names(nvars))
    }

    pub fn with_names(sig: &Arc<AlgebraSignature>, names: Vec<String>) -> Self {
        OrderedPoly { sig: sig.clone(), names, terms: BTreeMap::new() }
    }

    pub fn sig(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlgebraElement)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Adds `mono · coef`, dropping the term if it cancels.
    pub fn add_term(&mut self, mono: Monomial, coef: AlgebraElement) -> Result<()> {
        if mono.nvars() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: mono.nvars() });
        }
        if !coef.sig().same_as(&self.sig) {
            return Err(Error::SignatureMismatch);
        }
        let sum = match self.terms.remove(&mono) {
            Some(c) => c.add(&coef)?,
            None => coef,
        };
        if !sum.is_zero() {
            self.terms.insert(mono, sum);
        }
        Ok(())
    }

    pub fn coeff(&self, mono: &Monomial) -> AlgebraElement {
        self.terms.get(mono).cloned().unwrap_or_else(|| AlgebraElement::zero(&self.sig))
    }

    pub fn add(&self, o: &OrderedPoly) -> Result<OrderedPoly> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> OrderedPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, o: &OrderedPoly) -> Result<OrderedPoly> {
        self.add(&o.neg())
    }

    /// Evaluates at a point (one algebra element per variable).
    pub fn eval(&self, point: &[AlgebraElement]) -> Result<AlgebraElement> {
        if point.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: point.len() });
        }
        if point.iter().any(|q| !q.sig().same_as(&self.sig)) {
            return Err(Error::SignatureMismatch);
        }
        let mut acc = AlgebraElement::zero(&self.sig);
        for (m, a) in &self.terms {
            let mut prod: Option<AlgebraElement> = None;
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    prod = Some(match prod {
                        None => point[i].clone(),
                        Some(x) => x.mul(&point[i])?,
                    });
                }
            }
            let term = match prod {
                None => a.clone(),
                Some(x) => x.mul(a)?,
            };
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// One-variable view.
    pub fn to_univar(&self) -> Result<super::UnivarPoly> {
        if self.nvars() != 1 {
            return Err(Error::ArityMismatch { expected: 1, got: self.nvars() });
        }
        let d = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![AlgebraElement::zero(&self.sig); d + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[0] as usize] = c.clone();
        }
        Ok(super::UnivarPoly::new(&self.sig, coeffs))
    }

    /// Parses a polynomial literal such as `q1^2*q2*(1+2i) + q2 - 1`.
    /// Variables are taken in natural order of their names.
    pub fn parse(sig: &Arc<AlgebraSignature>, text: &str) -> Result<OrderedPoly> {
        crate::formula::parse_ordered_poly(sig, text)
    }
}

impl PartialEq for OrderedPoly {
    fn eq(&self, o: &Self) -> bool {
        self.sig.same_as(&o.sig) && self.names == o.names && self.terms == o.terms
    }
}

/// Writes `mono` with coefficient `c` (right side) in the literal syntax.
pub(crate) fn fmt_term(names: &[String], m: &Monomial, c: &AlgebraElement) -> (bool, String) {
    let vars: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
        .collect();
    let mono = vars.join("*");
    if c.is_real() {
        let s = c.coord(0);
        let neg = s.is_rational() && s.sign() == Ordering::Less;
        let mag = if neg { s.neg() } else { s.clone() };
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag == Scalar::one() {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        return (neg, body);
    }
    let coef = format!("({c})");
    if mono.is_empty() {
        (false, coef)
    } else {
        (false, format!("{mono}*{coef}"))
    }
}

impl fmt::Display for OrderedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = fmt_term(&self.names, m, c);
            match (n, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
