//! Elements of an algebra and their arithmetic.

use std::fmt;
use std::sync::Arc;

use num_traits::One;
use serde_json::{json, Value};

use super::signature::AlgebraSignature;
use crate::error::{Error, Result};
use crate::scalars::{parse_rational, Rational, Scalar};

/// Coordinate vector over a signature's basis.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    sig: Arc<AlgebraSignature>,
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(sig: &Arc<AlgebraSignature>, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != sig.dim() {
            return Err(Error::ArityMismatch { expected: sig.dim(), got: coords.len() });
        }
        Ok(AlgebraElement { sig: sig.clone(), coords })
    }

    pub fn from_i64s(sig: &Arc<AlgebraSignature>, coords: &[i64]) -> Result<Self> {
        Self::new(sig, coords.iter().map(|&c| Scalar::from_i64(c)).collect())
    }

    pub fn zero(sig: &Arc<AlgebraSignature>) -> Self {
        AlgebraElement { sig: sig.clone(), coords: vec![Scalar::zero(); sig.dim()] }
    }

    pub fn one(sig: &Arc<AlgebraSignature>) -> Self {
        Self::real(sig, Scalar::one())
    }

    /// `s · e_0`.
    pub fn real(sig: &Arc<AlgebraSignature>, s: Scalar) -> Self {
        let mut e = Self::zero(sig);
        e.coords[0] = s;
        e
    }

    /// Basis element `e_i`.
    pub fn basis(sig: &Arc<AlgebraSignature>, i: usize) -> Self {
        let mut e = Self::zero(sig);
        e.coords[i] = Scalar::one();
        e
    }

    pub fn sig(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// All non-identity coordinates vanish.
    pub fn is_real(&self) -> bool {
        self.coords[1..].iter().all(Scalar::is_zero)
    }

    fn check(&self, o: &AlgebraElement) -> Result<()> {
        if self.sig.same_as(&o.sig) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub fn add(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(o)?;
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a.add(b)).collect();
        Ok(AlgebraElement { sig: self.sig.clone(), coords })
    }

    pub fn sub(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(o)?;
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a.sub(b)).collect();
        Ok(AlgebraElement { sig: self.sig.clone(), coords })
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement { sig: self.sig.clone(), coords: self.coords.iter().map(Scalar::neg).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        AlgebraElement { sig: self.sig.clone(), coords: self.coords.iter().map(|c| c.mul(s)).collect() }
    }

    /// Bilinear product from the structure constants.
    pub fn mul(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(o)?;
        let k = self.sig.dim();
        let mut acc: Vec<Scalar> = vec![Scalar::zero(); k];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_rational() && a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if b.is_rational() && b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (l, c) in self.sig.product(i, j) {
                    let term = if c.is_one() {
                        ab.clone()
                    } else if (-c).is_one() {
                        ab.neg()
                    } else {
                        ab.mul(&Scalar::from_rational(c.clone()))
                    };
                    acc[*l] = acc[*l].add(&term);
                }
            }
        }
        Ok(AlgebraElement { sig: self.sig.clone(), coords: acc })
    }

    pub fn pow(&self, e: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one(&self.sig);
        for _ in 0..e {
            acc = acc.mul(self).expect("same signature");
        }
        acc
    }

    fn require_involution(&self) -> Result<()> {
        if self.sig.has_involution() {
            Ok(())
        } else {
            Err(Error::NoInvolution(self.sig.name().to_string()))
        }
    }

    pub fn conj(&self) -> Result<AlgebraElement> {
        self.require_involution()?;
        let mut coords = vec![self.coords[0].clone()];
        coords.extend(self.coords[1..].iter().map(Scalar::neg));
        Ok(AlgebraElement { sig: self.sig.clone(), coords })
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.require_involution()?;
        Ok(self.coords[0].clone())
    }

    /// Sum of squared coordinates; equals `a · conj(a)`.
    pub fn norm(&self) -> Result<Scalar> {
        self.require_involution()?;
        Ok(self.coords.iter().fold(Scalar::zero(), |acc, c| acc.add(&c.mul(c))))
    }

    /// `conj(a) / norm(a)`.
    pub fn inv(&self) -> Result<AlgebraElement> {
        let n = self.norm()?;
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj()?.scale(&n.recip()?))
    }

    /// Textual form such as `1 + 2i - 3/5*k`.
    pub fn parse(sig: &Arc<AlgebraSignature>, text: &str) -> Result<AlgebraElement> {
        let mut coords = vec![Scalar::zero(); sig.dim()];
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Syntax { pos: 0, msg: "empty element literal".into() });
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let mut depth = 0i32;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                '+' | '-' if depth == 0 && i > start => {
                    terms.push(&s[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-Rational::one(), b),
                None => (Rational::one(), t.strip_prefix('+').unwrap_or(t)),
            };
            let (coef, idx) = split_term(sig, body)?;
            coords[idx] = coords[idx].add(&coef.mul(&Scalar::from_rational(sign)));
        }
        Ok(AlgebraElement { sig: sig.clone(), coords })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sig": self.sig.name(),
            "coords": self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<AlgebraElement> {
        let bad = || Error::Invalid("expected {\"sig\": ..., \"coords\": [...]}".into());
        let sig = AlgebraSignature::by_name(v.get("sig").and_then(Value::as_str).ok_or_else(bad)?)?;
        let coords = v
            .get("coords")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|c| match c {
                Value::String(s) => s.parse::<Scalar>(),
                Value::Number(n) => n.to_string().parse::<Scalar>(),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraElement::new(&sig, coords)
    }
}

/// Splits `coef*basis`, `coefbasis`, `basis` or `coef`.
fn split_term(sig: &AlgebraSignature, body: &str) -> Result<(Scalar, usize)> {
    let err = || Error::Syntax { pos: 0, msg: format!("bad element term `{body}`") };
    if body.is_empty() {
        return Err(err());
    }
    // longest basis-name suffix wins (e1 rather than 1)
    let mut best: Option<usize> = None;
    for (idx, name) in sig.basis_names().iter().enumerate().skip(1) {
        if body.ends_with(name.as_str()) && best.is_none_or(|b| sig.basis_names()[b].len() < name.len()) {
            best = Some(idx);
        }
    }
    match best {
        Some(idx) => {
            let name = &sig.basis_names()[idx];
            let head = &body[..body.len() - name.len()];
            let head = head.strip_suffix('*').unwrap_or(head);
            let coef = if head.is_empty() { Scalar::one() } else { parse_coef(head).map_err(|_| err())? };
            Ok((coef, idx))
        }
        None => Ok((parse_coef(body).map_err(|_| err())?, 0)),
    }
}

fn parse_coef(s: &str) -> Result<Scalar> {
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    if s.starts_with("alg(") {
        return s.parse();
    }
    parse_rational(s).map(Scalar::from_rational)
}

impl PartialEq for AlgebraElement {
    fn eq(&self, o: &AlgebraElement) -> bool {
        self.sig.same_as(&o.sig) && self.coords == o.coords
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == std::cmp::Ordering::Less && c.is_rational();
            let mag = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let name = &self.sig.basis_names()[i];
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag == Scalar::one() {
                write!(f, "{name}")?;
            } else if mag.is_rational() && !mag.to_string().contains('/') {
                write!(f, "{mag}{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
