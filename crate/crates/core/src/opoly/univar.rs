//! One-variable ordered polynomials `Σ q^h·a_h` and their convolution ring.

use std::fmt;
use std::sync::Arc;

use super::ordered::{Monomial, OrderedPoly};
use crate::algebra::{AlgebraElement, AlgebraSignature};
use crate::error::{Error, Result};
use crate::scalars::{QPoly, Rational, Scalar};

/// Coefficients `a_0..=a_d` (lowest first, trailing zeros trimmed).
#[derive(Clone, Debug, PartialEq)]
pub struct UnivarPoly {
    sig: Arc<AlgebraSignature>,
    coeffs: Vec<AlgebraElement>,
}

/// Polynomial with real (scalar) coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarPoly {
    pub coeffs: Vec<Scalar>,
}

impl ScalarPoly {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc.mul(t).add(c))
    }

    /// The polynomial as a rational one, if every coefficient is rational.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let cs: Option<Vec<Rational>> = self.coeffs.iter().map(|c| c.as_rational().cloned()).collect();
        cs.map(QPoly::new)
    }
}

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl UnivarPoly {
    pub fn new(sig: &Arc<AlgebraSignature>, mut coeffs: Vec<AlgebraElement>) -> Self {
        while coeffs.last().is_some_and(AlgebraElement::is_zero) {
            coeffs.pop();
        }
        UnivarPoly { sig: sig.clone(), coeffs }
    }

    /// From literal coefficient strings, lowest degree first.
    pub fn from_strs(sig: &Arc<AlgebraSignature>, coeffs: &[&str]) -> Result<Self> {
        let cs = coeffs.iter().map(|s| AlgebraElement::parse(sig, s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(sig, cs))
    }

    pub fn sig(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn coeffs(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    pub fn coeff(&self, h: usize) -> AlgebraElement {
        self.coeffs.get(h).cloned().unwrap_or_else(|| AlgebraElement::zero(&self.sig))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Σ q^h·a_h`.
    pub fn eval(&self, q: &AlgebraElement) -> Result<AlgebraElement> {
        if !q.sig().same_as(&self.sig) {
            return Err(Error::SignatureMismatch);
        }
        let mut acc = AlgebraElement::zero(&self.sig);
        let mut pow = AlgebraElement::one(&self.sig);
        for (h, a) in self.coeffs.iter().enumerate() {
            if h > 0 {
                pow = pow.mul(q)?;
            }
            if !a.is_zero() {
                acc = acc.add(&pow.mul(a)?)?;
            }
        }
        Ok(acc)
    }

    /// Product with the variable treated as central: `c_k = Σ_{i+j=k} a_i·b_j`.
    pub fn conv_mul(&self, o: &UnivarPoly) -> Result<UnivarPoly> {
        if !o.sig.same_as(&self.sig) {
            return Err(Error::SignatureMismatch);
        }
        if self.is_zero() || o.is_zero() {
            return Ok(UnivarPoly::new(&self.sig, vec![]));
        }
        let mut c = vec![AlgebraElement::zero(&self.sig); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(UnivarPoly::new(&self.sig, c))
    }

    /// Coefficient-wise conjugate.
    pub fn conj(&self) -> Result<UnivarPoly> {
        let cs = self.coeffs.iter().map(AlgebraElement::conj).collect::<Result<Vec<_>>>()?;
        Ok(UnivarPoly::new(&self.sig, cs))
    }

    /// `p ⋆ conj(p)`, whose coefficients are real.
    pub fn companion(&self) -> Result<ScalarPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = self.conv_mul(&self.conj()?)?;
        let mut out = Vec::with_capacity(c.coeffs.len());
        for (k, a) in c.coeffs.iter().enumerate() {
            if !a.is_real() {
                return Err(Error::Internal(format!("companion coefficient {k} is not real: {a}")));
            }
            out.push(a.coord(0).clone());
        }
        Ok(ScalarPoly { coeffs: out })
    }

    /// Rational coordinate polynomials `p_c(t) = Σ_h (a_h)_c t^h`, if all coordinates are rational.
    pub fn coordinate_polys(&self) -> Option<Vec<QPoly>> {
        let k = self.sig.dim();
        (0..k)
            .map(|c| {
                let cs: Option<Vec<Rational>> = self.coeffs.iter().map(|a| a.coord(c).as_rational().cloned()).collect();
                cs.map(QPoly::new)
            })
            .collect()
    }

    /// Remainder `(b, a)` with `p(q) = q·b + a` whenever `q² = t·q − n`.
    pub fn reduce_mod_trace_norm(&self, t: &Scalar, n: &Scalar) -> (AlgebraElement, AlgebraElement) {
        let mut c = self.coeffs.clone();
        for h in (2..c.len()).rev() {
            let top = c[h].clone();
            if top.is_zero() {
                continue;
            }
            c[h - 1] = c[h - 1].add(&top.scale(t)).unwrap();
            c[h - 2] = c[h - 2].sub(&top.scale(n)).unwrap();
        }
        let zero = AlgebraElement::zero(&self.sig);
        (c.get(1).cloned().unwrap_or_else(|| zero.clone()), c.first().cloned().unwrap_or(zero))
    }

    /// Remainder modulo `q² − 2x·q + (x² + y²)`, the sphere of real part `x` and imaginary norm `y`.
    pub fn reduce_mod_sphere(&self, x: &Scalar, y: &Scalar) -> (AlgebraElement, AlgebraElement) {
        let t = x.add(x);
        let n = x.mul(x).add(&y.mul(y));
        self.reduce_mod_trace_norm(&t, &n)
    }

    pub fn to_ordered(&self) -> OrderedPoly {
        let mut p = OrderedPoly::zero(&self.sig, 1);
        for (h, a) in self.coeffs.iter().enumerate() {
            p.add_term(Monomial(vec![h as u32]), a.clone()).expect("same signature");
        }
        p
    }

    /// Parses a one-variable literal in the variable `q` (or any single variable name).
    pub fn parse(sig: &Arc<AlgebraSignature>, text: &str) -> Result<UnivarPoly> {
        let p = OrderedPoly::parse(sig, text)?;
        if p.nvars() == 0 {
            let c = p.coeff(&Monomial(vec![]));
            return Ok(UnivarPoly::new(sig, vec![c]));
        }
        p.to_univar()
    }
}

impl fmt::Display for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ordered())
    }
}

/// Free-function form of [`UnivarPoly::conv_mul`].
pub fn conv_mul(p: &UnivarPoly, r: &UnivarPoly) -> Result<UnivarPoly> {
    p.conv_mul(r)
}

/// Free-function form of [`UnivarPoly::companion`].
pub fn companion(p: &UnivarPoly) -> Result<ScalarPoly> {
    p.companion()
}

/// Free-function form of [`UnivarPoly::reduce_mod_sphere`].
pub fn reduce_mod_sphere(p: &UnivarPoly, x: &Scalar, y: &Scalar) -> (AlgebraElement, AlgebraElement) {
    p.reduce_mod_sphere(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Arc<AlgebraSignature> {
        AlgebraSignature::quaternion()
    }

    fn up(cs: &[&str]) -> UnivarPoly {
        UnivarPoly::from_strs(&h(), cs).unwrap()
    }

    fn el(s: &str) -> AlgebraElement {
        AlgebraElement::parse(&h(), s).unwrap()
    }

    #[test]
    fn convolution_examples() {
        let a = up(&["-i", "1"]);
        let b = up(&["-j", "1"]);
        assert_eq!(a.conv_mul(&b).unwrap(), up(&["k", "-i - j", "1"]));
        assert_eq!(a.conv_mul(&up(&["1"])).unwrap(), a);
        assert_eq!(a.conv_mul(&up(&["i", "1"])).unwrap(), up(&["1", "0", "1"]));
    }

    #[test]
    fn companion_examples() {
        let c = up(&["-i", "1"]).companion().unwrap();
        assert_eq!(c.coeffs, vec![Scalar::one(), Scalar::zero(), Scalar::one()]);
        let c = up(&["1", "0", "1"]).companion().unwrap();
        let ints: Vec<Scalar> = [1, 0, 2, 0, 1].iter().map(|&n| Scalar::from_i64(n)).collect();
        assert_eq!(c.coeffs, ints);
        let c = up(&["1 + 2i"]).companion().unwrap();
        assert_eq!(c.coeffs, vec![Scalar::from_i64(5)]);
        assert_eq!(up(&[]).companion(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sphere_reduction_examples() {
        let (x, y) = (Scalar::zero(), Scalar::one());
        let (b, a) = up(&["1", "0", "1"]).reduce_mod_sphere(&x, &y);
        assert!(b.is_zero() && a.is_zero());
        let (b, a) = up(&["-i", "1"]).reduce_mod_sphere(&x, &y);
        assert_eq!((b, a), (el("1"), el("-i")));
        let (b, a) = up(&["k", "-i - j", "1"]).reduce_mod_sphere(&x, &y);
        assert_eq!((b, a), (el("-i - j"), el("k - 1")));
    }

    #[test]
    fn evaluation_uses_right_coefficients() {
        // q·i at q = j is j·i = −k
        let p = up(&["0", "i"]);
        assert_eq!(p.eval(&el("j")).unwrap(), el("-k"));
    }
}
