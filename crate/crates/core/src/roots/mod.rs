//! Zero sets of one-variable ordered polynomials over the quaternions and octonions.
//!
//! The zero set of a nonconstant `p(q) = Σ q^h a_h` is a finite union of
//! isolated points and spheres `{x + y·u : u² = −1 imaginary}`. Real roots are
//! the roots of the gcd `g` of the coordinate polynomials; spheres are its
//! non-real conjugate pairs. Every other conjugate pair of the companion
//! `p ⋆ p̄` carries at most one point, `−a·b⁻¹` where `p ≡ q·b + a` modulo the
//! sphere's quadratic.

mod pairs;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, AlgebraSignature, SigKind};
use crate::error::{Error, Result};
use crate::opoly::UnivarPoly;
use crate::scalars::algebraic::RootRepr;
use crate::scalars::isolate::{isolate_squarefree, RootBox};
use crate::scalars::{FieldElem, NumberField, QPoly, Rational, Scalar};

use pairs::{clear_denominators, pair_system, ModRing, PairSystem, Theta, ZP};
pub use pairs::{conjugate_pairs, PairRoot};

#[derive(Clone, Debug, PartialEq)]
pub enum RootDescriptor {
    Isolated { point: AlgebraElement },
    /// Center `x`, radius `y > 0`.
    Sphere { x: Scalar, y: Scalar },
}

impl RootDescriptor {
    pub fn to_json(&self) -> Value {
        match self {
            RootDescriptor::Isolated { point } => {
                json!({"type": "point", "coords": point.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>()})
            }
            RootDescriptor::Sphere { x, y } => json!({"type": "sphere", "x": x.to_string(), "y": y.to_string()}),
        }
    }
}

impl fmt::Display for RootDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootDescriptor::Isolated { point } => write!(f, "point {point}"),
            RootDescriptor::Sphere { x, y } => write!(f, "sphere x = {x}, y = {y}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSet {
    pub descriptors: Vec<RootDescriptor>,
    pub input: UnivarPoly,
}

impl RootSet {
    pub fn points(&self) -> impl Iterator<Item = &AlgebraElement> {
        self.descriptors.iter().filter_map(|d| match d {
            RootDescriptor::Isolated { point } => Some(point),
            _ => None,
        })
    }

    pub fn spheres(&self) -> impl Iterator<Item = (&Scalar, &Scalar)> {
        self.descriptors.iter().filter_map(|d| match d {
            RootDescriptor::Sphere { x, y } => Some((x, y)),
            _ => None,
        })
    }

    /// Whether `q` lies in the zero set described here.
    pub fn contains(&self, q: &AlgebraElement) -> Result<bool> {
        for d in &self.descriptors {
            match d {
                RootDescriptor::Isolated { point } if point == q => return Ok(true),
                RootDescriptor::Sphere { x, y } => {
                    if q.trace()? == x.add(x) && q.norm()? == x.mul(x).add(&y.mul(y)) && !q.is_real() {
                        return Ok(true);
                    }
                }
                _ => {}
            }
        }
        Ok(false)
    }

    pub fn dimension(&self) -> usize {
        zero_locus_dimension(self)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input.to_string(),
            "roots": self.descriptors.iter().map(RootDescriptor::to_json).collect::<Vec<_>>(),
            "dimension": self.dimension(),
        })
    }
}

/// 0 for finitely many points; otherwise the sphere dimension (2 or 6).
pub fn zero_locus_dimension(rs: &RootSet) -> usize {
    if rs.spheres().next().is_some() {
        rs.input.sig().dim() - 2
    } else {
        0
    }
}

fn rat(q: Rational) -> Scalar {
    Scalar::from_rational(q)
}

/// Real roots of a square-free rational polynomial, each in its own number field.
fn real_roots_in_fields(g: &QPoly) -> Vec<Scalar> {
    let ints = g.to_primitive_ints();
    isolate_squarefree(&ints)
        .into_iter()
        .map(|b| match b {
            RootBox::Exact(r) => rat(r),
            RootBox::Open(lo, hi) => {
                let field = NumberField::new(g.clone(), RootRepr::from_isolated(ints.clone(), lo, hi));
                Scalar::from_field_elem(FieldElem::new(&field, QPoly::x(), QPoly::one()).expect("nonzero denominator"))
            }
        })
        .collect()
}

/// Algebra elements with coordinates in `ℤ[T]/(M)`.
struct ModAlgebra<'a> {
    ring: &'a ModRing,
    sig: &'a AlgebraSignature,
}

type ZElem = Vec<ZP>;

impl ModAlgebra<'_> {
    fn zero(&self) -> ZElem {
        vec![vec![]; self.sig.dim()]
    }

    fn mul(&self, x: &ZElem, y: &ZElem) -> ZElem {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_empty() {
                    continue;
                }
                let ab = self.ring.mul(a, b);
                for (l, c) in self.sig.product(i, j) {
                    let term = self.ring.scale(&ab, &c.to_integer());
                    out[*l] = self.ring.add(&out[*l], &term);
                }
            }
        }
        out
    }

    fn conj(&self, x: &ZElem) -> ZElem {
        x.iter().enumerate().map(|(c, v)| if c == 0 { v.clone() } else { self.ring.neg(v) }).collect()
    }

    fn scale(&self, x: &ZElem, s: &ZP) -> ZElem {
        x.iter().map(|v| self.ring.mul(v, s)).collect()
    }

    fn add(&self, x: &ZElem, y: &ZElem) -> ZElem {
        x.iter().zip(y).map(|(a, b)| self.ring.add(a, b)).collect()
    }

    fn sub(&self, x: &ZElem, y: &ZElem) -> ZElem {
        x.iter().zip(y).map(|(a, b)| self.ring.sub(a, b)).collect()
    }

    /// `(B, A)` with `p ≡ (q·B + A) / D^k` modulo `q² − (S/D)·q + N/D`.
    fn reduce(&self, sys: &PairSystem, coeffs: &[Vec<BigInt>]) -> (ZElem, ZElem) {
        let mut c: Vec<ZElem> = coeffs.iter().map(|a| a.iter().map(|x| self.ring.constant(x.clone())).collect()).collect();
        while c.len() > 2 {
            let top = c.pop().unwrap();
            let h = c.len();
            for cj in c.iter_mut() {
                *cj = self.scale(cj, &sys.d);
            }
            c[h - 1] = self.add(&c[h - 1], &self.scale(&top, &sys.s));
            c[h - 2] = self.sub(&c[h - 2], &self.scale(&top, &sys.n));
        }
        let a = c.first().cloned().unwrap_or_else(|| self.zero());
        let b = c.get(1).cloned().unwrap_or_else(|| self.zero());
        (b, a)
    }
}

fn all_vanish(t: &Theta, x: &ZElem) -> bool {
    x.iter().all(|v| t.sign(v) == Ordering::Equal)
}

/// Integer coefficient vectors of a positive multiple of `p`.
fn integer_coeffs(p: &UnivarPoly) -> Result<Vec<Vec<BigInt>>> {
    let dim = p.sig().dim();
    let flat: Option<Vec<Rational>> = p.coeffs().iter().flat_map(|a| a.coords()).map(|c| c.as_rational().cloned()).collect();
    let flat = flat.ok_or_else(|| Error::Unsupported("root finding needs rational coefficients".into()))?;
    Ok(clear_denominators(&flat).chunks(dim).map(<[BigInt]>::to_vec).collect())
}

/// Exact zero set of a nonconstant polynomial with rational coefficients.
pub fn solve(p: &UnivarPoly) -> Result<RootSet> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let sig = p.sig().clone();
    if sig.kind() == SigKind::Generic {
        return Err(Error::NoInvolution(sig.name().to_string()));
    }
    let pc = integer_coeffs(p)?;
    let coords = p.coordinate_polys().expect("rational coefficients");
    let g = coords.iter().filter(|c| !c.is_zero()).fold(QPoly::zero(), |acc, c| QPoly::gcd(&acc, c));
    let mut out = Vec::new();
    let gs = g.squarefree();
    if !g.is_constant() {
        for t in real_roots_in_fields(&gs) {
            let point = AlgebraElement::real(&sig, t);
            if !p.eval(&point)?.is_zero() {
                return Err(Error::Internal(format!("real root {point} does not satisfy the polynomial")));
            }
            out.push(RootDescriptor::Isolated { point });
        }
        if let Some(sys) = pair_system(&gs)? {
            let alg = ModAlgebra { ring: &sys.ring, sig: &sig };
            let (b, a) = alg.reduce(&sys, &pc);
            let two_d = sys.ring.scale(&sys.d, &BigInt::from(2));
            for t in &sys.thetas {
                if !all_vanish(t, &b) || !all_vanish(t, &a) {
                    return Err(Error::Internal("a common quadratic factor did not give a sphere".into()));
                }
                let x = t.scalar(&sys.s, &two_d)?;
                let y = t.scalar(&sys.n, &sys.d)?.sub(&x.mul(&x)).sqrt()?;
                out.push(RootDescriptor::Sphere { x, y });
            }
        }
    }
    let c = p.companion()?.to_qpoly().ok_or_else(|| Error::Internal("companion is not rational".into()))?;
    let rest = c.div_exact(&(&g * &g));
    if !rest.is_constant() {
        if let Some(sys) = pair_system(&rest.squarefree())? {
            out.extend(isolated_points(p, &pc, &gs, &sys)?);
        }
    }
    if out.is_empty() {
        return Err(Error::Internal(format!("no roots found for the nonconstant polynomial {p}")));
    }
    Ok(RootSet { descriptors: out, input: p.clone() })
}

/// The point `−A·B⁻¹` on each conjugate pair of `sys`, when it is one.
/// It is a root: `A` and `B` generate an associative subalgebra, so `r·B = −A`.
fn isolated_points(p: &UnivarPoly, pc: &[Vec<BigInt>], gs: &QPoly, sys: &PairSystem) -> Result<Vec<RootDescriptor>> {
    let sig = p.sig();
    let ring = &sys.ring;
    let alg = ModAlgebra { ring, sig };
    let (b, a) = alg.reduce(sys, pc);
    // r = R / nb with R = −A·B̄ and nb = |B|²
    let r_num = alg.mul(&a, &alg.conj(&b));
    let mut r_num: ZElem = r_num.iter().map(|v| ring.neg(v)).collect();
    let mut nb = alg.mul(&b, &alg.conj(&b))[0].clone();
    let content = r_num.iter().chain([&nb]).flatten().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content > BigInt::one() {
        r_num = r_num.iter().map(|v| v.iter().map(|c| c / &content).collect()).collect();
        nb = nb.iter().map(|c| c / &content).collect();
    }
    // trace(r) = S/D and norm(r) = N/D, cleared of denominators
    let trace_gap = ring.sub(&ring.mul(&sys.d, &ring.scale(&r_num[0], &BigInt::from(2))), &ring.mul(&sys.s, &nb));
    let norm_r = alg.mul(&r_num, &alg.conj(&r_num))[0].clone();
    let norm_gap = ring.sub(&ring.mul(&sys.d, &norm_r), &ring.mul(&sys.n, &ring.mul(&nb, &nb)));
    let g_ints = gs.to_primitive_ints();
    let shared = if gs.degree().unwrap_or(0) >= 2 {
        let gc: Vec<Vec<BigInt>> = g_ints.iter().map(|c| vec![c.clone()]).collect();
        Some(alg.reduce(sys, &gc))
    } else {
        None
    };
    let mut out = Vec::new();
    for t in &sys.thetas {
        if shared.as_ref().is_some_and(|(gb, ga)| all_vanish(t, gb) && all_vanish(t, ga)) {
            continue;
        }
        if all_vanish(t, &b) || t.sign(&trace_gap) != Ordering::Equal || t.sign(&norm_gap) != Ordering::Equal {
            continue;
        }
        let coords = r_num.iter().map(|v| t.scalar(v, &nb)).collect::<Result<Vec<_>>>()?;
        out.push(RootDescriptor::Isolated { point: AlgebraElement::new(sig, coords)? });
    }
    Ok(out)
}

/// Roots of `p` given by its coefficient literals, lowest degree first.
pub fn solve_strs(sig: &Arc<crate::algebra::AlgebraSignature>, coeffs: &[&str]) -> Result<RootSet> {
    solve(&UnivarPoly::from_strs(sig, coeffs)?)
}

/// Numerical count check: each isolated non-real point and each sphere
/// accounts for one conjugate pair of companion roots, each real root for one.
pub fn companion_root_count(rs: &RootSet) -> Result<(usize, usize)> {
    let c = rs.input.companion()?.to_qpoly().ok_or_else(|| Error::Internal("companion is not rational".into()))?;
    let mut distinct = 0;
    for d in &rs.descriptors {
        distinct += match d {
            RootDescriptor::Isolated { point } if point.is_real() => 1,
            _ => 2,
        };
    }
    Ok((distinct, c.squarefree().degree().unwrap_or(0)))
}

impl PartialOrd for RootDescriptor {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        match (self, o) {
            (RootDescriptor::Sphere { x: a, y: b }, RootDescriptor::Sphere { x: c, y: d }) => Some(a.cmp(c).then(b.cmp(d))),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Arc<AlgebraSignature> {
        AlgebraSignature::quaternion()
    }

    fn el(s: &str) -> AlgebraElement {
        AlgebraElement::parse(&h(), s).unwrap()
    }

    #[test]
    fn sphere_of_q_squared_plus_one() {
        let rs = solve_strs(&h(), &["1", "0", "1"]).unwrap();
        assert_eq!(rs.descriptors, vec![RootDescriptor::Sphere { x: Scalar::zero(), y: Scalar::one() }]);
        assert_eq!(rs.dimension(), 2);
        assert!(rs.contains(&el("3/5j + 4/5k")).unwrap());
    }

    #[test]
    fn isolated_root_i() {
        let rs = solve_strs(&h(), &["k", "-i - j", "1"]).unwrap();
        assert_eq!(rs.descriptors, vec![RootDescriptor::Isolated { point: el("i") }]);
        assert!(!rs.contains(&el("j")).unwrap());
        assert!(!rs.input.eval(&el("j")).unwrap().is_zero());
        assert_eq!(rs.dimension(), 0);
    }

    #[test]
    fn real_roots() {
        let rs = solve_strs(&h(), &["-1", "0", "1"]).unwrap();
        let pts: Vec<_> = rs.points().cloned().collect();
        assert_eq!(pts, vec![el("-1"), el("1")]);
        let rs = solve_strs(&h(), &["-2", "0", "1"]).unwrap();
        assert_eq!(rs.points().count(), 2);
        assert_eq!(solve_strs(&h(), &["-1", "1"]).unwrap().dimension(), 0);
    }

    #[test]
    fn octonion_sphere_is_six_dimensional() {
        let o = AlgebraSignature::octonion();
        assert_eq!(solve_strs(&o, &["1", "0", "1"]).unwrap().dimension(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(solve_strs(&h(), &["2i"]).unwrap_err(), Error::ConstantPolynomial);
        assert_eq!(solve_strs(&h(), &[]).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn irrational_isolated_roots() {
        // (q − (1 + i)) ⋆ (q − j) ⋆ (q − 2k) + 1
        let a = UnivarPoly::from_strs(&h(), &["-1 - i", "1"]).unwrap();
        let b = UnivarPoly::from_strs(&h(), &["-j", "1"]).unwrap();
        let c = UnivarPoly::from_strs(&h(), &["1 - 2k", "1"]).unwrap();
        let p = a.conv_mul(&b).unwrap().conv_mul(&c).unwrap();
        let rs = solve(&p).unwrap();
        let (n, deg) = companion_root_count(&rs).unwrap();
        assert_eq!(n, deg);
    }
}
