//! Algebraic sets: finite unions of common zero sets of ordered polynomials.
//!
//! Sets are kept as lists of generators. There is no canonical form and no
//! equality test; two descriptions are compared only by sampling membership.

mod linalg;

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, AlgebraSignature};
use crate::error::{Error, Result};
use crate::formula::{expand_atom, monos_to_ordered, parse_query_with, Formula};
use crate::opoly::{Monomial, OrderedPoly};
use crate::scalars::{rat, Rational, Scalar};

pub use linalg::{nullspace, rref};

/// Common zero set of finitely many ordered polynomials.
#[derive(Clone, Debug)]
pub struct BasicAlgebraicSet {
    polys: Vec<OrderedPoly>,
}

impl BasicAlgebraicSet {
    pub fn new(polys: Vec<OrderedPoly>) -> Result<Self> {
        let first = polys.first().ok_or_else(|| Error::Invalid("a basic algebraic set needs at least one polynomial".into()))?;
        if polys.iter().any(|p| p.nvars() != first.nvars() || !p.sig().same_as(first.sig())) {
            return Err(Error::SignatureMismatch);
        }
        Ok(BasicAlgebraicSet { polys })
    }

    pub fn polys(&self) -> &[OrderedPoly] {
        &self.polys
    }

    pub fn nvars(&self) -> usize {
        self.polys[0].nvars()
    }

    pub fn sig(&self) -> &Arc<AlgebraSignature> {
        self.polys[0].sig()
    }

    pub fn contains(&self, point: &[AlgebraElement]) -> Result<bool> {
        for p in &self.polys {
            if !p.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Finite union of basic algebraic sets.
#[derive(Clone, Debug)]
pub struct AlgebraicSet {
    basics: Vec<BasicAlgebraicSet>,
    /// Points with irrational real algebraic coordinates are admitted once the scalars are extended.
    extended: bool,
}

impl AlgebraicSet {
    pub fn new(basics: Vec<BasicAlgebraicSet>) -> Result<Self> {
        let first = basics.first().ok_or_else(|| Error::Invalid("an algebraic set needs at least one component".into()))?;
        if basics.iter().any(|b| b.nvars() != first.nvars() || !b.sig().same_as(first.sig())) {
            return Err(Error::SignatureMismatch);
        }
        Ok(AlgebraicSet { basics, extended: false })
    }

    /// The zero set of one list of polynomials.
    pub fn basic(polys: Vec<OrderedPoly>) -> Result<Self> {
        Self::new(vec![BasicAlgebraicSet::new(polys)?])
    }

    pub fn basics(&self) -> &[BasicAlgebraicSet] {
        &self.basics
    }

    pub fn nvars(&self) -> usize {
        self.basics[0].nvars()
    }

    pub fn sig(&self) -> &Arc<AlgebraSignature> {
        self.basics[0].sig()
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    fn compatible(&self, o: &AlgebraicSet) -> Result<()> {
        if self.nvars() != o.nvars() || !self.sig().same_as(o.sig()) {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    /// The same generators read over the real algebraic numbers.
    pub fn extend_scalars(&self) -> AlgebraicSet {
        AlgebraicSet { basics: self.basics.clone(), extended: true }
    }

    pub fn member(&self, point: &[AlgebraElement]) -> Result<bool> {
        if point.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: point.len() });
        }
        if point.iter().any(|p| !p.sig().same_as(self.sig())) {
            return Err(Error::SignatureMismatch);
        }
        if !self.extended && point.iter().flat_map(|p| p.coords()).any(|c| !c.is_rational()) {
            return Err(Error::Invalid("point has irrational coordinates; extend the scalars first".into()));
        }
        for b in &self.basics {
            if b.contains(point)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn union(&self, o: &AlgebraicSet) -> Result<AlgebraicSet> {
        self.compatible(o)?;
        let mut basics = self.basics.clone();
        basics.extend(o.basics.iter().cloned());
        Ok(AlgebraicSet { basics, extended: self.extended || o.extended })
    }

    /// Intersection distributed over the unions: one component per pair.
    pub fn intersect(&self, o: &AlgebraicSet) -> Result<AlgebraicSet> {
        self.compatible(o)?;
        let mut basics = Vec::new();
        for a in &self.basics {
            for b in &o.basics {
                let mut polys = a.polys.clone();
                polys.extend(b.polys.iter().cloned());
                basics.push(BasicAlgebraicSet { polys });
            }
        }
        Ok(AlgebraicSet { basics, extended: self.extended || o.extended })
    }

    /// `{"union": [{"polys": [...]}, ...], "vars": [...], "scalars": ...}`.
    pub fn to_json(&self) -> Value {
        json!({
            "sig": self.sig().name(),
            "vars": self.basics[0].polys[0].names(),
            "scalars": if self.extended { "real algebraic" } else { "rational" },
            "union": self.basics.iter().map(|b| json!({"polys": b.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>()})).collect::<Vec<_>>(),
        })
    }

    /// Reads the JSON form; `"vars"` fixes the variable order, otherwise the names found are sorted.
    pub fn from_json(sig: &Arc<AlgebraSignature>, v: &Value) -> Result<AlgebraicSet> {
        let bad = |m: &str| Error::Invalid(format!("set description: {m}"));
        let union = v.get("union").and_then(Value::as_array).ok_or_else(|| bad("missing \"union\" array"))?;
        let mut texts: Vec<Vec<String>> = Vec::new();
        for b in union {
            let polys = b.get("polys").and_then(Value::as_array).ok_or_else(|| bad("component without \"polys\""))?;
            texts.push(polys.iter().map(|p| p.as_str().map(str::to_string).ok_or_else(|| bad("polynomial is not a string"))).collect::<Result<_>>()?);
        }
        let vars: Option<Vec<String>> = match v.get("vars") {
            Some(a) => Some(a.as_array().ok_or_else(|| bad("\"vars\" is not an array"))?.iter().map(|n| n.as_str().map(str::to_string).ok_or_else(|| bad("variable is not a string"))).collect::<Result<_>>()?),
            None => None,
        };
        let mut set = parse_components(sig, &texts, vars.as_deref())?;
        set.extended = v.get("scalars").and_then(Value::as_str) == Some("real algebraic");
        Ok(set)
    }
}

/// Parses components of polynomial literals over one shared variable list.
pub fn parse_components(sig: &Arc<AlgebraSignature>, comps: &[Vec<String>], vars: Option<&[String]>) -> Result<AlgebraicSet> {
    let all: Vec<String> = comps.iter().flatten().map(|t| format!("({t}) = 0")).collect();
    if all.is_empty() {
        return Err(Error::Invalid("an algebraic set needs at least one polynomial".into()));
    }
    let hint: Option<Vec<&str>> = vars.map(|v| v.iter().map(String::as_str).collect());
    let q = parse_query_with(sig, &all.join(" and "), hint.as_deref())?;
    let atoms: Vec<&Formula> = q.formula.conjuncts();
    let mut k = 0;
    let mut basics = Vec::new();
    for comp in comps {
        let mut polys = Vec::new();
        for _ in comp {
            let Formula::Eq(l, r) = atoms[k] else { unreachable!() };
            polys.push(monos_to_ordered(sig, &expand_atom(l, r)?, &q.vars)?);
            k += 1;
        }
        basics.push(BasicAlgebraicSet::new(polys)?);
    }
    AlgebraicSet::new(basics)
}

/// Exponent vectors of total degree at most `d` in `n` variables, by degree then lexicographically.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut e = vec![0u32; n];
        fn go(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == e.len() {
                e[i] = left;
                out.push(Monomial(e.clone()));
                return;
            }
            for k in (0..=left).rev() {
                e[i] = k;
                go(i + 1, left - k, e, out);
            }
        }
        if n == 0 {
            if deg == 0 {
                out.push(Monomial(vec![]));
            }
            continue;
        }
        go(0, deg, &mut e, &mut out);
    }
    out
}

/// Basis of the ordered polynomials of degree at most `d` vanishing at every point.
///
/// Each monomial's right coefficient contributes `k` rational unknowns and
/// each point `k` linear equations, so this is an exact rational nullspace.
pub fn vanishing_space(sig: &Arc<AlgebraSignature>, nvars: usize, points: &[Vec<AlgebraElement>], d: u32) -> Result<Vec<OrderedPoly>> {
    let k = sig.dim();
    let monos = monomials_up_to(nvars, d);
    let names = crate::opoly::default_names(nvars);
    let ncols = monos.len() * k;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for pt in points {
        if pt.len() != nvars {
            return Err(Error::ArityMismatch { expected: nvars, got: pt.len() });
        }
        // column (m, c) holds the coordinates of m(pt)·e_c
        let mut block = vec![vec![rat(0, 1); ncols]; k];
        for (mi, m) in monos.iter().enumerate() {
            let mut single = OrderedPoly::with_names(sig, names.clone());
            single.add_term(m.clone(), AlgebraElement::one(sig))?;
            let value = single.eval(pt)?;
            for c in 0..k {
                let prod = value.mul(&AlgebraElement::basis(sig, c))?;
                for (l, x) in prod.coords().iter().enumerate() {
                    block[l][mi * k + c] = x
                        .as_rational()
                        .cloned()
                        .ok_or_else(|| Error::Unsupported("vanishing space needs points with rational coordinates".into()))?;
                }
            }
        }
        rows.extend(block);
    }
    let mut out = Vec::new();
    for v in nullspace(rows, ncols) {
        let mut p = OrderedPoly::with_names(sig, names.clone());
        for (mi, m) in monos.iter().enumerate() {
            let coords: Vec<Scalar> = v[mi * k..(mi + 1) * k].iter().map(|x| Scalar::from_rational(x.clone())).collect();
            p.add_term(m.clone(), AlgebraElement::new(sig, coords)?)?;
        }
        out.push(p);
    }
    Ok(out)
}

/// Points `x + y·u` of the sphere with imaginary unit `u` from inverse
/// stereographic projection of the rational grid; rational whenever `x`, `y` are.
pub fn sphere_points(sig: &Arc<AlgebraSignature>, x: &Scalar, y: &Scalar, count: usize) -> Vec<AlgebraElement> {
    let k = sig.dim();
    let mut out = Vec::with_capacity(count);
    let mut r: i64 = 0;
    'outer: loop {
        // parameters (a, b, 0, …) with max(|a|, |b|) = r, then shrink by r + 1 to vary denominators
        for a in -r..=r {
            for b in -r..=r {
                if a.abs().max(b.abs()) != r {
                    continue;
                }
                if out.len() == count {
                    break 'outer;
                }
                let scale = rat(r + 1, r + 2);
                let (a, b) = (rat(a, 1) * &scale, rat(b, 1) * &scale);
                let s = &a * &a + &b * &b;
                let den = &s + rat(1, 1);
                let mut u = vec![Scalar::zero(); k];
                u[1] = Scalar::from_rational(rat(2, 1) * &a / &den);
                u[2] = Scalar::from_rational(rat(2, 1) * &b / &den);
                u[k - 1] = Scalar::from_rational((&s - rat(1, 1)) / &den);
                let mut coords: Vec<Scalar> = u.iter().map(|c| c.mul(y)).collect();
                coords[0] = x.clone();
                out.push(AlgebraElement::new(sig, coords).expect("dimension matches"));
            }
        }
        r += 1;
    }
    out
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

    fn set(comps: &[&[&str]]) -> AlgebraicSet {
        let c: Vec<Vec<String>> = comps.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
        parse_components(&h(), &c, None).unwrap()
    }

    #[test]
    fn membership() {
        let s = set(&[&["q^2 + 1"]]);
        assert!(s.member(&[el("i")]).unwrap());
        assert!(!s.member(&[el("1")]).unwrap());
        let two = set(&[&["q - i"], &["q + i"]]);
        assert!(!two.member(&[el("j")]).unwrap());
        assert!(two.member(&[el("-i")]).unwrap());
    }

    #[test]
    fn union_and_intersection() {
        let a = set(&[&["q - i"]]);
        let b = set(&[&["q + i"]]);
        let both = a.intersect(&b).unwrap();
        assert_eq!(both.basics().len(), 1);
        assert!(!both.member(&[el("i")]).unwrap());
        let x = a.union(&b).unwrap().intersect(&set(&[&["q^2 + 1"]])).unwrap();
        assert_eq!(x.basics().len(), 2);
        assert!(x.member(&[el("i")]).unwrap());
        assert!(!x.member(&[el("j")]).unwrap());
    }

    #[test]
    fn scalar_extension() {
        let s = set(&[&["q^2 - 2"]]);
        let r2 = AlgebraElement::real(&h(), Scalar::from_i64(2).sqrt().unwrap());
        assert!(s.member(&[r2.clone()]).is_err());
        assert!(s.extend_scalars().member(&[r2]).unwrap());
        assert!(set(&[&["q - 1"]]).extend_scalars().member(&[el("1")]).unwrap());
        assert!(BasicAlgebraicSet::new(vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = set(&[&["q1^2 + 1", "q2"], &["q1 - i"]]);
        let back = AlgebraicSet::from_json(&h(), &s.to_json()).unwrap();
        assert_eq!(back.to_json(), s.to_json());
        assert_eq!(back.nvars(), 2);
    }

    #[test]
    fn vanishing_space_examples() {
        let pts = vec![vec![el("i")], vec![el("-i")]];
        let basis = vanishing_space(&h(), 1, &pts, 2).unwrap();
        assert_eq!(basis.len(), 4);
        for p in &basis {
            assert!(p.eval(&[el("j")]).unwrap().is_zero());
            assert!(p.eval(&[el("3/5i + 4/5j")]).unwrap().is_zero());
        }
        assert_eq!(vanishing_space(&h(), 1, &[vec![el("1")]], 1).unwrap().len(), 4);
        assert_eq!(vanishing_space(&h(), 1, &[], 1).unwrap().len(), 8);
    }

    #[test]
    fn sphere_points_are_distinct_and_on_the_sphere() {
        let pts = sphere_points(&h(), &Scalar::zero(), &Scalar::one(), 25);
        assert_eq!(pts.len(), 25);
        for (a, p) in pts.iter().enumerate() {
            assert_eq!(p.norm().unwrap(), Scalar::one());
            assert!(p.trace().unwrap().is_zero());
            assert!(pts[..a].iter().all(|q| q != p));
        }
    }
}
