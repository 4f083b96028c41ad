//! Sparse multivariate polynomials over the real algebraic numbers.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::AlgebraSignature;
use crate::error::{Error, Result};
use crate::formula::{parse_query_with, Term};
use crate::scalars::{QPoly, Rational, Scalar};

/// `Σ c_α x^α` in `nvars` real variables, zero coefficients never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl RealPoly {
    pub fn zero(nvars: usize) -> Self {
        RealPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if no variable occurs.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &RealPoly) -> RealPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> RealPoly {
        RealPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &RealPoly) -> RealPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> RealPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(s));
        }
        out
    }

    pub fn mul(&self, o: &RealPoly) -> RealPoly {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> RealPoly {
        (0..k).fold(Self::constant(self.nvars, Scalar::one()), |acc, _| acc.mul(self))
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).collect()
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&x.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitutes `values[i]` for every variable with `Some` value.
    pub fn substitute(&self, values: &[Option<Scalar>]) -> RealPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut c = c.clone();
            let mut rest = e.clone();
            for (i, v) in values.iter().enumerate() {
                if let (Some(v), k) = (v, e[i]) {
                    if k > 0 {
                        c = c.mul(&v.pow(k));
                        rest[i] = 0;
                    }
                }
            }
            out.add_term(rest, c);
        }
        out
    }

    /// Replaces variable `v` by the polynomial `by`.
    pub fn compose(&self, v: usize, by: &RealPoly) -> RealPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[v] = 0;
            let mut t = Self::zero(self.nvars);
            t.add_term(rest, c.clone());
            out = out.add(&t.mul(&by.pow(e[v])));
        }
        out
    }

    /// Coefficients with respect to the variables in `vars`, as polynomials in the others.
    pub fn coefficients_in(&self, vars: &[usize]) -> Vec<RealPoly> {
        let mut groups: BTreeMap<Vec<u32>, RealPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&v| e[v]).collect();
            let mut rest = e.clone();
            for &v in vars {
                rest[v] = 0;
            }
            groups.entry(key).or_insert_with(|| Self::zero(self.nvars)).add_term(rest, c.clone());
        }
        groups.into_values().collect()
    }

    /// `c·x_v + r` with `c` constant and `x_v` absent from `r`.
    pub fn linear_in(&self, v: usize) -> Option<(Scalar, RealPoly)> {
        let mut coef = None;
        let mut rest = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            match e[v] {
                0 => rest.add_term(e.clone(), c.clone()),
                1 if e.iter().enumerate().all(|(i, &k)| i == v || k == 0) => coef = Some(c.clone()),
                _ => return None,
            }
        }
        coef.map(|c| (c, rest))
    }

    /// The univariate polynomial in `x_v`, if no other variable occurs and all coefficients are rational.
    pub fn to_univariate(&self, v: usize) -> Option<QPoly> {
        let mut coeffs = vec![];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != v && k > 0) {
                return None;
            }
            let k = e[v] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::from_integer(0.into()));
            }
            coeffs[k] = c.as_rational()?.clone();
        }
        Some(QPoly::new(coeffs))
    }

    /// Real polynomial from a term whose constants are all real.
    pub fn from_term(t: &Term, nvars: usize) -> Result<RealPoly> {
        Ok(match t {
            Term::Var(i) => Self::var(nvars, *i),
            Term::Zero => Self::zero(nvars),
            Term::One => Self::constant(nvars, Scalar::one()),
            Term::Const(c) if c.is_real() => Self::constant(nvars, c.coord(0).clone()),
            Term::Const(c) => return Err(Error::Invalid(format!("non-real constant {c} in a real polynomial"))),
            Term::Neg(a) => Self::from_term(a, nvars)?.neg(),
            Term::Add(a, b) => Self::from_term(a, nvars)?.add(&Self::from_term(b, nvars)?),
            Term::Mul(a, b) => Self::from_term(a, nvars)?.mul(&Self::from_term(b, nvars)?),
        })
    }

    /// Parses real polynomials over one shared variable list; without `vars` the names found are sorted.
    pub fn parse_system(texts: &[&str], vars: Option<&[&str]>) -> Result<(Vec<RealPoly>, Vec<String>)> {
        if texts.is_empty() {
            return Err(Error::Invalid("no polynomials given".into()));
        }
        let sig = AlgebraSignature::quaternion();
        let joined: Vec<String> = texts.iter().map(|t| format!("({t}) = 0")).collect();
        let q = parse_query_with(&sig, &joined.join(" and "), vars)?;
        let n = q.vars.len();
        let polys = q
            .formula
            .atoms()
            .into_iter()
            .map(|(l, r)| Self::from_term(&Term::sub(l.clone(), r.clone()), n))
            .collect::<Result<Vec<_>>>()?;
        Ok((polys, q.vars.names().to_vec()))
    }

    /// Printer with variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> RealPolyDisplay<'a> {
        RealPolyDisplay { p: self, names }
    }
}

pub struct RealPolyDisplay<'a> {
    p: &'a RealPoly,
    names: &'a [String],
}

impl fmt::Display for RealPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first, ties in reverse lexicographic exponent order
        let mut terms: Vec<_> = self.p.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.sign() == std::cmp::Ordering::Less;
            let mag = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != Scalar::one() || e.iter().all(|&x| x == 0) {
                let s = mag.to_string();
                factors.push(if s.contains(['+', '-', ' ']) { format!("({s})") } else { s });
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(format!("{}^{x}", self.names[i])),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn arithmetic_and_printing() {
        let x = RealPoly::var(2, 0);
        let y = RealPoly::var(2, 1);
        let p = x.mul(&x).sub(&y.scale(&Scalar::from_i64(2))).add(&RealPoly::constant(2, Scalar::from_i64(-3)));
        assert_eq!(p.display(&names()).to_string(), "x^2 - 2*y - 3");
        assert_eq!(p.eval(&[Scalar::from_i64(3), Scalar::one()]).unwrap(), Scalar::from_i64(4));
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn parsing() {
        let (ps, names) = RealPoly::parse_system(&["x^2 + y^2 - 1", "x - 1/2*y"], None).unwrap();
        assert_eq!(names, ["x", "y"]);
        assert_eq!(ps[0].display(&names).to_string(), "x^2 + y^2 - 1");
        assert_eq!(ps[1].display(&names).to_string(), "x - 1/2*y");
        assert!(RealPoly::parse_system(&["x*i"], None).is_err());
        let (_, names) = RealPoly::parse_system(&["b - a"], Some(&["b", "a"])).unwrap();
        assert_eq!(names, ["b", "a"]);
    }

    #[test]
    fn composition_and_coefficients() {
        let x = RealPoly::var(2, 0);
        let y = RealPoly::var(2, 1);
        let p = x.mul(&y).add(&y);
        assert_eq!(p.compose(1, &x).display(&names()).to_string(), "x^2 + x");
        assert_eq!(p.coefficients_in(&[1]).len(), 1);
        assert_eq!(p.coefficients_in(&[0]).len(), 2);
        assert!(p.linear_in(1).is_none());
        let (c, r) = y.scale(&Scalar::from_i64(3)).add(&x.mul(&x)).linear_in(1).unwrap();
        assert_eq!(c, Scalar::from_i64(3));
        assert_eq!(r, x.mul(&x));
    }
}
