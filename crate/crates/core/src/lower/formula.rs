//! Lowering terms and formulas to real polynomial arithmetic.
//!
//! Algebra variable `v` becomes the real variables `v_0 … v_{k−1}` (its
//! coordinates), products go through the structure constants, and an
//! equation becomes the conjunction of its `k` coordinate equations.

use std::fmt;

use super::poly::RealPoly;
use crate::algebra::{coord_extract, AlgebraElement, AlgebraSignature};
use crate::error::{Error, Result};
use crate::formula::{Formula, Query, Term};
use crate::scalars::Scalar;

/// A first-order formula over the reals whose atoms are `p = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum RealFormula {
    Eq(RealPoly),
    And(Box<RealFormula>, Box<RealFormula>),
    Or(Box<RealFormula>, Box<RealFormula>),
    Not(Box<RealFormula>),
    Exists(usize, Box<RealFormula>),
    Forall(usize, Box<RealFormula>),
}

impl RealFormula {
    pub fn and(a: RealFormula, b: RealFormula) -> RealFormula {
        RealFormula::And(Box::new(a), Box::new(b))
    }

    /// Left-nested conjunction; `None` for no parts.
    pub fn conj(parts: Vec<RealFormula>) -> Option<RealFormula> {
        parts.into_iter().reduce(RealFormula::and)
    }

    pub fn conjuncts(&self) -> Vec<&RealFormula> {
        match self {
            RealFormula::And(a, b) => {
                let mut v = a.conjuncts();
                v.extend(b.conjuncts());
                v
            }
            f => vec![f],
        }
    }

    /// Polynomials of the atoms, left to right.
    pub fn atoms(&self) -> Vec<&RealPoly> {
        match self {
            RealFormula::Eq(p) => vec![p],
            RealFormula::And(a, b) | RealFormula::Or(a, b) => {
                let mut v = a.atoms();
                v.extend(b.atoms());
                v
            }
            RealFormula::Not(a) | RealFormula::Exists(_, a) | RealFormula::Forall(_, a) => a.atoms(),
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            RealFormula::Eq(_) => true,
            RealFormula::And(a, b) | RealFormula::Or(a, b) => a.is_quantifier_free() && b.is_quantifier_free(),
            RealFormula::Not(a) => a.is_quantifier_free(),
            _ => false,
        }
    }
}

/// A lowered query: the real formula, the names of its real variables and
/// how many of them are free (the coordinates of the free algebra variables).
#[derive(Clone, Debug, PartialEq)]
pub struct LoweredQuery {
    pub formula: RealFormula,
    pub names: Vec<String>,
    pub nfree: usize,
    /// Coordinates per algebra variable.
    pub dim: usize,
}

impl LoweredQuery {
    /// The coordinates of an algebra-valued point, in real-variable order.
    pub fn lower_point(&self, point: &[AlgebraElement]) -> Result<Vec<Scalar>> {
        if point.len() * self.dim != self.nfree {
            return Err(Error::ArityMismatch { expected: self.nfree / self.dim, got: point.len() });
        }
        Ok(point.iter().flat_map(|p| p.coords().to_vec()).collect())
    }

    /// Like [`lower_point`](Self::lower_point) but reads the coordinates back through the
    /// ring-theoretic extraction identities.
    pub fn extract_point(&self, point: &[AlgebraElement]) -> Result<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.nfree);
        for p in point {
            out.extend(coord_extract(p)?);
        }
        if out.len() != self.nfree {
            return Err(Error::ArityMismatch { expected: self.nfree / self.dim, got: point.len() });
        }
        Ok(out)
    }
}

impl fmt::Display for LoweredQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_formula(f, &self.formula, &self.names, false)
    }
}

fn fmt_formula(f: &mut fmt::Formatter<'_>, g: &RealFormula, names: &[String], nested: bool) -> fmt::Result {
    match g {
        RealFormula::Eq(p) => write!(f, "{} = 0", p.display(names)),
        RealFormula::And(a, b) | RealFormula::Or(a, b) => {
            let op = if matches!(g, RealFormula::And(..)) { "and" } else { "or" };
            if nested {
                write!(f, "(")?;
            }
            // a left child of the same connective needs no parentheses
            let same = |x: &RealFormula| std::mem::discriminant(x) == std::mem::discriminant(g);
            fmt_formula(f, a, names, !same(a))?;
            write!(f, " {op} ")?;
            fmt_formula(f, b, names, true)?;
            if nested {
                write!(f, ")")?;
            }
            Ok(())
        }
        RealFormula::Not(a) => {
            write!(f, "not ")?;
            fmt_formula(f, a, names, true)
        }
        RealFormula::Exists(v, a) | RealFormula::Forall(v, a) => {
            let q = if matches!(g, RealFormula::Exists(..)) { "exists" } else { "forall" };
            write!(f, "{q} {} ", names[*v])?;
            match **a {
                RealFormula::Exists(..) | RealFormula::Forall(..) => fmt_formula(f, a, names, false),
                _ => {
                    write!(f, "(")?;
                    fmt_formula(f, a, names, false)?;
                    write!(f, ")")
                }
            }
        }
    }
}

/// The `k` real coordinate polynomials of `t`; algebra variable `v` owns real variables `v·k … v·k + k − 1`.
pub fn lower_term(sig: &AlgebraSignature, t: &Term, nvars: usize) -> Vec<RealPoly> {
    let k = sig.dim();
    let n = nvars * k;
    let constant = |c: &AlgebraElement| c.coords().iter().map(|x| RealPoly::constant(n, x.clone())).collect::<Vec<_>>();
    match t {
        Term::Var(v) => (0..k).map(|c| RealPoly::var(n, v * k + c)).collect(),
        Term::Const(c) => constant(c),
        Term::Zero => vec![RealPoly::zero(n); k],
        Term::One => (0..k).map(|c| RealPoly::constant(n, if c == 0 { Scalar::one() } else { Scalar::zero() })).collect(),
        Term::Neg(a) => lower_term(sig, a, nvars).iter().map(RealPoly::neg).collect(),
        Term::Add(a, b) => {
            let (x, y) = (lower_term(sig, a, nvars), lower_term(sig, b, nvars));
            x.iter().zip(&y).map(|(p, q)| p.add(q)).collect()
        }
        Term::Mul(a, b) => {
            let (x, y) = (lower_term(sig, a, nvars), lower_term(sig, b, nvars));
            let mut out = vec![RealPoly::zero(n); k];
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    if yj.is_zero() {
                        continue;
                    }
                    let xy = xi.mul(yj);
                    for (l, c) in sig.product(i, j) {
                        out[*l] = out[*l].add(&xy.scale(&Scalar::from_rational(c.clone())));
                    }
                }
            }
            out
        }
    }
}

fn lower(sig: &AlgebraSignature, f: &Formula, nvars: usize) -> RealFormula {
    let k = sig.dim();
    let block = |v: usize, body: RealFormula, exists: bool| {
        (0..k).rev().fold(body, |acc, c| {
            if exists {
                RealFormula::Exists(v * k + c, Box::new(acc))
            } else {
                RealFormula::Forall(v * k + c, Box::new(acc))
            }
        })
    };
    match f {
        Formula::Eq(a, b) => {
            let d = lower_term(sig, &Term::sub(a.clone(), b.clone()), nvars);
            RealFormula::conj(d.into_iter().map(RealFormula::Eq).collect()).expect("dimension is at least 1")
        }
        Formula::And(a, b) => RealFormula::and(lower(sig, a, nvars), lower(sig, b, nvars)),
        Formula::Or(a, b) => RealFormula::Or(Box::new(lower(sig, a, nvars)), Box::new(lower(sig, b, nvars))),
        Formula::Not(a) => RealFormula::Not(Box::new(lower(sig, a, nvars))),
        Formula::Exists(v, a) => block(*v, lower(sig, a, nvars), true),
        Formula::Forall(v, a) => block(*v, lower(sig, a, nvars), false),
    }
}

/// Lowers a query. Real variable `v·k + c` is named `{name}_{c}`.
pub fn lower_formula(q: &Query) -> LoweredQuery {
    let k = q.sig.dim();
    let names = q.vars.names().iter().flat_map(|n| (0..k).map(move |c| format!("{n}_{c}"))).collect();
    LoweredQuery { formula: lower(&q.sig, &q.formula, q.vars.len()), names, nfree: q.vars.nfree() * k, dim: k }
}

/// Lowers a term of `q`'s variables.
pub fn lower_query_term(q: &Query, t: &Term) -> Vec<RealPoly> {
    lower_term(&q.sig, t, q.vars.len())
}

/// Truth of a quantifier-free lowered formula at a real point.
pub fn eval_real(lq: &LoweredQuery, point: &[Scalar]) -> Result<bool> {
    if point.len() != lq.nfree {
        return Err(Error::ArityMismatch { expected: lq.nfree, got: point.len() });
    }
    let mut full = point.to_vec();
    full.resize(lq.names.len(), Scalar::zero());
    eval_qf(&lq.formula, &full)
}

fn eval_qf(f: &RealFormula, x: &[Scalar]) -> Result<bool> {
    Ok(match f {
        RealFormula::Eq(p) => p.eval(x)?.is_zero(),
        RealFormula::And(a, b) => eval_qf(a, x)? && eval_qf(b, x)?,
        RealFormula::Or(a, b) => eval_qf(a, x)? || eval_qf(b, x)?,
        RealFormula::Not(a) => !eval_qf(a, x)?,
        RealFormula::Exists(..) | RealFormula::Forall(..) => {
            return Err(Error::Unsupported("quantified formula; use decide".into()));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::formula::parse_query;

    fn h() -> Arc<AlgebraSignature> {
        AlgebraSignature::quaternion()
    }

    fn lowered(text: &str) -> Vec<String> {
        let q = parse_query(&h(), text).unwrap();
        let lq = lower_formula(&q);
        lq.formula.atoms().iter().map(|p| p.display(&lq.names).to_string()).collect()
    }

    #[test]
    fn square_plus_one() {
        assert_eq!(lowered("q^2 + 1 = 0"), ["q_0^2 - q_1^2 - q_2^2 - q_3^2 + 1", "2*q_0*q_1", "2*q_0*q_2", "2*q_0*q_3"]);
    }

    #[test]
    fn equation_lowers_coordinatewise() {
        assert_eq!(lowered("q = 0"), ["q_0", "q_1", "q_2", "q_3"]);
    }

    #[test]
    fn real_part_extraction() {
        assert_eq!(lowered("q - i*q*i - j*q*j - k*q*k = 0"), ["4*q_0", "0", "0", "0"]);
    }

    #[test]
    fn quantifiers_become_coordinate_blocks() {
        let q = parse_query(&h(), "exists c (c*c = q)").unwrap();
        let lq = lower_formula(&q);
        assert_eq!(lq.nfree, 4);
        assert!(lq.to_string().starts_with("exists c_0 exists c_1 exists c_2 exists c_3 ("));
    }

    #[test]
    fn evaluation_matches() {
        let q = parse_query(&h(), "q1*q2 = k and not q2*q1 = k").unwrap();
        let lq = lower_formula(&q);
        let pt = [AlgebraElement::parse(&h(), "i").unwrap(), AlgebraElement::parse(&h(), "j").unwrap()];
        assert!(eval_real(&lq, &lq.extract_point(&pt).unwrap()).unwrap());
    }
}
