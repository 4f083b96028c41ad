//! Expansion of terms into sums of signed monomials.
//!
//! Distributivity and the centrality of real scalars are the only laws used,
//! so the parenthesisation of every product survives in its [`MonoTree`].

use std::sync::Arc;

use super::ast::{Term, VarTable};
use super::parser::parse_term;
use crate::algebra::{AlgebraElement, AlgebraSignature};
use crate::error::{Error, Result};
use crate::opoly::{Monomial, OrderedPoly};
use crate::scalars::Scalar;

/// A product of variables and non-real constants with its bracketing.
#[derive(Clone, Debug, PartialEq)]
pub enum MonoTree {
    Var(usize),
    Const(AlgebraElement),
    Mul(Box<MonoTree>, Box<MonoTree>),
}

/// `coef · tree`; a missing tree is the unit.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedMono {
    pub coef: Scalar,
    pub tree: Option<MonoTree>,
}

impl MonoTree {
    pub fn mul(a: MonoTree, b: MonoTree) -> MonoTree {
        MonoTree::Mul(Box::new(a), Box::new(b))
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&MonoTree> {
        let mut out = Vec::new();
        fn go<'a>(t: &'a MonoTree, out: &mut Vec<&'a MonoTree>) {
            match t {
                MonoTree::Mul(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                leaf => out.push(leaf),
            }
        }
        go(self, &mut out);
        out
    }

    /// True when every right operand is a leaf.
    pub fn is_left_comb(&self) -> bool {
        match self {
            MonoTree::Mul(a, b) => !matches!(**b, MonoTree::Mul(..)) && a.is_left_comb(),
            _ => true,
        }
    }

    pub fn to_term(&self) -> Term {
        match self {
            MonoTree::Var(i) => Term::Var(*i),
            MonoTree::Const(c) => Term::Const(c.clone()),
            MonoTree::Mul(a, b) => Term::mul(a.to_term(), b.to_term()),
        }
    }

    pub fn vars(&self) -> Vec<usize> {
        self.leaves()
            .into_iter()
            .filter_map(|l| if let MonoTree::Var(i) = l { Some(*i) } else { None })
            .collect()
    }
}

fn combine(out: &mut Vec<SignedMono>, m: SignedMono) {
    if m.coef.is_zero() {
        return;
    }
    if let Some(k) = out.iter().position(|o| o.tree == m.tree) {
        let c = out[k].coef.add(&m.coef);
        if c.is_zero() {
            out.remove(k);
        } else {
            out[k].coef = c;
        }
    } else {
        out.push(m);
    }
}

fn const_mono(c: &AlgebraElement) -> SignedMono {
    if c.is_real() {
        SignedMono { coef: c.coord(0).clone(), tree: None }
    } else {
        SignedMono { coef: Scalar::one(), tree: Some(MonoTree::Const(c.clone())) }
    }
}

fn mul_mono(a: &SignedMono, b: &SignedMono) -> Result<SignedMono> {
    let coef = a.coef.mul(&b.coef);
    let (tree, extra) = match (&a.tree, &b.tree) {
        (None, t) | (t, None) => (t.clone(), None),
        (Some(MonoTree::Const(x)), Some(MonoTree::Const(y))) => {
            let p = const_mono(&x.mul(y)?);
            (p.tree, Some(p.coef))
        }
        (Some(x), Some(y)) => (Some(MonoTree::mul(x.clone(), y.clone())), None),
    };
    let coef = match extra {
        Some(e) => coef.mul(&e),
        None => coef,
    };
    Ok(SignedMono { coef, tree })
}

/// Expands a term into a sum of monomials with like terms combined.
pub fn expand(t: &Term) -> Result<Vec<SignedMono>> {
    Ok(match t {
        Term::Var(i) => vec![SignedMono { coef: Scalar::one(), tree: Some(MonoTree::Var(*i)) }],
        Term::Zero => vec![],
        Term::One => vec![SignedMono { coef: Scalar::one(), tree: None }],
        Term::Const(c) => {
            let m = const_mono(c);
            if m.coef.is_zero() {
                vec![]
            } else {
                vec![m]
            }
        }
        Term::Neg(a) => expand(a)?.into_iter().map(|m| SignedMono { coef: m.coef.neg(), tree: m.tree }).collect(),
        Term::Add(a, b) => {
            let mut out = expand(a)?;
            for m in expand(b)? {
                combine(&mut out, m);
            }
            out
        }
        Term::Mul(a, b) => {
            let (ea, eb) = (expand(a)?, expand(b)?);
            let mut out = Vec::new();
            for x in &ea {
                for y in &eb {
                    combine(&mut out, mul_mono(x, y)?);
                }
            }
            out
        }
    })
}

/// Expands `l − r`.
pub fn expand_atom(l: &Term, r: &Term) -> Result<Vec<SignedMono>> {
    expand(&Term::sub(l.clone(), r.clone()))
}

/// A left comb whose variables appear in non-decreasing order, optionally
/// closed by one constant. In an alternative algebra `X·q^e` equals
/// `(…(X·q)·…)·q`, so such a tree is an ordered monomial.
pub fn is_ordered(tree: &MonoTree) -> bool {
    if !tree.is_left_comb() {
        return false;
    }
    let leaves = tree.leaves();
    let mut last = None;
    for (k, l) in leaves.iter().enumerate() {
        match l {
            MonoTree::Var(i) => {
                if last.is_some_and(|p| p > *i) {
                    return false;
                }
                last = Some(*i);
            }
            MonoTree::Const(_) => {
                if k + 1 != leaves.len() {
                    return false;
                }
            }
            MonoTree::Mul(..) => unreachable!(),
        }
    }
    true
}

pub fn mono_is_ordered(m: &SignedMono) -> bool {
    m.tree.as_ref().is_none_or(is_ordered)
}

/// The exponent vector and right coefficient of an ordered monomial.
pub fn to_ordered_term(sig: &Arc<AlgebraSignature>, m: &SignedMono, nvars: usize) -> Option<(Monomial, AlgebraElement)> {
    let mut exps = vec![0u32; nvars];
    let mut coef = AlgebraElement::real(sig, m.coef.clone());
    if let Some(t) = &m.tree {
        if !is_ordered(t) {
            return None;
        }
        for l in t.leaves() {
            match l {
                MonoTree::Var(i) => *exps.get_mut(*i)? += 1,
                MonoTree::Const(c) => coef = c.scale(&m.coef),
                MonoTree::Mul(..) => unreachable!(),
            }
        }
    }
    Some((Monomial(exps), coef))
}

/// Rebuilds a term: each monomial as a left chain with its coefficient as
/// the leftmost factor, summed from the left.
pub fn build_term(sig: &Arc<AlgebraSignature>, monos: &[SignedMono]) -> Term {
    let mut acc: Option<Term> = None;
    for m in monos {
        let neg = m.coef.sign() == std::cmp::Ordering::Less;
        let mag = if neg { m.coef.neg() } else { m.coef.clone() };
        let body = match &m.tree {
            None if mag == Scalar::one() => Term::One,
            None => Term::Const(AlgebraElement::real(sig, mag)),
            Some(t) if mag == Scalar::one() => t.to_term(),
            Some(t) => prepend(Term::Const(AlgebraElement::real(sig, mag)), t),
        };
        acc = Some(match (acc, neg) {
            (None, false) => body,
            (None, true) => Term::neg(body),
            (Some(a), false) => Term::add(a, body),
            (Some(a), true) => Term::add(a, Term::neg(body)),
        });
    }
    acc.unwrap_or(Term::Zero)
}

/// Puts `c` in front of the leftmost leaf of `t`.
fn prepend(c: Term, t: &MonoTree) -> Term {
    match t {
        MonoTree::Mul(a, b) => Term::mul(prepend(c, a), b.to_term()),
        leaf => Term::mul(c, leaf.to_term()),
    }
}

/// Parses an ordered polynomial literal; every monomial must already be ordered.
pub fn parse_ordered_poly(sig: &Arc<AlgebraSignature>, text: &str) -> Result<OrderedPoly> {
    let (t, vars) = parse_term(sig, text)?;
    monos_to_ordered(sig, &expand(&t)?, &vars)
}

pub fn monos_to_ordered(sig: &Arc<AlgebraSignature>, monos: &[SignedMono], vars: &VarTable) -> Result<OrderedPoly> {
    let mut p = OrderedPoly::with_names(sig, vars.names().to_vec());
    for m in monos {
        let (mono, c) = to_ordered_term(sig, m, vars.len()).ok_or_else(|| {
            Error::NotOrdered(m.tree.as_ref().map(|t| super::ast::TermDisplay { t: &t.to_term(), vars }.to_string()).unwrap_or_default())
        })?;
        p.add_term(mono, c)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Arc<AlgebraSignature> {
        AlgebraSignature::quaternion()
    }

    fn monos(text: &str) -> (Vec<SignedMono>, VarTable) {
        let (t, v) = parse_term(&h(), text).unwrap();
        (expand(&t).unwrap(), v)
    }

    #[test]
    fn expansion_keeps_brackets() {
        let (m, _) = monos("q1*(q3*q2) + 2*q1 - q1");
        assert_eq!(m.len(), 2);
        assert!(!mono_is_ordered(&m[0]));
        assert!(mono_is_ordered(&m[1]));
        assert_eq!(m[1].coef, Scalar::one());
    }

    #[test]
    fn constants_fold() {
        let (m, _) = monos("i*j - k");
        assert!(m.is_empty());
        let (m, _) = monos("(2*q)*i*3");
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].coef, Scalar::from_i64(6));
        assert!(mono_is_ordered(&m[0]));
    }

    #[test]
    fn ordered_predicate() {
        let (m, _) = monos("q1*q1*q2*i");
        assert!(mono_is_ordered(&m[0]));
        let (m, _) = monos("q2*q1");
        assert!(!mono_is_ordered(&m[0]));
        let (m, _) = monos("i*q");
        assert!(!mono_is_ordered(&m[0]));
        let (m, _) = monos("i + q");
        assert!(m.iter().all(mono_is_ordered));
        let (m, _) = monos("q*i*q");
        assert!(!mono_is_ordered(&m[0]));
    }

    #[test]
    fn ordered_literal() {
        let p = parse_ordered_poly(&h(), "q1^2*q2*(1+2i) + q2 - 1").unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.to_string(), "q1^2*q2*(1 + 2i) + q2 - 1");
        assert!(matches!(parse_ordered_poly(&h(), "q2*q1"), Err(Error::NotOrdered(_))));
    }

    #[test]
    fn rebuild_round_trip() {
        let (m, v) = monos("3*q1*(q2*q3) - q2 + 5");
        let t = build_term(&h(), &m);
        assert_eq!(expand(&t).unwrap(), m);
        let q = super::super::ast::Query::new(super::super::ast::Formula::eq(t, Term::Zero), v, &h());
        assert_eq!(q.to_string(), "3*q1*(q2*q3) - q2 + 5 = 0");
    }
}
