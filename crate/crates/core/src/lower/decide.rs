//! Exact in-process decision for a fragment of lowered formulas.
//!
//! Universal blocks over conjunctions of equations are eliminated
//! symbolically: over an infinite field `∀y ⋀ p_i(x, y) = 0` holds iff every
//! coefficient of every `p_i` as a polynomial in `y` vanishes. Existential
//! blocks over conjunctions of equations are decided after the free
//! variables are fixed, by substituting variables that occur linearly with a
//! constant coefficient, splitting monomial equations into cases, discarding
//! definite sums of even powers, and counting real roots of what is left
//! univariate (Sturm). Anything else is reported as undecided, to be handed
//! to an external solver.

use std::collections::BTreeMap;

use super::formula::{LoweredQuery, RealFormula};
use super::poly::RealPoly;
use crate::error::{Error, Result};
use crate::scalars::isolate::sturm_count_all;
use crate::scalars::{QPoly, Scalar};

/// Truth of a lowered query at a real point of its free variables.
pub fn decide(lq: &LoweredQuery, point: &[Scalar]) -> Result<bool> {
    if point.len() != lq.nfree {
        return Err(Error::ArityMismatch { expected: lq.nfree, got: point.len() });
    }
    let f = eliminate_universal(&lq.formula);
    let mut env: Vec<Option<Scalar>> = vec![None; lq.names.len()];
    for (k, x) in point.iter().enumerate() {
        env[k] = Some(x.clone());
    }
    eval(&f, &mut env, &lq.names)
}

/// Replaces universal blocks over equation conjunctions by their coefficient equations.
pub fn eliminate_universal(f: &RealFormula) -> RealFormula {
    match f {
        RealFormula::Eq(_) => f.clone(),
        RealFormula::And(a, b) => RealFormula::and(eliminate_universal(a), eliminate_universal(b)),
        RealFormula::Or(a, b) => RealFormula::Or(Box::new(eliminate_universal(a)), Box::new(eliminate_universal(b))),
        RealFormula::Not(a) => RealFormula::Not(Box::new(eliminate_universal(a))),
        RealFormula::Exists(v, a) => RealFormula::Exists(*v, Box::new(eliminate_universal(a))),
        RealFormula::Forall(..) => {
            let (vars, body) = block(f);
            let body = eliminate_universal(body);
            match equations(&body) {
                Some(eqs) => {
                    let mut parts: Vec<RealFormula> = Vec::new();
                    for p in eqs {
                        for c in p.coefficients_in(&vars) {
                            if !parts.iter().any(|q| matches!(q, RealFormula::Eq(x) if *x == c)) {
                                parts.push(RealFormula::Eq(c));
                            }
                        }
                    }
                    RealFormula::conj(parts).unwrap_or_else(|| RealFormula::Eq(RealPoly::zero(body_nvars(&body))))
                }
                None => vars.iter().rev().fold(body, |acc, &v| RealFormula::Forall(v, Box::new(acc))),
            }
        }
    }
}

fn body_nvars(f: &RealFormula) -> usize {
    f.atoms().first().map(|p| p.nvars()).unwrap_or(0)
}

/// A maximal block of like quantifiers and its body.
fn block(f: &RealFormula) -> (Vec<usize>, &RealFormula) {
    let exists = matches!(f, RealFormula::Exists(..));
    let mut vars = Vec::new();
    let mut body = f;
    loop {
        match body {
            RealFormula::Exists(v, a) if exists => {
                vars.push(*v);
                body = a;
            }
            RealFormula::Forall(v, a) if !exists => {
                vars.push(*v);
                body = a;
            }
            _ => return (vars, body),
        }
    }
}

/// The polynomials of a conjunction of equations.
fn equations(f: &RealFormula) -> Option<Vec<RealPoly>> {
    f.conjuncts()
        .into_iter()
        .map(|c| match c {
            RealFormula::Eq(p) => Some(p.clone()),
            _ => None,
        })
        .collect()
}

fn eval(f: &RealFormula, env: &mut Vec<Option<Scalar>>, names: &[String]) -> Result<bool> {
    match f {
        RealFormula::Eq(p) => {
            let p = p.substitute(env);
            p.as_constant().map(|c| c.is_zero()).ok_or_else(|| Error::Internal("unbound variable in atom".into()))
        }
        RealFormula::And(a, b) => Ok(eval(a, env, names)? && eval(b, env, names)?),
        RealFormula::Or(a, b) => Ok(eval(a, env, names)? || eval(b, env, names)?),
        RealFormula::Not(a) => Ok(!eval(a, env, names)?),
        RealFormula::Exists(..) => {
            let (vars, body) = block(f);
            exists(&vars, body, env, names)
        }
        RealFormula::Forall(v, _) => {
            Err(Error::Undecided(format!("universal quantifier over {} with a body that is not a conjunction of equations", names[*v])))
        }
    }
}

/// `∃ vars body` with every other variable bound in `env`.
fn exists(vars: &[usize], body: &RealFormula, env: &mut Vec<Option<Scalar>>, names: &[String]) -> Result<bool> {
    if let RealFormula::Or(a, b) = body {
        return Ok(exists(vars, a, env, names)? || exists(vars, b, env, names)?);
    }
    let mut bound = vars.to_vec();
    let mut eqs = Vec::new();
    let mut todo: Vec<&RealFormula> = body.conjuncts();
    while let Some(c) = todo.pop() {
        match c {
            RealFormula::Eq(p) => eqs.push(p.substitute(env)),
            RealFormula::Exists(..) => {
                let (vs, inner) = block(c);
                bound.extend(vs);
                todo.extend(inner.conjuncts());
            }
            other => {
                let mut used = Vec::new();
                for p in other.atoms() {
                    used.extend(p.support());
                }
                if used.iter().any(|v| bound.contains(v)) {
                    return Err(Error::Undecided("existential block with a negated or quantified conjunct".into()));
                }
                if !eval(other, env, names)? {
                    return Ok(false);
                }
            }
        }
    }
    solve_exists(eqs)
}

/// Whether the equations have a common real solution.
pub fn solve_exists(mut eqs: Vec<RealPoly>) -> Result<bool> {
    loop {
        eqs.retain(|p| !p.is_zero());
        if eqs.iter().any(|p| p.as_constant().is_some()) {
            return Ok(false);
        }
        if eqs.is_empty() {
            return Ok(true);
        }
        if let Some((k, v, c, rest)) = linear_pivot(&eqs) {
            let by = rest.scale(&c.recip()?.neg());
            eqs.remove(k);
            eqs = eqs.iter().map(|p| p.compose(v, &by)).collect();
            continue;
        }
        if eqs.iter().any(definite) {
            return Ok(false);
        }
        // x·y·… = 0: one of the factors vanishes
        if let Some(k) = eqs.iter().position(|p| p.terms().count() == 1) {
            let mut undecided = None;
            for v in eqs[k].support() {
                let zero = RealPoly::zero(eqs[k].nvars());
                match solve_exists(eqs.iter().map(|p| p.compose(v, &zero)).collect()) {
                    Ok(true) => return Ok(true),
                    Ok(false) => {}
                    Err(e) => undecided = Some(e),
                }
            }
            return undecided.map_or(Ok(false), Err);
        }
        // every equation in a single variable: a common real root per variable
        let mut groups: BTreeMap<usize, QPoly> = BTreeMap::new();
        for p in &eqs {
            let s = p.support();
            if s.len() != 1 {
                return Err(Error::Undecided("nonlinear system in several variables".into()));
            }
            let u = p.to_univariate(s[0]).ok_or_else(|| Error::Undecided("irrational coefficients in a univariate equation".into()))?;
            let g = groups.entry(s[0]).or_insert_with(QPoly::zero);
            *g = QPoly::gcd(g, &u);
        }
        return Ok(groups.values().all(|g| !g.is_constant() && sturm_count_all(&g.squarefree()) > 0));
    }
}

/// Nonzero constant plus even monomials, all with coefficients of one sign: never zero.
fn definite(p: &RealPoly) -> bool {
    let constant = p.terms().any(|(e, _)| e.iter().all(|&k| k == 0));
    let mut signs = p.terms().map(|(e, c)| if e.iter().all(|k| k % 2 == 0) { Some(c.sign()) } else { None });
    let first = signs.next().flatten();
    constant && first.is_some() && signs.all(|s| s == first)
}

fn linear_pivot(eqs: &[RealPoly]) -> Option<(usize, usize, Scalar, RealPoly)> {
    for (k, p) in eqs.iter().enumerate() {
        for v in p.support() {
            if let Some((c, rest)) = p.linear_in(v) {
                return Some((k, v, c, rest));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraElement, AlgebraSignature};
    use crate::formula::parse_query;
    use crate::lower::lower_formula;

    fn decide_at(text: &str, point: &str) -> Result<bool> {
        let h = AlgebraSignature::quaternion();
        let q = parse_query(&h, text).unwrap();
        let lq = lower_formula(&q);
        decide(&lq, &lq.lower_point(&[AlgebraElement::parse(&h, point).unwrap()]).unwrap())
    }

    #[test]
    fn square_roots_of_reals() {
        assert!(decide_at("exists c (c*c = q)", "-1").unwrap());
        assert!(decide_at("exists c (c*c = q)", "2").unwrap());
        assert!(decide_at("exists c (c*c = q)", "i").is_err());
    }

    #[test]
    fn centrality_by_coefficients() {
        let f = "forall a (q*a = a*q)";
        assert!(decide_at(f, "3").unwrap());
        assert!(!decide_at(f, "i").unwrap());
    }

    #[test]
    fn central_square_root() {
        let f = "exists c (forall a (c*a = a*c) and c*c = q)";
        assert!(decide_at(f, "9/4").unwrap());
        assert!(decide_at(f, "0").unwrap());
        assert!(!decide_at(f, "-1").unwrap());
    }

    #[test]
    fn univariate_systems() {
        let x = RealPoly::var(1, 0);
        let one = RealPoly::constant(1, Scalar::one());
        assert!(!solve_exists(vec![x.mul(&x).add(&one)]).unwrap());
        assert!(solve_exists(vec![x.mul(&x).sub(&one), x.sub(&one)]).unwrap());
    }
}
