//! Exact evaluation of terms and formulas at a point.
//!
//! Existential blocks are evaluated when they are triangular: every bound
//! variable has a conjunct `c·v + rest = 0` in which `v` occurs nowhere else,
//! and the definitions can be solved one after another. The witnesses are
//! then unique, so the block is true exactly when the remaining conjuncts
//! hold at them. Other quantifiers are rejected.

use super::ast::{Formula, Query, Term};
use super::normalize::{expand_atom, MonoTree};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

type Env = Vec<Option<AlgebraElement>>;

fn lookup<'a>(env: &'a Env, q: &Query, v: usize) -> Result<&'a AlgebraElement> {
    env.get(v)
        .and_then(Option::as_ref)
        .ok_or_else(|| Error::UnknownIdentifier(q.vars.name(v).to_string()))
}

fn term(q: &Query, t: &Term, env: &Env) -> Result<AlgebraElement> {
    Ok(match t {
        Term::Var(v) => lookup(env, q, *v)?.clone(),
        Term::Const(c) => c.clone(),
        Term::Zero => AlgebraElement::zero(&q.sig),
        Term::One => AlgebraElement::one(&q.sig),
        Term::Neg(a) => term(q, a, env)?.neg(),
        Term::Add(a, b) => term(q, a, env)?.add(&term(q, b, env)?)?,
        Term::Mul(a, b) => term(q, a, env)?.mul(&term(q, b, env)?)?,
    })
}

/// Value of a term; `point` assigns the free variables in order.
pub fn eval_term(q: &Query, t: &Term, point: &[AlgebraElement]) -> Result<AlgebraElement> {
    term(q, t, &env_for(q, point)?)
}

fn env_for(q: &Query, point: &[AlgebraElement]) -> Result<Env> {
    if point.len() != q.vars.nfree() {
        return Err(Error::ArityMismatch { expected: q.vars.nfree(), got: point.len() });
    }
    if point.iter().any(|p| !p.sig().same_as(&q.sig)) {
        return Err(Error::SignatureMismatch);
    }
    let mut env: Env = vec![None; q.vars.len()];
    for (k, p) in point.iter().enumerate() {
        env[k] = Some(p.clone());
    }
    Ok(env)
}

/// Truth value of the query's formula at `point`.
pub fn eval_formula(q: &Query, point: &[AlgebraElement]) -> Result<bool> {
    let mut env = env_for(q, point)?;
    formula(q, &q.formula, &mut env)
}

fn formula(q: &Query, f: &Formula, env: &mut Env) -> Result<bool> {
    match f {
        Formula::Eq(a, b) => Ok(term(q, a, env)? == term(q, b, env)?),
        Formula::And(a, b) => Ok(formula(q, a, env)? && formula(q, b, env)?),
        Formula::Or(a, b) => Ok(formula(q, a, env)? || formula(q, b, env)?),
        Formula::Not(a) => Ok(!formula(q, a, env)?),
        Formula::Forall(v, _) => Err(Error::NonTriangularQuantifier(format!("universal quantifier over {}", q.vars.name(*v)))),
        Formula::Exists(..) => {
            let mut bound = Vec::new();
            let mut body = f;
            while let Formula::Exists(v, inner) = body {
                bound.push(*v);
                body = inner;
            }
            let saved: Vec<_> = bound.iter().map(|&v| env[v].take()).collect();
            let r = exists_block(q, &bound, body, env);
            for (&v, s) in bound.iter().zip(saved) {
                env[v] = s;
            }
            r
        }
    }
}

/// `(coef, equation)` for every conjunct defining `v`: `coef·v` occurs and `v` nowhere else.
fn definitions<'a>(v: usize, conj: &[&'a Formula]) -> Result<Vec<(Scalar, &'a Formula)>> {
    let mut out = Vec::new();
    for c in conj {
        let Formula::Eq(l, r) = c else { continue };
        let monos = expand_atom(l, r)?;
        let mut coef = None;
        let mut elsewhere = false;
        for m in &monos {
            match &m.tree {
                Some(MonoTree::Var(w)) if *w == v => coef = Some(m.coef.clone()),
                Some(t) if t.vars().contains(&v) => elsewhere = true,
                _ => {}
            }
        }
        if let (Some(c0), false) = (coef, elsewhere) {
            out.push((c0, *c));
        }
    }
    Ok(out)
}

fn exists_block(q: &Query, bound: &[usize], body: &Formula, env: &mut Env) -> Result<bool> {
    let conj = body.conjuncts();
    let mut pending = Vec::new();
    for &v in bound {
        let defs = definitions(v, &conj)?;
        if defs.is_empty() {
            return Err(Error::NonTriangularQuantifier(format!("no defining equation for {}", q.vars.name(v))));
        }
        pending.push((v, defs));
    }
    // a variable is solved once one of its defining equations has every other variable bound
    while !pending.is_empty() {
        let before = pending.len();
        let mut k = 0;
        while k < pending.len() {
            let (v, defs) = &pending[k];
            let v = *v;
            let ready = defs.iter().find(|(_, eq)| {
                let Formula::Eq(l, r) = eq else { unreachable!() };
                let mut need = Vec::new();
                l.vars(&mut need);
                r.vars(&mut need);
                need.iter().all(|&w| w == v || env[w].is_some())
            });
            let Some((coef, Formula::Eq(l, r))) = ready else {
                k += 1;
                continue;
            };
            // coef·v + rest = 0, and rest is the value at v = 0
            env[v] = Some(AlgebraElement::zero(&q.sig));
            let rest = term(q, l, env)?.sub(&term(q, r, env)?)?;
            env[v] = Some(rest.scale(&coef.recip()?.neg()));
            pending.remove(k);
        }
        if pending.len() == before {
            let names: Vec<&str> = pending.iter().map(|(v, _)| q.vars.name(*v)).collect();
            return Err(Error::NonTriangularQuantifier(format!("cyclic definitions for {}", names.join(", "))));
        }
    }
    formula(q, body, env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSignature;
    use crate::formula::{parse_query, to_ordered};

    fn el(s: &str) -> AlgebraElement {
        AlgebraElement::parse(&AlgebraSignature::quaternion(), s).unwrap()
    }

    fn holds(text: &str, point: &[&str]) -> Result<bool> {
        let q = parse_query(&AlgebraSignature::quaternion(), text)?;
        let p: Vec<_> = point.iter().map(|s| el(s)).collect();
        eval_formula(&q, &p)
    }

    #[test]
    fn atoms_and_connectives() {
        assert!(holds("q*q + 1 = 0", &["i"]).unwrap());
        assert!(!holds("q*q + 1 = 0", &["1"]).unwrap());
        assert!(holds("q1*q2 = k and not q2*q1 = k", &["i", "j"]).unwrap());
        assert!(holds("q = 1 or q != 2", &["3"]).unwrap());
    }

    #[test]
    fn rewritten_query_agrees() {
        let q = parse_query(&AlgebraSignature::quaternion(), "q1*(q3*q2) = q2*q1 + k").unwrap();
        let (out, _) = to_ordered(&q).unwrap();
        for pt in [["i", "j", "k"], ["1 + i", "2j", "k - 1"], ["0", "0", "0"], ["i", "i", "j"]] {
            let p: Vec<_> = pt.iter().map(|s| el(s)).collect();
            assert_eq!(eval_formula(&q, &p).unwrap(), eval_formula(&out, &p).unwrap());
        }
    }

    #[test]
    fn rejects_non_triangular() {
        assert!(matches!(holds("exists t (t*t = q)", &["i"]), Err(Error::NonTriangularQuantifier(_))));
        assert!(matches!(holds("forall a (a*q = q*a)", &["1"]), Err(Error::NonTriangularQuantifier(_))));
        assert!(matches!(holds("q = 0", &[]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn witnesses_solved_in_dependency_order() {
        assert!(holds("exists s exists t (s - q*t = 0 and t - q = 0 and s = -1)", &["i"]).unwrap());
    }
}
