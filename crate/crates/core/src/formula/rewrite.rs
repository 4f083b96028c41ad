//! Rewriting every atom into ordered form with fresh existential variables.
//!
//! An atom `l = r` whose expansion has an unordered monomial becomes
//! `∃ s.. ∃ t.. (main = 0 ∧ s_1 − n_1 = 0 ∧ …)`:
//!
//! * phase A names each innermost bracketed right factor `n` by a fresh `s`
//!   (identical factors of one atom share a name), leaving only left combs;
//! * phase B keeps the longest ordered prefix of each comb and names every
//!   later block `x^e` (or a constant that is not last) by a fresh `t`.
//!
//! Fresh variables are created after all existing ones, so replacing a tail by
//! fresh variables in creation order yields an ordered monomial. The
//! definitions determine each witness uniquely, so the block is equivalent to
//! the atom in every context, including under negation.

use std::sync::Arc;

use super::ast::{Formula, Query, Term, VarTable};
use super::normalize::{build_term, expand_atom, is_ordered, mono_is_ordered, MonoTree, SignedMono};
use crate::algebra::AlgebraSignature;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    A,
    B,
}

/// One replacement in atom `atom`: `before` becomes `after` and the
/// definition `fresh − block = 0` is appended as a new equation. Phase A
/// replaces `before` everywhere in the atom; a phase B step replaces one
/// whole monomial (all steps for that monomial share `after`).
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteStep {
    pub atom: usize,
    pub phase: Phase,
    /// Equation (0 = main) and monomial touched; phase A rewrites all equations.
    pub equation: usize,
    pub mono: Option<usize>,
    pub before: MonoTree,
    pub after: MonoTree,
    pub fresh: usize,
    pub block: MonoTree,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
    /// Atoms (in traversal order) that were already ordered.
    pub untouched: Vec<usize>,
}

impl RewriteTrace {
    /// One line per step, with names taken from the rewritten query's variable table.
    pub fn describe(&self, out: &Query) -> Vec<String> {
        self.steps
            .iter()
            .map(|st| {
                let show = |t: &MonoTree| out.display_term(&t.to_term()).to_string();
                let phase = match st.phase {
                    Phase::A => "A",
                    Phase::B => "B",
                };
                format!(
                    "atom {} phase {phase}: {} becomes {}, {} := {}",
                    st.atom,
                    show(&st.before),
                    show(&st.after),
                    out.vars.name(st.fresh),
                    show(&st.block)
                )
            })
            .collect()
    }
}

fn replace_all(t: &MonoTree, target: &MonoTree, with: &MonoTree) -> MonoTree {
    if t == target {
        return with.clone();
    }
    match t {
        MonoTree::Mul(a, b) => MonoTree::mul(replace_all(a, target, with), replace_all(b, target, with)),
        leaf => leaf.clone(),
    }
}

/// An innermost right operand that is a product.
fn innermost_right_product(t: &MonoTree) -> Option<&MonoTree> {
    match t {
        MonoTree::Mul(a, b) => innermost_right_product(a).or_else(|| match **b {
            MonoTree::Mul(..) if b.is_left_comb() => Some(&**b),
            MonoTree::Mul(..) => innermost_right_product(b),
            _ => None,
        }),
        _ => None,
    }
}

fn comb(leaves: Vec<MonoTree>) -> MonoTree {
    let mut it = leaves.into_iter();
    let first = it.next().expect("nonempty");
    it.fold(first, MonoTree::mul)
}

fn definition(fresh: usize, block: &MonoTree) -> Vec<SignedMono> {
    vec![
        SignedMono { coef: Scalar::one(), tree: Some(MonoTree::Var(fresh)) },
        SignedMono { coef: Scalar::from_i64(-1), tree: Some(block.clone()) },
    ]
}

/// Splits an ordered-prefix comb's tail into blocks; returns `(prefix, blocks, final_const)`.
fn split_tail(t: &MonoTree) -> (Vec<MonoTree>, Vec<(MonoTree, u32)>, Option<MonoTree>) {
    let leaves: Vec<MonoTree> = t.leaves().into_iter().cloned().collect();
    let mut k = 0;
    let mut last = None;
    while k < leaves.len() {
        match &leaves[k] {
            MonoTree::Var(i) if last.is_none_or(|p| p <= *i) => {
                last = Some(*i);
                k += 1;
            }
            _ => break,
        }
    }
    let prefix = leaves[..k].to_vec();
    let mut rest = leaves[k..].to_vec();
    let fin = match rest.last() {
        Some(MonoTree::Const(_)) => rest.pop(),
        _ => None,
    };
    let mut blocks: Vec<(MonoTree, u32)> = Vec::new();
    for l in rest {
        match (blocks.last_mut(), &l) {
            (Some((MonoTree::Var(p), e)), MonoTree::Var(i)) if p == i => *e += 1,
            _ => blocks.push((l, 1)),
        }
    }
    (prefix, blocks, fin)
}

struct AtomRewrite {
    eqs: Vec<Vec<SignedMono>>,
    fresh: Vec<usize>,
}

fn rewrite_atom(atom: usize, monos: Vec<SignedMono>, vars: &mut VarTable, steps: &mut Vec<RewriteStep>) -> AtomRewrite {
    let mut eqs = vec![monos];
    let mut fresh = Vec::new();
    // phase A
    loop {
        let found = eqs
            .iter()
            .enumerate()
            .find_map(|(e, eq)| eq.iter().enumerate().find_map(|(m, x)| x.tree.as_ref().and_then(innermost_right_product).map(|n| (e, m, n.clone()))));
        let Some((e, m, n)) = found else { break };
        let s = vars.fresh("s");
        fresh.push(s);
        let sv = MonoTree::Var(s);
        for eq in eqs.iter_mut() {
            for x in eq.iter_mut() {
                if let Some(t) = &x.tree {
                    x.tree = Some(replace_all(t, &n, &sv));
                }
            }
        }
        steps.push(RewriteStep { atom, phase: Phase::A, equation: e, mono: Some(m), before: n.clone(), after: sv, fresh: s, block: n.clone() });
        eqs.push(definition(s, &n));
    }
    // phase B
    let mut e = 0;
    while e < eqs.len() {
        for m in 0..eqs[e].len() {
            let Some(t) = eqs[e][m].tree.clone() else { continue };
            if is_ordered(&t) {
                continue;
            }
            let (mut leaves, blocks, fin) = split_tail(&t);
            let first_step = steps.len();
            for (block, exp) in blocks {
                let tv = vars.fresh("t");
                fresh.push(tv);
                let body = block;
                leaves.extend(std::iter::repeat_n(MonoTree::Var(tv), exp as usize));
                let def = definition(tv, &body);
                eqs.push(def);
                steps.push(RewriteStep {
                    atom,
                    phase: Phase::B,
                    equation: e,
                    mono: Some(m),
                    before: t.clone(),
                    after: MonoTree::Var(tv),
                    fresh: tv,
                    block: body,
                });
            }
            leaves.extend(fin);
            let after = comb(leaves);
            for st in &mut steps[first_step..] {
                st.after = after.clone();
            }
            eqs[e][m].tree = Some(after);
        }
        e += 1;
    }
    AtomRewrite { eqs, fresh }
}

fn block_formula(sig: &Arc<AlgebraSignature>, rw: &AtomRewrite) -> Formula {
    let parts = rw.eqs.iter().map(|eq| Formula::eq(build_term(sig, eq), Term::Zero)).collect();
    let mut f = Formula::conj(parts).expect("main equation");
    for &v in rw.fresh.iter().rev() {
        f = Formula::exists(v, f);
    }
    f
}

struct Ctx<'a> {
    sig: &'a Arc<AlgebraSignature>,
    vars: VarTable,
    trace: RewriteTrace,
    next_atom: usize,
}

fn walk(f: &Formula, cx: &mut Ctx) -> Result<Formula> {
    Ok(match f {
        Formula::Eq(l, r) => {
            let atom = cx.next_atom;
            cx.next_atom += 1;
            let monos = expand_atom(l, r)?;
            if monos.iter().all(mono_is_ordered) {
                cx.trace.untouched.push(atom);
                return Ok(f.clone());
            }
            let rw = rewrite_atom(atom, monos, &mut cx.vars, &mut cx.trace.steps);
            block_formula(cx.sig, &rw)
        }
        Formula::And(a, b) => Formula::and(walk(a, cx)?, walk(b, cx)?),
        Formula::Or(a, b) => Formula::or(walk(a, cx)?, walk(b, cx)?),
        Formula::Not(a) => Formula::not(walk(a, cx)?),
        Formula::Exists(v, a) => Formula::exists(*v, walk(a, cx)?),
        Formula::Forall(v, a) => Formula::forall(*v, walk(a, cx)?),
    })
}

/// Rewrites every atom into ordered form.
pub fn to_ordered(q: &Query) -> Result<(Query, RewriteTrace)> {
    let mut cx = Ctx { sig: &q.sig, vars: q.vars.clone(), trace: RewriteTrace::default(), next_atom: 0 };
    let f = walk(&q.formula, &mut cx)?;
    Ok((Query::new(f, cx.vars, &q.sig), cx.trace))
}

/// Re-applies a trace to the original query; the result must equal the
/// output of [`to_ordered`].
pub fn replay(q: &Query, trace: &RewriteTrace) -> Result<Query> {
    let mut vars = q.vars.clone();
    let mut atom = 0;
    fn go(f: &Formula, q: &Query, trace: &RewriteTrace, vars: &mut VarTable, atom: &mut usize) -> Result<Formula> {
        Ok(match f {
            Formula::Eq(l, r) => {
                let k = *atom;
                *atom += 1;
                if trace.untouched.contains(&k) {
                    return Ok(f.clone());
                }
                let mut eqs = vec![expand_atom(l, r)?];
                let mut fresh = Vec::new();
                for st in trace.steps.iter().filter(|s| s.atom == k) {
                    let name = vars.fresh(if st.phase == Phase::A { "s" } else { "t" });
                    if name != st.fresh {
                        return Err(Error::Invalid(format!("trace names variable {} but replay created {}", st.fresh, name)));
                    }
                    fresh.push(name);
                    match st.phase {
                        Phase::A => {
                            for eq in eqs.iter_mut() {
                                for x in eq.iter_mut() {
                                    if let Some(t) = &x.tree {
                                        x.tree = Some(replace_all(t, &st.before, &st.after));
                                    }
                                }
                            }
                        }
                        Phase::B => {
                            let x = st
                                .mono
                                .and_then(|m| eqs.get_mut(st.equation)?.get_mut(m))
                                .ok_or_else(|| Error::Invalid("trace step refers to a missing monomial".into()))?;
                            if x.tree.as_ref() != Some(&st.before) && x.tree.as_ref() != Some(&st.after) {
                                return Err(Error::Invalid("trace step does not match the monomial".into()));
                            }
                            x.tree = Some(st.after.clone());
                        }
                    }
                    eqs.push(definition(name, &st.block));
                }
                if eqs.iter().flatten().any(|m| !mono_is_ordered(m)) {
                    return Err(Error::Invalid(format!("trace leaves atom {k} unordered")));
                }
                block_formula(&q.sig, &AtomRewrite { eqs, fresh })
            }
            Formula::And(a, b) => Formula::and(go(a, q, trace, vars, atom)?, go(b, q, trace, vars, atom)?),
            Formula::Or(a, b) => Formula::or(go(a, q, trace, vars, atom)?, go(b, q, trace, vars, atom)?),
            Formula::Not(a) => Formula::not(go(a, q, trace, vars, atom)?),
            Formula::Exists(v, a) => Formula::exists(*v, go(a, q, trace, vars, atom)?),
            Formula::Forall(v, a) => Formula::forall(*v, go(a, q, trace, vars, atom)?),
        })
    }
    let f = go(&q.formula, q, trace, &mut vars, &mut atom)?;
    Ok(Query::new(f, vars, &q.sig))
}

/// True when every atom of the formula expands to ordered monomials.
pub fn is_ordered_query(q: &Query) -> Result<bool> {
    for (l, r) in q.formula.atoms() {
        if !expand_atom(l, r)?.iter().all(mono_is_ordered) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSignature;
    use crate::formula::parse_query;

    fn rw(text: &str) -> (Query, Query, RewriteTrace) {
        let q = parse_query(&AlgebraSignature::quaternion(), text).unwrap();
        let (out, tr) = to_ordered(&q).unwrap();
        (q, out, tr)
    }

    #[test]
    fn nested_product() {
        let (q, out, tr) = rw("q1*(q3*q2) = 0");
        assert_eq!(out.to_string(), "exists s1 exists t1 (q1*s1 = 0 and s1 - q3*t1 = 0 and t1 - q2 = 0)");
        assert_eq!(tr.steps.len(), 2);
        assert_eq!(replay(&q, &tr).unwrap(), out);
        assert!(is_ordered_query(&out).unwrap());
        assert!(!is_ordered_query(&q).unwrap());
    }

    #[test]
    fn swapped_product() {
        let (_, out, _) = rw("q2*q1 = 0");
        assert_eq!(out.to_string(), "exists t1 (q2*t1 = 0 and t1 - q1 = 0)");
    }

    #[test]
    fn ordered_atoms_untouched() {
        let (q, out, tr) = rw("q1*q2*i + q1^2 = 3 or q2 = i");
        assert_eq!(out, q);
        assert_eq!(tr.untouched, vec![0, 1]);
    }

    #[test]
    fn shared_factor_and_left_constant() {
        let (q, out, tr) = rw("q1*(q2*q3) + q2*(q2*q3) = i*q1");
        assert!(is_ordered_query(&out).unwrap());
        let sa = tr.steps.iter().filter(|s| s.phase == Phase::A).count();
        assert_eq!(sa, 1);
        assert_eq!(replay(&q, &tr).unwrap(), out);
    }

    #[test]
    fn powers_in_the_tail() {
        let (_, out, _) = rw("q2*q1^2*j = 1");
        assert_eq!(out.to_string(), "exists t1 (q2*t1^2*j - 1 = 0 and t1 - q1 = 0)");
    }
}
