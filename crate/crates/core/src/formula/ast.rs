//! Terms and formulas of the ring language with algebra constants.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, AlgebraSignature};

/// Products are binary and keep their parenthesisation.
#[derive(Clone, Debug, PartialEq)]
pub enum Term {
    Var(usize),
    Const(AlgebraElement),
    Zero,
    One,
    Neg(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Formula {
    Eq(Term, Term),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Exists(usize, Box<Formula>),
    Forall(usize, Box<Formula>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(Term::Neg(Box::new(b))))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    /// Variables occurring in the term, in first-occurrence order.
    pub fn vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(i) => {
                if !out.contains(i) {
                    out.push(*i);
                }
            }
            Term::Neg(a) => a.vars(out),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Term::Const(_) | Term::Zero | Term::One => {}
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Neg(a) => 1 + a.depth(),
            Term::Add(a, b) | Term::Mul(a, b) => 1 + a.depth().max(b.depth()),
            _ => 0,
        }
    }
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn exists(v: usize, a: Formula) -> Formula {
        Formula::Exists(v, Box::new(a))
    }

    pub fn forall(v: usize, a: Formula) -> Formula {
        Formula::Forall(v, Box::new(a))
    }

    /// Left-nested conjunction, as the parser builds it; `None` for an empty list.
    pub fn conj(parts: Vec<Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    /// Flattens nested conjunctions.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        match self {
            Formula::And(a, b) => {
                let mut v = a.conjuncts();
                v.extend(b.conjuncts());
                v
            }
            f => vec![f],
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Eq(..) => true,
            Formula::And(a, b) | Formula::Or(a, b) => a.is_quantifier_free() && b.is_quantifier_free(),
            Formula::Not(a) => a.is_quantifier_free(),
            Formula::Exists(..) | Formula::Forall(..) => false,
        }
    }

    /// Atoms in depth-first, left-to-right order.
    pub fn atoms(&self) -> Vec<(&Term, &Term)> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<(&'a Term, &'a Term)>) {
        match self {
            Formula::Eq(a, b) => out.push((a, b)),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            Formula::Not(a) | Formula::Exists(_, a) | Formula::Forall(_, a) => a.collect_atoms(out),
        }
    }

    /// Free variables (not bound by an enclosing quantifier), in first-occurrence order.
    pub fn free_vars(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<usize>, out: &mut Vec<usize>) {
        match self {
            Formula::Eq(a, b) => {
                let mut vs = Vec::new();
                a.vars(&mut vs);
                b.vars(&mut vs);
                for v in vs {
                    if !bound.contains(&v) && !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::Exists(v, a) | Formula::Forall(v, a) => {
                bound.push(*v);
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }
}

/// Names of all variables; free variables come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    nfree: usize,
}

impl VarTable {
    pub fn new(free: Vec<String>) -> Self {
        let nfree = free.len();
        VarTable { names: free, nfree }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn nfree(&self) -> usize {
        self.nfree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Appends a bound (non-free) variable.
    pub fn push_bound(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }

    /// Appends a fresh variable `{prefix}{n}` with the smallest unused `n >= 1`.
    pub fn fresh(&mut self, prefix: &str) -> usize {
        let mut n = 1;
        loop {
            let cand = format!("{prefix}{n}");
            if self.index(&cand).is_none() {
                return self.push_bound(cand);
            }
            n += 1;
        }
    }
}

/// A formula together with its variable names and algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Query {
    pub formula: Formula,
    pub vars: VarTable,
    pub sig: Arc<AlgebraSignature>,
}

impl Query {
    pub fn new(formula: Formula, vars: VarTable, sig: &Arc<AlgebraSignature>) -> Self {
        Query { formula, vars, sig: sig.clone() }
    }

    pub fn display_term<'a>(&'a self, t: &'a Term) -> TermDisplay<'a> {
        TermDisplay { t, vars: &self.vars }
    }
}

pub struct TermDisplay<'a> {
    pub t: &'a Term,
    pub vars: &'a VarTable,
}

pub struct FormulaDisplay<'a> {
    pub f: &'a Formula,
    pub vars: &'a VarTable,
}

fn const_needs_parens(c: &AlgebraElement) -> bool {
    let s = c.to_string();
    s.starts_with('-') || s.contains(' ') || s.contains('/') || s.contains("alg(")
}

/// Operands of a left-nested product chain, leftmost first.
fn left_chain(t: &Term) -> Vec<&Term> {
    let mut out = Vec::new();
    let mut cur = t;
    while let Term::Mul(a, b) = cur {
        out.push(&**b);
        cur = a;
    }
    out.push(cur);
    out.reverse();
    out
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, vars: &VarTable) -> fmt::Result {
    match t {
        Term::Var(i) => f.write_str(vars.name(*i)),
        Term::Zero => f.write_str("0"),
        Term::One => f.write_str("1"),
        Term::Const(c) => {
            if const_needs_parens(c) {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        }
        Term::Neg(a) => {
            f.write_str("-")?;
            write_factor(f, a, vars, false)
        }
        Term::Add(a, b) => {
            write_term(f, a, vars)?;
            match &**b {
                Term::Neg(inner) => {
                    f.write_str(" - ")?;
                    write_factor(f, inner, vars, false)
                }
                other => {
                    f.write_str(" + ")?;
                    match other {
                        Term::Add(..) => {
                            f.write_str("(")?;
                            write_term(f, other, vars)?;
                            f.write_str(")")
                        }
                        _ => write_term(f, other, vars),
                    }
                }
            }
        }
        Term::Mul(..) => {
            let chain = left_chain(t);
            let mut k = 0;
            while k < chain.len() {
                if k > 0 {
                    f.write_str("*")?;
                }
                let mut n = 1;
                if let Term::Var(i) = chain[k] {
                    while k + n < chain.len() && chain[k + n] == chain[k] {
                        n += 1;
                    }
                    if n > 1 {
                        write!(f, "{}^{}", vars.name(*i), n)?;
                        k += n;
                        continue;
                    }
                }
                write_factor(f, chain[k], vars, k > 0)?;
                k += 1;
            }
            Ok(())
        }
    }
}

/// Writes a product operand; right operands that are products are parenthesised.
fn write_factor(f: &mut fmt::Formatter<'_>, t: &Term, vars: &VarTable, right: bool) -> fmt::Result {
    let wrap = match t {
        Term::Add(..) | Term::Neg(..) => true,
        Term::Mul(..) => right,
        _ => false,
    };
    if wrap {
        f.write_str("(")?;
        write_term(f, t, vars)?;
        f.write_str(")")
    } else {
        write_term(f, t, vars)
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, x: &Formula, vars: &VarTable, prec: u8) -> fmt::Result {
    // prec: 0 = or-level, 1 = and-level, 2 = unary
    match x {
        Formula::Eq(a, b) => {
            write_term(f, a, vars)?;
            f.write_str(" = ")?;
            write_term(f, b, vars)
        }
        Formula::Or(a, b) => {
            if prec > 0 {
                f.write_str("(")?;
            }
            write_formula(f, a, vars, 0)?;
            f.write_str(" or ")?;
            write_formula(f, b, vars, 1)?;
            if prec > 0 {
                f.write_str(")")?;
            }
            Ok(())
        }
        Formula::And(a, b) => {
            if prec > 1 {
                f.write_str("(")?;
            }
            write_formula(f, a, vars, 1)?;
            f.write_str(" and ")?;
            write_formula(f, b, vars, 2)?;
            if prec > 1 {
                f.write_str(")")?;
            }
            Ok(())
        }
        Formula::Not(a) => {
            f.write_str("not ")?;
            write_formula(f, a, vars, 2)
        }
        Formula::Exists(v, a) | Formula::Forall(v, a) => {
            let kw = if matches!(x, Formula::Exists(..)) { "exists" } else { "forall" };
            write!(f, "{kw} {} ", vars.name(*v))?;
            match &**a {
                Formula::Exists(..) | Formula::Forall(..) | Formula::Not(..) => write_formula(f, a, vars, 2),
                _ => {
                    f.write_str("(")?;
                    write_formula(f, a, vars, 0)?;
                    f.write_str(")")
                }
            }
        }
    }
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self.t, self.vars)
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self.f, self.vars, 0)
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, &self.formula, &self.vars, 0)
    }
}
