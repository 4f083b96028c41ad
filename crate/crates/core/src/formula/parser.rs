//! Text syntax for terms and formulas.
//!
//! ```text
//! formula := disj
//! disj    := conj ("or" conj)*
//! conj    := unary ("and" unary)*
//! unary   := "not" unary | ("exists"|"forall") ident unary | "(" formula ")" | atom
//! atom    := term (("=" | "!=") term)+          chained comparisons are conjunctions
//! term    := product (("+"|"-") product)*
//! product := factor ("*"? factor)*             juxtaposition only after a number
//! factor  := "-" factor | primary ("^" INT)?
//! primary := INT ("/" INT)? | ident | alg(...) | "(" term ")"
//! ```
//!
//! Products associate to the left; parentheses are kept. A power of a variable
//! or constant, `x^n`, contributes `n` factors to the surrounding left chain.
//! Basis names of the algebra (`i, j, k` or `e1..e7`) denote constants.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ast::{Formula, Query, Term, VarTable};
use crate::algebra::{AlgebraElement, AlgebraSignature};
use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Alg(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eq,
    Neq,
    End,
}

const KEYWORDS: [&str; 5] = ["exists", "forall", "and", "or", "not"];

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '=' => Tok::Eq,
            '!' if b.get(i + 1) == Some(&b'=') => {
                i += 1;
                Tok::Neq
            }
            d if d.is_ascii_digit() => {
                while i + 1 < b.len() && b[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(text[start..=i].parse().unwrap())
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i + 1 < b.len() && (b[i + 1].is_ascii_alphanumeric() || b[i + 1] == b'_' || b[i + 1] == b'\'') {
                    i += 1;
                }
                let word = &text[start..=i];
                if word == "alg" && b.get(i + 1) == Some(&b'(') {
                    let mut depth = 0;
                    let mut j = i + 1;
                    loop {
                        match b.get(j) {
                            Some(b'(') => depth += 1,
                            Some(b')') => {
                                depth -= 1;
                                if depth == 0 {
                                    break;
                                }
                            }
                            Some(_) => {}
                            None => return Err(Error::Syntax { pos: start, msg: "unterminated alg(...)".into() }),
                        }
                        j += 1;
                    }
                    i = j;
                    Tok::Alg(text[start..=j].to_string())
                } else {
                    Tok::Ident(word.to_string())
                }
            }
            other => return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{other}`") }),
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    sig: &'a Arc<AlgebraSignature>,
    names: Vec<String>,
    bound: Vec<usize>,
}

/// A product operand before it is attached to the chain.
enum Factor {
    /// `base^n` of a variable or constant: spliced into the left chain.
    Power(Term, u32),
    Unit(Term),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.at(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn intern(&mut self, name: &str) -> usize {
        match self.names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                self.names.push(name.to_string());
                self.names.len() - 1
            }
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut l = self.conj()?;
        while self.is_kw("or") {
            self.bump();
            let r = self.conj()?;
            l = Formula::or(l, r);
        }
        Ok(l)
    }

    fn conj(&mut self) -> Result<Formula> {
        let mut l = self.unary()?;
        while self.is_kw("and") {
            self.bump();
            let r = self.unary()?;
            l = Formula::and(l, r);
        }
        Ok(l)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.is_kw("not") {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        if self.is_kw("exists") || self.is_kw("forall") {
            let ex = self.is_kw("exists");
            self.bump();
            let name = match self.bump() {
                Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) && self.sig.basis_index(&s).is_none() => s,
                _ => return self.err("expected a variable after quantifier"),
            };
            let v = self.intern(&name);
            if !self.bound.contains(&v) {
                self.bound.push(v);
            }
            let body = self.unary()?;
            return Ok(if ex { Formula::exists(v, body) } else { Formula::forall(v, body) });
        }
        if *self.peek() == Tok::LParen {
            let save = (self.pos, self.names.len(), self.bound.len());
            self.bump();
            if let Ok(f) = self.formula() {
                if *self.peek() == Tok::RParen {
                    self.bump();
                    let continues_term = matches!(
                        self.peek(),
                        Tok::Plus | Tok::Minus | Tok::Star | Tok::Caret | Tok::Eq | Tok::Neq | Tok::LParen | Tok::Ident(_)
                    ) && !self.is_kw("and")
                        && !self.is_kw("or");
                    if !continues_term {
                        return Ok(f);
                    }
                }
            }
            self.pos = save.0;
            self.names.truncate(save.1);
            self.bound.truncate(save.2);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let mut terms = vec![self.term()?];
        let mut ops = Vec::new();
        while matches!(self.peek(), Tok::Eq | Tok::Neq) {
            ops.push(self.bump() == Tok::Eq);
            terms.push(self.term()?);
        }
        if ops.is_empty() {
            return self.err("expected `=`");
        }
        let parts: Vec<Formula> = ops
            .iter()
            .enumerate()
            .map(|(k, &is_eq)| {
                let e = Formula::eq(terms[k].clone(), terms[k + 1].clone());
                if is_eq {
                    e
                } else {
                    Formula::not(e)
                }
            })
            .collect();
        Ok(Formula::conj(parts).unwrap())
    }

    fn term(&mut self) -> Result<Term> {
        let mut l = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let r = self.product()?;
                    l = Term::add(l, r);
                }
                Tok::Minus => {
                    self.bump();
                    let r = self.product()?;
                    l = Term::sub(l, r);
                }
                _ => return Ok(l),
            }
        }
    }

    fn product(&mut self) -> Result<Term> {
        let (first, mut last_numeric) = self.factor()?;
        let mut acc = match first {
            Factor::Power(b, n) => chain(None, &b, n),
            Factor::Unit(t) => t,
        };
        loop {
            let implicit = last_numeric
                && (matches!(self.peek(), Tok::LParen | Tok::Alg(_))
                    || matches!(self.peek(), Tok::Ident(s) if !KEYWORDS.contains(&s.as_str())));
            if *self.peek() == Tok::Star {
                self.bump();
            } else if !implicit {
                return Ok(acc);
            }
            let (f, numeric) = self.factor()?;
            last_numeric = numeric;
            acc = match f {
                Factor::Power(b, n) => chain(Some(acc), &b, n),
                Factor::Unit(t) => Term::mul(acc, t),
            };
        }
    }

    /// Returns the factor and whether it was a bare numeric literal.
    fn factor(&mut self) -> Result<(Factor, bool)> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let (f, _) = self.factor()?;
            let t = match f {
                Factor::Power(b, n) => chain(None, &b, n),
                Factor::Unit(t) => t,
            };
            return Ok((Factor::Unit(Term::neg(t)), false));
        }
        let (base, atomic, numeric) = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let n = match self.bump() {
                Tok::Int(n) => u32::try_from(n).map_err(|_| Error::Syntax { pos: self.at(), msg: "exponent too large".into() })?,
                _ => return self.err("expected an integer exponent"),
            };
            if n == 0 {
                return Ok((Factor::Unit(Term::One), false));
            }
            if atomic {
                return Ok((Factor::Power(base, n), false));
            }
            return Ok((Factor::Unit(chain(None, &base, n)), false));
        }
        Ok((Factor::Unit(base), numeric))
    }

    /// Returns `(term, is_atomic, is_numeric_literal)`.
    fn primary(&mut self) -> Result<(Term, bool, bool)> {
        let pos = self.at();
        match self.bump() {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let d = match self.bump() {
                        Tok::Int(d) => d,
                        _ => return self.err("expected an integer denominator"),
                    };
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    let q = Rational::new(n, d);
                    return Ok((self.real_const(q), true, true));
                }
                Ok((self.real_const(Rational::from_integer(n)), true, true))
            }
            Tok::Alg(s) => {
                let v: Scalar = s.parse()?;
                Ok((Term::Const(AlgebraElement::real(self.sig, v)), true, true))
            }
            Tok::Ident(s) => {
                if KEYWORDS.contains(&s.as_str()) {
                    return Err(Error::Syntax { pos, msg: format!("unexpected keyword `{s}`") });
                }
                if let Some(idx) = self.sig.basis_index(&s) {
                    return Ok((Term::Const(AlgebraElement::basis(self.sig, idx)), true, false));
                }
                Ok((Term::Var(self.intern(&s)), true, false))
            }
            Tok::LParen => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok((t, false, false))
            }
            _ => Err(Error::Syntax { pos, msg: "expected a term".into() }),
        }
    }

    fn real_const(&self, q: Rational) -> Term {
        if q.is_zero() {
            Term::Zero
        } else if q.is_one() {
            Term::One
        } else {
            Term::Const(AlgebraElement::real(self.sig, Scalar::from_rational(q)))
        }
    }
}

/// Appends `n` copies of `base` to a left-nested product chain.
fn chain(acc: Option<Term>, base: &Term, n: u32) -> Term {
    let mut acc = acc;
    for _ in 0..n {
        acc = Some(match acc {
            None => base.clone(),
            Some(a) => Term::mul(a, base.clone()),
        });
    }
    acc.unwrap()
}

/// Natural order: `q2 < q10`.
fn natural_key(s: &str) -> (String, BigInt, String) {
    let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let num = if split < s.len() { s[split..].parse().unwrap() } else { BigInt::from(-1) };
    (s[..split].to_string(), num, s.to_string())
}

fn remap_term(t: &Term, m: &[usize]) -> Term {
    match t {
        Term::Var(i) => Term::Var(m[*i]),
        Term::Neg(a) => Term::neg(remap_term(a, m)),
        Term::Add(a, b) => Term::add(remap_term(a, m), remap_term(b, m)),
        Term::Mul(a, b) => Term::mul(remap_term(a, m), remap_term(b, m)),
        other => other.clone(),
    }
}

pub(crate) fn remap_formula(f: &Formula, m: &[usize]) -> Formula {
    match f {
        Formula::Eq(a, b) => Formula::eq(remap_term(a, m), remap_term(b, m)),
        Formula::And(a, b) => Formula::and(remap_formula(a, m), remap_formula(b, m)),
        Formula::Or(a, b) => Formula::or(remap_formula(a, m), remap_formula(b, m)),
        Formula::Not(a) => Formula::not(remap_formula(a, m)),
        Formula::Exists(v, a) => Formula::exists(m[*v], remap_formula(a, m)),
        Formula::Forall(v, a) => Formula::forall(m[*v], remap_formula(a, m)),
    }
}

/// Orders variables: free ones first (natural order), then bound ones by first binding.
fn finish(names: Vec<String>, bound: &[usize], free_hint: Option<&[&str]>) -> Result<(Vec<usize>, VarTable)> {
    let mut free: Vec<usize> = (0..names.len()).filter(|i| !bound.contains(i)).collect();
    match free_hint {
        Some(hint) => {
            for &i in &free {
                if !hint.contains(&names[i].as_str()) {
                    return Err(Error::UnknownIdentifier(names[i].clone()));
                }
            }
            free = hint.iter().map(|h| names.iter().position(|n| n == h)).collect::<Option<Vec<_>>>().unwrap_or_default();
        }
        None => free.sort_by_key(|&i| natural_key(&names[i])),
    }
    let mut order = free.clone();
    order.extend_from_slice(bound);
    let mut m = vec![0; names.len()];
    for (new, &old) in order.iter().enumerate() {
        m[old] = new;
    }
    let mut table = VarTable::new(free.iter().map(|&i| names[i].clone()).collect());
    for &b in bound {
        table.push_bound(names[b].clone());
    }
    Ok((m, table))
}

fn parser<'a>(sig: &'a Arc<AlgebraSignature>, text: &str) -> Result<Parser<'a>> {
    Ok(Parser { toks: lex(text)?, pos: 0, sig, names: Vec::new(), bound: Vec::new() })
}

/// Parses a formula; free variables are numbered in natural name order.
pub fn parse_query(sig: &Arc<AlgebraSignature>, text: &str) -> Result<Query> {
    parse_query_with(sig, text, None)
}

/// Like [`parse_query`], with the free variables fixed to `free` in that order
/// (names not occurring in the text are still declared).
pub fn parse_query_with(sig: &Arc<AlgebraSignature>, text: &str, free: Option<&[&str]>) -> Result<Query> {
    let mut p = parser(sig, text)?;
    if let Some(names) = free {
        for n in names {
            p.intern(n);
        }
    }
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    let (m, vars) = finish(p.names, &p.bound, free)?;
    let formula = remap_formula(&f, &m);
    let nfree = vars.nfree();
    if let Some(&v) = formula.free_vars().iter().find(|&&v| v >= nfree) {
        return Err(Error::Invalid(format!("variable `{}` occurs both free and bound", vars.name(v))));
    }
    Ok(Query::new(formula, vars, sig))
}

/// Parses a term; all of its variables are free.
pub fn parse_term(sig: &Arc<AlgebraSignature>, text: &str) -> Result<(Term, VarTable)> {
    let mut p = parser(sig, text)?;
    let t = p.term()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    let (m, vars) = finish(p.names, &[], None)?;
    Ok((remap_term(&t, &m), vars))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Arc<AlgebraSignature> {
        AlgebraSignature::quaternion()
    }

    #[test]
    fn simple_atom() {
        let q = parse_query(&h(), "q2*q1 = 0").unwrap();
        assert_eq!(q.vars.names(), &["q1".to_string(), "q2".to_string()]);
        assert_eq!(q.formula, Formula::eq(Term::mul(Term::Var(1), Term::Var(0)), Term::Zero));
    }

    #[test]
    fn existential() {
        let q = parse_query(&h(), "exists t (t*t = q1)").unwrap();
        assert_eq!(q.vars.names(), &["q1".to_string(), "t".to_string()]);
        assert_eq!(q.formula, Formula::exists(1, Formula::eq(Term::mul(Term::Var(1), Term::Var(1)), Term::Var(0))));
    }

    #[test]
    fn center_formula_parses() {
        let text = "forall a forall b ((q*a)*b = q*(a*b) = (b*q)*a) and exists c ((forall a forall b ((c*a)*b = c*(a*b) = (b*c)*a)) and c^2 = q)";
        let q = parse_query(&h(), text).unwrap();
        assert_eq!(q.vars.nfree(), 1);
        assert_eq!(q.vars.names(), &["q", "a", "b", "c"].map(String::from));
        assert_eq!(q.to_string(), "forall a forall b (q*a*b = q*(a*b) and q*(a*b) = b*q*a) and exists c (forall a forall b (c*a*b = c*(a*b) and c*(a*b) = b*c*a) and c^2 = q)");
    }

    #[test]
    fn parenthesised_terms_backtrack() {
        let q = parse_query(&h(), "(x + 1)*y = 0").unwrap();
        assert_eq!(q.vars.len(), 2);
        let q2 = parse_query(&h(), "(x = 1) or not (x = 0)").unwrap();
        assert!(matches!(q2.formula, Formula::Or(..)));
    }

    #[test]
    fn powers_splice_into_the_chain() {
        let (t, _) = parse_term(&h(), "x*q^2").unwrap();
        let expect = Term::mul(Term::mul(Term::Var(1), Term::Var(0)), Term::Var(0));
        assert_eq!(t, expect);
        let (t, _) = parse_term(&h(), "2i").unwrap();
        assert!(matches!(t, Term::Mul(..)));
    }

    #[test]
    fn natural_variable_order() {
        let q = parse_query(&h(), "q10 + q2 = q1").unwrap();
        assert_eq!(q.vars.names(), &["q1", "q2", "q10"].map(String::from));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_query(&h(), "q1 * = 0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_query(&h(), "q1 + 1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_query(&h(), "x = 0 and exists x (x = 1)"), Err(Error::Invalid(_))));
        assert!(matches!(parse_query(&h(), "q = 1/0"), Err(Error::DivisionByZero)));
        assert!(matches!(parse_query_with(&h(), "y = 0", Some(&["x"])), Err(Error::UnknownIdentifier(_))));
    }
}
