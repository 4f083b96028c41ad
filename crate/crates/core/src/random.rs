//! Seeded generators for test data: rationals, algebra elements, polynomials and formulas.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::{AlgebraElement, AlgebraSignature};
use crate::formula::{Formula, Query, Term, VarTable};
use crate::opoly::UnivarPoly;
use crate::scalars::{rat, Rational, Scalar};

/// `a/b` with `|a| <= num` and `1 <= b <= den`.
pub fn rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn element(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>, num: i64, den: i64) -> AlgebraElement {
    let coords = (0..sig.dim()).map(|_| Scalar::from_rational(rational(rng, num, den))).collect();
    AlgebraElement::new(sig, coords).expect("dimension matches")
}

/// Element with integer coordinates in `-bound..=bound`.
pub fn int_element(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>, bound: i64) -> AlgebraElement {
    element(rng, sig, bound, 1)
}

/// Polynomial of degree exactly `deg` with small integer coefficients.
pub fn univar_poly(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>, deg: usize, bound: i64) -> UnivarPoly {
    let mut coeffs: Vec<AlgebraElement> = (0..deg).map(|_| int_element(rng, sig, bound)).collect();
    let lead = loop {
        let c = int_element(rng, sig, bound);
        if !c.is_zero() {
            break c;
        }
    };
    coeffs.push(lead);
    UnivarPoly::new(sig, coeffs)
}

/// Small points that make random equations true with some frequency.
pub fn small_element(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>) -> AlgebraElement {
    match rng.gen_range(0..6) {
        0 => AlgebraElement::zero(sig),
        1 => AlgebraElement::one(sig),
        2 => AlgebraElement::one(sig).neg(),
        3 => AlgebraElement::basis(sig, rng.gen_range(1..sig.dim())),
        _ => int_element(rng, sig, 2),
    }
}

fn constant(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>) -> Term {
    match rng.gen_range(0..4) {
        0 => Term::One,
        1 => Term::Const(AlgebraElement::basis(sig, rng.gen_range(1..sig.dim()))),
        _ => Term::Const(int_element(rng, sig, 2)),
    }
}

/// Random term over the first `nvars` variables, of nesting depth at most `depth`.
pub fn term(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>, nvars: usize, depth: usize) -> Term {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.7) { Term::Var(rng.gen_range(0..nvars)) } else { constant(rng, sig) };
    }
    let d = depth - 1;
    match rng.gen_range(0..5) {
        0 => Term::neg(term(rng, sig, nvars, d)),
        1 => Term::add(term(rng, sig, nvars, d), term(rng, sig, nvars, d)),
        _ => Term::mul(term(rng, sig, nvars, d), term(rng, sig, nvars, d)),
    }
}

/// Random quantifier-free formula in `nvars` free variables `q1 … qn`.
pub fn formula(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>, nvars: usize, depth: usize) -> Query {
    fn go(rng: &mut impl Rng, sig: &Arc<AlgebraSignature>, nvars: usize, depth: usize) -> Formula {
        if depth == 0 || rng.gen_bool(0.4) {
            return Formula::eq(term(rng, sig, nvars, 3), term(rng, sig, nvars, 2));
        }
        let d = depth - 1;
        match rng.gen_range(0..3) {
            0 => Formula::not(go(rng, sig, nvars, d)),
            1 => Formula::and(go(rng, sig, nvars, d), go(rng, sig, nvars, d)),
            _ => Formula::or(go(rng, sig, nvars, d), go(rng, sig, nvars, d)),
        }
    }
    let f = go(rng, sig, nvars, depth);
    Query::new(f, VarTable::new((1..=nvars).map(|i| format!("q{i}")).collect()), sig)
}

/// Integer polynomial of degree exactly `deg`, lowest degree first.
pub fn int_poly(rng: &mut impl Rng, deg: usize, bound: i64) -> Vec<i64> {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[deg] == 0 {
        c[deg] = rng.gen_range(-bound..=bound);
    }
    c
}
