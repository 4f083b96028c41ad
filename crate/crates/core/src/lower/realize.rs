//! Realizing a real algebraic set as a basic algebraic set over the quaternions.
//!
//! Real variable `x_m` is coordinate `m mod 4` of `q_{⌊m/4⌋+1}`, read off by the
//! ring-theoretic extraction terms. Substituting those terms into the real
//! equations gives non-ordered equations in `q_1 … q_s`; the rewriter turns
//! them into ordered ones plus definitions of fresh variables. The
//! definitions are the graph of the forward map, and the ordered equations
//! are the target system.

use std::sync::Arc;

use serde_json::{json, Value};

use super::poly::RealPoly;
use crate::algebra::{AlgebraElement, AlgebraSignature, SigKind};
use crate::error::{Error, Result};
use crate::formula::{expand_atom, monos_to_ordered, to_ordered, Formula, MonoTree, Query, Term, VarTable};
use crate::opoly::OrderedPoly;
use crate::scalars::{rat, Scalar};

/// How the real system is combined before substitution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizeMode {
    /// One equation: the sum of the squares of all generators and padded coordinates.
    SumOfSquares,
    /// One equation per generator and per padded coordinate.
    Conjunction,
}

/// The realized basic algebraic set and its forward map.
#[derive(Clone, Debug)]
pub struct Realization {
    pub sig: Arc<AlgebraSignature>,
    pub mode: RealizeMode,
    /// Real dimension `n` of the source.
    pub n: usize,
    /// Number `s` of retained algebra coordinates.
    pub proj_arity: usize,
    /// Names of all `m` algebra variables: `q1 … qs` then the fresh ones.
    pub names: Vec<String>,
    /// Ordered polynomials in `m` variables whose common zero set is the realization.
    pub target: Vec<OrderedPoly>,
    /// `(v, F)`: fresh variable `v` equals `F` of the others; listed so each `F` only uses earlier entries.
    pub forward_map: Vec<(usize, OrderedPoly)>,
    /// The rewritten query the system was read from.
    pub query: Query,
}

/// The term `x·1` for coordinate `c` of the algebra variable `v`, using only
/// ring operations and rational scaling.
pub fn coordinate_term(sig: &Arc<AlgebraSignature>, v: &Term, c: usize) -> Result<Term> {
    let (denom, self_weight, own, other) = match (sig.kind(), c) {
        (SigKind::Quaternion, 0) => (4, 1, -1, -1),
        (SigKind::Quaternion, _) => (4, 1, -1, 1),
        (SigKind::Octonion, 0) => (12, 5, -1, -1),
        (SigKind::Octonion, _) => (12, 1, -5, 1),
        (SigKind::Generic, _) => return Err(Error::NoInvolution(sig.name().to_string())),
    };
    let scaled = |w: i64, t: Term| -> Term {
        match w {
            1 => t,
            -1 => Term::neg(t),
            _ => Term::mul(Term::Const(AlgebraElement::real(sig, Scalar::from_i64(w))), t),
        }
    };
    let mut sum = scaled(self_weight, v.clone());
    for h in 1..sig.dim() {
        let e = Term::Const(AlgebraElement::basis(sig, h));
        let sandwich = Term::mul(Term::mul(e.clone(), v.clone()), e);
        let w = if h == c { own } else { other };
        sum = Term::add(sum, scaled(w, sandwich));
    }
    // left division by denom·e_c
    let unit = if c == 0 {
        AlgebraElement::real(sig, Scalar::from_rational(rat(1, denom)))
    } else {
        AlgebraElement::basis(sig, c).scale(&Scalar::from_rational(rat(-1, denom)))
    };
    Ok(Term::mul(Term::Const(unit), sum))
}

fn poly_term(sig: &Arc<AlgebraSignature>, p: &RealPoly, coords: &[Term]) -> Term {
    let mut acc: Option<Term> = None;
    for (e, c) in p.terms() {
        let mut t = Term::Const(AlgebraElement::real(sig, c.clone()));
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                t = Term::mul(t, coords[i].clone());
            }
        }
        acc = Some(match acc {
            None => t,
            Some(a) => Term::add(a, t),
        });
    }
    acc.unwrap_or(Term::Zero)
}

/// Realizes the common zero set of `system` (polynomials in `n` real variables) over `sig`.
pub fn realize(sig: &Arc<AlgebraSignature>, system: &[RealPoly], mode: RealizeMode) -> Result<Realization> {
    let first = system.first().ok_or_else(|| Error::Invalid("empty system".into()))?;
    let n = first.nvars();
    if system.iter().any(|p| p.nvars() != n) {
        return Err(Error::Invalid("system polynomials disagree on the number of variables".into()));
    }
    let k = sig.dim();
    let s = n.div_ceil(k).max(1);
    let vars = VarTable::new((1..=s).map(|i| format!("q{i}")).collect());
    let coords: Vec<Term> = (0..s * k).map(|m| coordinate_term(sig, &Term::Var(m / k), m % k)).collect::<Result<_>>()?;
    // padded coordinates are pinned to zero
    let mut padded = RealPoly::zero(s * k);
    let widen = |p: &RealPoly| {
        let mut out = RealPoly::zero(s * k);
        for (e, c) in p.terms() {
            let mut e = e.to_vec();
            e.resize(s * k, 0);
            out.add_term(e, c.clone());
        }
        out
    };
    let mut eqs: Vec<RealPoly> = system.iter().map(widen).collect();
    for m in n..s * k {
        let x = RealPoly::var(s * k, m);
        match mode {
            RealizeMode::SumOfSquares => padded = padded.add(&x.mul(&x)),
            RealizeMode::Conjunction => eqs.push(x),
        }
    }
    if mode == RealizeMode::SumOfSquares {
        let sos = eqs.iter().fold(padded, |acc, p| acc.add(&p.mul(p)));
        eqs = vec![sos];
    }
    let atoms: Vec<Formula> = eqs.iter().map(|p| Formula::eq(poly_term(sig, p, &coords), Term::Zero)).collect();
    let query = Query::new(Formula::conj(atoms).expect("at least one equation"), vars, sig);
    let (ordered, _) = to_ordered(&query)?;
    read_system(sig, mode, n, s, ordered)
}

/// Splits the rewritten query into target equations and fresh-variable definitions.
fn read_system(sig: &Arc<AlgebraSignature>, mode: RealizeMode, n: usize, s: usize, query: Query) -> Result<Realization> {
    let mut fresh = Vec::new();
    let mut atoms = Vec::new();
    fn walk<'a>(f: &'a Formula, fresh: &mut Vec<usize>, atoms: &mut Vec<(&'a Term, &'a Term)>) -> Result<()> {
        match f {
            Formula::Eq(l, r) => atoms.push((l, r)),
            Formula::And(a, b) => {
                walk(a, fresh, atoms)?;
                walk(b, fresh, atoms)?;
            }
            Formula::Exists(v, a) => {
                fresh.push(*v);
                walk(a, fresh, atoms)?;
            }
            _ => return Err(Error::Internal("rewritten system is not an existential conjunction".into())),
        }
        Ok(())
    }
    walk(&query.formula, &mut fresh, &mut atoms)?;
    let mut target = Vec::new();
    let mut defs = Vec::new();
    for (l, r) in atoms {
        let monos = expand_atom(l, r)?;
        let p = monos_to_ordered(sig, &monos, &query.vars)?;
        // a definition is `v − F = 0` with `v` fresh and absent from F; an atom may qualify for several
        for &v in &fresh {
            let own = monos.iter().filter(|m| m.tree == Some(MonoTree::Var(v)) && m.coef == Scalar::one()).count() == 1;
            let elsewhere = monos.iter().any(|m| m.tree != Some(MonoTree::Var(v)) && m.tree.as_ref().is_some_and(|t| t.vars().contains(&v)));
            if own && !elsewhere {
                let mut rest = OrderedPoly::with_names(sig, query.vars.names().to_vec());
                let mut unit = vec![0u32; query.vars.len()];
                unit[v] = 1;
                rest.add_term(crate::opoly::Monomial(unit), AlgebraElement::one(sig))?;
                defs.push((v, rest.sub(&p)?));
            }
        }
        target.push(p);
    }
    if fresh.iter().any(|v| !defs.iter().any(|(w, _)| w == v)) {
        return Err(Error::Internal("a fresh variable has no definition".into()));
    }
    let forward_map = dependency_order(defs, s)?;
    Ok(Realization { sig: sig.clone(), mode, n, proj_arity: s, names: query.vars.names().to_vec(), target, forward_map, query })
}

/// Picks one definition per fresh variable, ordered so each only uses `q1 … qs` and earlier fresh variables.
fn dependency_order(mut defs: Vec<(usize, OrderedPoly)>, s: usize) -> Result<Vec<(usize, OrderedPoly)>> {
    let mut known: Vec<usize> = (0..s).collect();
    let mut out = Vec::new();
    while !defs.is_empty() {
        let ready = defs.iter().position(|(_, f)| f.terms().all(|(m, _)| m.exponents().iter().enumerate().all(|(i, &e)| e == 0 || known.contains(&i))));
        let Some(k) = ready else {
            return Err(Error::Internal("cyclic fresh-variable definitions".into()));
        };
        let d = defs.remove(k);
        defs.retain(|(w, _)| *w != d.0);
        known.push(d.0);
        out.push(d);
    }
    Ok(out)
}

impl Realization {
    /// The algebra point whose coordinates are `x`, padded with zeros.
    pub fn lift(&self, x: &[Scalar]) -> Result<Vec<AlgebraElement>> {
        if x.len() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, got: x.len() });
        }
        let k = self.sig.dim();
        let mut flat = x.to_vec();
        flat.resize(self.proj_arity * k, Scalar::zero());
        flat.chunks(k).map(|c| AlgebraElement::new(&self.sig, c.to_vec())).collect()
    }

    /// The graph point `(q, fresh(q))` over the lift of `x`.
    pub fn forward(&self, x: &[Scalar]) -> Result<Vec<AlgebraElement>> {
        let mut point = self.lift(x)?;
        point.resize(self.names.len(), AlgebraElement::zero(&self.sig));
        for (v, f) in &self.forward_map {
            point[*v] = f.eval(&point)?;
        }
        Ok(point)
    }

    /// The first `n` real coordinates of the retained algebra coordinates.
    pub fn project(&self, point: &[AlgebraElement]) -> Result<Vec<Scalar>> {
        if point.len() != self.names.len() {
            return Err(Error::ArityMismatch { expected: self.names.len(), got: point.len() });
        }
        Ok(point[..self.proj_arity].iter().flat_map(|p| p.coords().to_vec()).take(self.n).collect())
    }

    /// Whether every target polynomial vanishes at `point`.
    pub fn contains(&self, point: &[AlgebraElement]) -> Result<bool> {
        for p in &self.target {
            if !p.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": match self.mode { RealizeMode::SumOfSquares => "sum_of_squares", RealizeMode::Conjunction => "conjunction" },
            "real_dimension": self.n,
            "proj_arity": self.proj_arity,
            "variables": self.names,
            "target": self.target.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "forward_map": self.forward_map.iter().map(|(v, f)| json!({"var": self.names[*v], "poly": f.to_string()})).collect::<Vec<_>>(),
        })
    }
}
