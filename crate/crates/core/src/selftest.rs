//! Quick invariant suites over seeded random data, for `hyperalg selftest`.

use std::sync::Arc;
use std::time::Instant;

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{coord_extract, AlgebraElement, AlgebraSignature};
use crate::formula::{eval_formula, is_ordered_query, to_ordered};
use crate::geometry::{sphere_points, vanishing_space};
use crate::lower::{eval_real, lower_formula, realize, RealPoly, RealizeMode};
use crate::random;
use crate::roots::{companion_root_count, solve};
use crate::scalars::{rat, Scalar};
use crate::Result;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Timing is left out so that reports are reproducible byte for byte.
    pub fn to_json(&self) -> Value {
        json!({"suite": self.name, "cases": self.cases, "passed": self.passed(), "failure": self.failure})
    }
}

type Check = fn(&mut ChaCha8Rng, usize) -> Result<std::result::Result<usize, String>>;

const SUITES: [(&str, Check); 9] = [
    ("tables", tables),
    ("alternativity", alternativity),
    ("extraction", extraction),
    ("roots", roots),
    ("rewrite", rewrite),
    ("lowering", lowering),
    ("vanishing", vanishing),
    ("realize", realization),
    ("scalars", scalars),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs the named suites (all when `only` is empty); `scale` multiplies the case counts.
pub fn run(seed: u64, scale: usize, only: &[String]) -> Vec<SuiteReport> {
    let mut out = Vec::new();
    for (k, (name, check)) in SUITES.iter().enumerate() {
        if !only.is_empty() && !only.iter().any(|o| o == name) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let start = Instant::now();
        let (cases, failure) = match check(&mut rng, scale.max(1)) {
            Ok(Ok(n)) => (n, None),
            Ok(Err(msg)) => (0, Some(msg)),
            Err(e) => (0, Some(format!("error: {e}"))),
        };
        out.push(SuiteReport { name, cases, failure, millis: start.elapsed().as_millis() });
    }
    out
}

fn h() -> Arc<AlgebraSignature> {
    AlgebraSignature::quaternion()
}

fn o() -> Arc<AlgebraSignature> {
    AlgebraSignature::octonion()
}

fn tables(_: &mut ChaCha8Rng, _: usize) -> Result<std::result::Result<usize, String>> {
    let mut cases = 0;
    for (sig, triples) in [(h(), vec![[1, 2, 3]]), (o(), vec![[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]])] {
        let e = |i: usize| AlgebraElement::basis(&sig, i);
        let mut expect = vec![vec![None; sig.dim()]; sig.dim()];
        for i in 0..sig.dim() {
            expect[0][i] = Some(e(i));
            expect[i][0] = Some(e(i));
            if i > 0 {
                expect[i][i] = Some(e(0).neg());
            }
        }
        for t in &triples {
            for r in 0..3 {
                let (a, b, c) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
                expect[a][b] = Some(e(c));
                expect[b][a] = Some(e(c).neg());
            }
        }
        for i in 0..sig.dim() {
            for j in 0..sig.dim() {
                cases += 1;
                let got = e(i).mul(&e(j))?;
                if Some(&got) != expect[i][j].as_ref() {
                    return Ok(Err(format!("{} e{i}·e{j} = {got}", sig.name())));
                }
            }
        }
    }
    Ok(Ok(cases))
}

fn alternativity(rng: &mut ChaCha8Rng, scale: usize) -> Result<std::result::Result<usize, String>> {
    let sig = o();
    let n = 200 * scale;
    for _ in 0..n {
        let a = random::element(rng, &sig, 9, 4);
        let b = random::element(rng, &sig, 9, 4);
        let ab = a.mul(&b)?;
        if a.mul(&ab)? != a.mul(&a)?.mul(&b)? || ab.mul(&b)? != a.mul(&b.mul(&b)?)? {
            return Ok(Err(format!("alternative law fails for {a}, {b}")));
        }
        if ab.norm()? != a.norm()?.mul(&b.norm()?) {
            return Ok(Err(format!("norm is not multiplicative for {a}, {b}")));
        }
    }
    let e = |i| AlgebraElement::basis(&sig, i);
    if e(1).mul(&e(2))?.mul(&e(4))? != e(1).mul(&e(2).mul(&e(4))?)?.neg() {
        return Ok(Err("associator witness".into()));
    }
    Ok(Ok(n + 1))
}

fn extraction(rng: &mut ChaCha8Rng, scale: usize) -> Result<std::result::Result<usize, String>> {
    let n = 100 * scale;
    for k in 0..n {
        let sig = if k % 2 == 0 { h() } else { o() };
        let a = random::element(rng, &sig, 20, 7);
        if coord_extract(&a)? != a.coords() {
            return Ok(Err(format!("extraction differs at {a}")));
        }
    }
    Ok(Ok(n))
}

fn roots(rng: &mut ChaCha8Rng, scale: usize) -> Result<std::result::Result<usize, String>> {
    let n = 10 * scale;
    for k in 0..n {
        let p = random::univar_poly(rng, &h(), 1 + k % 3, 3);
        let rs = solve(&p)?;
        if rs.descriptors.is_empty() {
            return Ok(Err(format!("no roots for {p}")));
        }
        // exact evaluation at roots of degree-6 fields is slow, so cubics only get the count check
        for q in rs.points().filter(|_| k % 3 < 2) {
            if !p.eval(q)?.is_zero() {
                return Ok(Err(format!("{q} is not a root of {p}")));
            }
        }
        let (found, expected) = companion_root_count(&rs)?;
        if found != expected {
            return Ok(Err(format!("{p}: {found} roots against {expected} companion roots")));
        }
    }
    Ok(Ok(n))
}

fn rewrite(rng: &mut ChaCha8Rng, scale: usize) -> Result<std::result::Result<usize, String>> {
    let sig = h();
    let n = 50 * scale;
    for _ in 0..n {
        let q = random::formula(rng, &sig, 2, 2);
        let (ord, _) = to_ordered(&q)?;
        if !is_ordered_query(&ord)? {
            return Ok(Err(format!("output not ordered: {ord}")));
        }
        for _ in 0..5 {
            let pt = vec![random::small_element(rng, &sig), random::small_element(rng, &sig)];
            if eval_formula(&q, &pt)? != eval_formula(&ord, &pt)? {
                return Ok(Err(format!("{q} and {ord} differ at ({}, {})", pt[0], pt[1])));
            }
        }
    }
    Ok(Ok(n))
}

fn lowering(rng: &mut ChaCha8Rng, scale: usize) -> Result<std::result::Result<usize, String>> {
    let n = 50 * scale;
    for k in 0..n {
        let sig = if k % 5 == 4 { o() } else { h() };
        let q = random::formula(rng, &sig, 2, 2);
        let lq = lower_formula(&q);
        let pt = vec![random::small_element(rng, &sig), random::small_element(rng, &sig)];
        if eval_formula(&q, &pt)? != eval_real(&lq, &lq.lower_point(&pt)?)? {
            return Ok(Err(format!("lowering changes the truth of {q}")));
        }
    }
    Ok(Ok(n))
}

fn vanishing(_: &mut ChaCha8Rng, _: usize) -> Result<std::result::Result<usize, String>> {
    let sig = h();
    let pts = vec![vec![AlgebraElement::basis(&sig, 1)], vec![AlgebraElement::basis(&sig, 1).neg()]];
    let sphere = sphere_points(&sig, &Scalar::zero(), &Scalar::one(), 25);
    let mut cases = 0;
    for d in 2..=4 {
        for p in vanishing_space(&sig, 1, &pts, d)? {
            for u in &sphere {
                cases += 1;
                if !p.eval(std::slice::from_ref(u))?.is_zero() {
                    return Ok(Err(format!("{p} vanishes at ±i but not at {u}")));
                }
            }
        }
    }
    Ok(Ok(cases))
}

fn realization(_: &mut ChaCha8Rng, _: usize) -> Result<std::result::Result<usize, String>> {
    let x = RealPoly::var(2, 0);
    let y = RealPoly::var(2, 1);
    let circle = x.mul(&x).add(&y.mul(&y)).sub(&RealPoly::constant(2, Scalar::one()));
    let pts = [(rat(1, 1), rat(0, 1)), (rat(0, 1), rat(1, 1)), (rat(3, 5), rat(4, 5)), (rat(-4, 5), rat(3, 5))];
    for mode in [RealizeMode::Conjunction, RealizeMode::SumOfSquares] {
        let r = realize(&h(), &[circle.clone()], mode)?;
        for (a, b) in &pts {
            let v = [Scalar::from_rational(a.clone()), Scalar::from_rational(b.clone())];
            let image = r.forward(&v)?;
            if !r.contains(&image)? || r.project(&image)? != v {
                return Ok(Err(format!("round trip fails at ({a}, {b})")));
            }
        }
    }
    Ok(Ok(2 * pts.len()))
}

fn scalars(rng: &mut ChaCha8Rng, scale: usize) -> Result<std::result::Result<usize, String>> {
    let two = Scalar::from_i64(2);
    if two.sqrt()?.mul(&two.sqrt()?) != two {
        return Ok(Err("√2·√2 ≠ 2".into()));
    }
    let n = 30 * scale;
    for _ in 0..n {
        let s = Scalar::from_rational(random::rational(rng, 50, 9).abs());
        if s.sqrt()?.pow(2) != s {
            return Ok(Err(format!("sqrt({s})² ≠ {s}")));
        }
    }
    Ok(Ok(n + 1))
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_suites_pass() {
        for r in super::run(7, 1, &[]) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failure);
        }
    }
}
