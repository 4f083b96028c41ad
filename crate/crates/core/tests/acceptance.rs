//! Acceptance criteria, one line each on stdout. Every check uses an oracle
//! that does not go through the code path under test.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use hyperalg::algebra::{coord_extract, AlgebraElement, AlgebraSignature};
use hyperalg::formula::{eval_formula, is_ordered_query, parse_query, to_ordered, Formula, Query, Term, VarTable};
use hyperalg::geometry::vanishing_space;
use hyperalg::lower::{decide, eval_real, lower_formula, lower_query_term, realize, RealPoly, RealizeMode};
use hyperalg::opoly::UnivarPoly;
use hyperalg::roots::{solve, RootDescriptor};
use hyperalg::scalars::isolate::sturm_count_all;
use hyperalg::scalars::{rat, QPoly, Rational, Scalar};
use nalgebra::DMatrix;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn h() -> Arc<AlgebraSignature> {
    AlgebraSignature::quaternion()
}

fn o() -> Arc<AlgebraSignature> {
    AlgebraSignature::octonion()
}

fn el(sig: &Arc<AlgebraSignature>, s: &str) -> AlgebraElement {
    AlgebraElement::parse(sig, s).unwrap()
}

fn q_of(r: Rational) -> Scalar {
    Scalar::from_rational(r)
}

fn rand_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn rand_element(rng: &mut ChaCha8Rng, sig: &Arc<AlgebraSignature>, num: i64, den: i64) -> AlgebraElement {
    AlgebraElement::new(sig, (0..sig.dim()).map(|_| q_of(rand_rat(rng, num, den))).collect()).unwrap()
}

// ---------------------------------------------------------------- 1

fn basis_tables() -> Result<String, String> {
    // e_a e_b = e_c along each cyclic triple, e_b e_a = -e_c, e_a^2 = -1
    let table = |k: usize, triples: &[[usize; 3]]| {
        let mut t = vec![vec![(0i64, 0usize); k]; k];
        for i in 0..k {
            t[0][i] = (1, i);
            t[i][0] = (1, i);
            if i > 0 {
                t[i][i] = (-1, 0);
            }
        }
        for tr in triples {
            for r in 0..3 {
                let (a, b, c) = (tr[r], tr[(r + 1) % 3], tr[(r + 2) % 3]);
                t[a][b] = (1, c);
                t[b][a] = (-1, c);
            }
        }
        t
    };
    let cases = [
        (h(), table(4, &[[1, 2, 3]])),
        (o(), table(8, &[[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]])),
    ];
    let mut n = 0;
    for (sig, t) in &cases {
        let k = sig.dim();
        for i in 0..k {
            for j in 0..k {
                let got = AlgebraElement::basis(sig, i).mul(&AlgebraElement::basis(sig, j)).unwrap();
                let (s, c) = t[i][j];
                let mut want = vec![0i64; k];
                want[c] = s;
                if got != AlgebraElement::from_i64s(sig, &want).unwrap() {
                    return Err(format!("{} e{i}·e{j} = {got}", sig.name()));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} products"))
}

// ---------------------------------------------------------------- 2

fn alternativity() -> Result<String, String> {
    let sig = o();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let a = rand_element(&mut rng, &sig, 9, 5);
        let b = rand_element(&mut rng, &sig, 9, 5);
        let ab = a.mul(&b).unwrap();
        if a.mul(&ab).unwrap() != a.mul(&a).unwrap().mul(&b).unwrap() {
            return Err(format!("left alternative law fails at {a}, {b}"));
        }
        if ab.mul(&b).unwrap() != a.mul(&b.mul(&b).unwrap()).unwrap() {
            return Err(format!("right alternative law fails at {a}, {b}"));
        }
        if ab.norm().unwrap() != a.norm().unwrap().mul(&b.norm().unwrap()) {
            return Err(format!("norm not multiplicative at {a}, {b}"));
        }
    }
    let e = |i| AlgebraElement::basis(&sig, i);
    let left = e(1).mul(&e(2)).unwrap().mul(&e(4)).unwrap();
    let right = e(1).mul(&e(2).mul(&e(4)).unwrap()).unwrap();
    if left != right.neg() || left.is_zero() {
        return Err(format!("(e1e2)e4 = {left}, e1(e2e4) = {right}"));
    }
    Ok(format!("10000 pairs, (e1e2)e4 = {left} = -e1(e2e4)"))
}

// ---------------------------------------------------------------- 3

fn extraction() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for sig in [h(), o()] {
        for _ in 0..1000 {
            let a = rand_element(&mut rng, &sig, 50, 12);
            if coord_extract(&a).unwrap() != a.coords() {
                return Err(format!("extraction differs at {a}"));
            }
        }
    }
    Ok("1000 quaternions, 1000 octonions".into())
}

// ---------------------------------------------------------------- 4

type Qf = [f64; 4];

fn qmul(a: Qf, b: Qf) -> Qf {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qabs(a: Qf) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Relative residual |Σ q^k a_k| / Σ |q|^k |a_k|.
fn quaternion_residual(coeffs: &[Qf], q: Qf) -> f64 {
    let (mut pw, mut sum, mut scale) = ([1.0, 0.0, 0.0, 0.0], [0.0; 4], 0.0);
    for a in coeffs {
        let t = qmul(pw, *a);
        for i in 0..4 {
            sum[i] += t[i];
        }
        scale += qabs(pw) * qabs(*a);
        pw = qmul(pw, q);
    }
    qabs(sum) / scale
}

/// Roots of `Σ_{i+j=n} a_i conj(a_j)` as eigenvalues of its companion matrix.
fn companion_oracle(coeffs: &[Qf]) -> (Vec<f64>, Vec<(f64, f64)>) {
    let d = coeffs.len() - 1;
    let conj = |a: Qf| [a[0], -a[1], -a[2], -a[3]];
    let mut c = vec![0.0; 2 * d + 1];
    for (i, a) in coeffs.iter().enumerate() {
        for (j, b) in coeffs.iter().enumerate() {
            c[i + j] += qmul(*a, conj(*b))[0];
        }
    }
    let n = 2 * d;
    let m = DMatrix::from_fn(n, n, |r, k| if k == n - 1 { -c[r] / c[n] } else if r == k + 1 { 1.0 } else { 0.0 });
    let roots = m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect();
    (c, roots)
}

fn complex_residual(c: &[f64], z: (f64, f64)) -> f64 {
    let (mut re, mut im, mut scale, mut pw_re, mut pw_im) = (0.0, 0.0, 0.0, 1.0, 0.0);
    let r = (z.0 * z.0 + z.1 * z.1).sqrt();
    for (k, ck) in c.iter().enumerate() {
        re += ck * pw_re;
        im += ck * pw_im;
        scale += ck.abs() * r.powi(k as i32);
        (pw_re, pw_im) = (pw_re * z.0 - pw_im * z.1, pw_re * z.1 + pw_im * z.0);
    }
    (re * re + im * im).sqrt() / scale
}

fn fta() -> Result<String, String> {
    let sig = h();
    let rs = solve(&UnivarPoly::from_strs(&sig, &["1", "0", "1"]).unwrap()).unwrap();
    if rs.descriptors != [RootDescriptor::Sphere { x: Scalar::zero(), y: Scalar::one() }] {
        return Err(format!("q^2 + 1: {:?}", rs.descriptors));
    }
    // q^2 - q(i + j) + k
    let p = UnivarPoly::from_strs(&sig, &["k", "-i - j", "1"]).unwrap();
    let rs = solve(&p).unwrap();
    if rs.descriptors != [RootDescriptor::Isolated { point: el(&sig, "i") }] {
        return Err(format!("q^2 - q(i+j) + k: {:?}", rs.descriptors));
    }
    let j = el(&sig, "j");
    if p.eval(&j).unwrap().is_zero() || rs.contains(&j).unwrap() {
        return Err("j reported as a root".into());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut worst, mut spheres, mut points) = (0.0f64, 0, 0);
    for case in 0..200 {
        let deg = rng.gen_range(1..=5);
        let mut ints: Vec<[i64; 4]> = (0..=deg).map(|_| [0; 4].map(|_: i64| rng.gen_range(-3..=3))).collect();
        while ints[deg] == [0; 4] {
            ints[deg] = [0; 4].map(|_: i64| rng.gen_range(-3..=3));
        }
        let coeffs: Vec<AlgebraElement> = ints.iter().map(|c| AlgebraElement::from_i64s(&sig, c).unwrap()).collect();
        let p = UnivarPoly::new(&sig, coeffs);
        let rs = solve(&p).map_err(|e| format!("case {case} ({p}): {e}"))?;
        if rs.descriptors.is_empty() {
            return Err(format!("case {case} ({p}): no roots"));
        }
        let fc: Vec<Qf> = ints.iter().map(|c| c.map(|x| x as f64)).collect();
        let (c, oracle) = companion_oracle(&fc);
        // distinct oracle roots in the closed upper half plane
        let mut distinct: Vec<(f64, f64)> = Vec::new();
        for &z in &oracle {
            let res = complex_residual(&c, z);
            worst = worst.max(res);
            if res >= 1e-9 {
                return Err(format!("case {case}: oracle residual {res:e}"));
            }
            let z = (z.0, z.1.abs());
            let tol = 1e-6 * (1.0 + z.0.hypot(z.1));
            if !distinct.iter().any(|w| (w.0 - z.0).hypot(w.1 - z.1) < tol) {
                distinct.push(z);
            }
        }
        if distinct.len() != rs.descriptors.len() {
            return Err(format!("case {case} ({p}): {} root classes, oracle has {}", rs.descriptors.len(), distinct.len()));
        }
        for d in &rs.descriptors {
            let z = match d {
                RootDescriptor::Isolated { point } => {
                    let qf: Vec<f64> = point.coords().iter().map(|s| s.to_f64()).collect();
                    let qf = [qf[0], qf[1], qf[2], qf[3]];
                    let res = quaternion_residual(&fc, qf);
                    worst = worst.max(res);
                    if res >= 1e-9 {
                        return Err(format!("case {case} ({p}): residual {res:e} at {point}"));
                    }
                    points += 1;
                    (qf[0], qf[1].hypot(qf[2]).hypot(qf[3]))
                }
                RootDescriptor::Sphere { x, y } => {
                    spheres += 1;
                    (x.to_f64(), y.to_f64())
                }
            };
            let tol = 1e-6 * (1.0 + z.0.hypot(z.1));
            if !distinct.iter().any(|w| (w.0 - z.0).hypot(w.1 - z.1) < tol) {
                return Err(format!("case {case} ({p}): {d} matches no companion root"));
            }
        }
    }
    Ok(format!("200 random polynomials: {points} points, {spheres} spheres, worst residual {worst:.1e}"))
}

// ---------------------------------------------------------------- 5, 6

fn rand_term(rng: &mut ChaCha8Rng, sig: &Arc<AlgebraSignature>, nvars: usize, depth: usize) -> Term {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => Term::One,
            1 => Term::Const(AlgebraElement::basis(sig, rng.gen_range(1..sig.dim()))),
            2 => Term::Const(rand_element(rng, sig, 2, 2)),
            _ => Term::var(rng.gen_range(0..nvars)),
        };
    }
    match rng.gen_range(0..6) {
        0 => Term::neg(rand_term(rng, sig, nvars, depth - 1)),
        1 | 2 => Term::add(rand_term(rng, sig, nvars, depth - 1), rand_term(rng, sig, nvars, depth - 1)),
        _ => Term::mul(rand_term(rng, sig, nvars, depth - 1), rand_term(rng, sig, nvars, depth - 1)),
    }
}

fn rand_formula(rng: &mut ChaCha8Rng, sig: &Arc<AlgebraSignature>, nvars: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.35) {
        return Formula::eq(rand_term(rng, sig, nvars, 3), rand_term(rng, sig, nvars, 2));
    }
    match rng.gen_range(0..3) {
        0 => Formula::not(rand_formula(rng, sig, nvars, depth - 1)),
        1 => Formula::and(rand_formula(rng, sig, nvars, depth - 1), rand_formula(rng, sig, nvars, depth - 1)),
        _ => Formula::or(rand_formula(rng, sig, nvars, depth - 1), rand_formula(rng, sig, nvars, depth - 1)),
    }
}

fn rand_query(rng: &mut ChaCha8Rng, sig: &Arc<AlgebraSignature>) -> Query {
    let nvars = rng.gen_range(1..=3);
    let f = rand_formula(rng, sig, nvars, 2);
    Query::new(f, VarTable::new((1..=nvars).map(|i| format!("q{i}")).collect()), sig)
}

/// Mostly small special values, so that equations hold now and then.
fn rand_point(rng: &mut ChaCha8Rng, sig: &Arc<AlgebraSignature>, n: usize) -> Vec<AlgebraElement> {
    (0..n)
        .map(|_| match rng.gen_range(0..8) {
            0 => AlgebraElement::zero(sig),
            1 => AlgebraElement::one(sig),
            2 => AlgebraElement::basis(sig, rng.gen_range(1..sig.dim())),
            3 => AlgebraElement::basis(sig, rng.gen_range(1..sig.dim())).neg(),
            4 | 5 => rand_element(rng, sig, 1, 1),
            _ => rand_element(rng, sig, 5, 3),
        })
        .collect()
}

fn rewriter() -> Result<String, String> {
    let sig = h();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut trues, mut fresh) = (0, 0);
    for case in 0..1000 {
        let q = rand_query(&mut rng, &sig);
        let (out, trace) = to_ordered(&q).map_err(|e| format!("case {case} ({q}): {e}"))?;
        fresh += trace.steps.len();
        if !is_ordered_query(&out).unwrap() {
            return Err(format!("case {case}: unordered output {out}"));
        }
        for _ in 0..20 {
            let pt = rand_point(&mut rng, &sig, q.vars.nfree());
            let a = eval_formula(&q, &pt).unwrap();
            let b = eval_formula(&out, &pt).map_err(|e| format!("case {case} ({out}): {e}"))?;
            if a != b {
                return Err(format!("case {case}: {q} is {a} but {out} is {b}"));
            }
            trues += a as usize;
        }
    }
    Ok(format!("1000 formulas x 20 points, {trues} true instances, {fresh} rewrite steps"))
}

fn lowering() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut trues = 0;
    for case in 0..1000 {
        let sig = if case % 4 == 3 { o() } else { h() };
        let q = rand_query(&mut rng, &sig);
        let lq = lower_formula(&q);
        let pt = rand_point(&mut rng, &sig, q.vars.nfree());
        let coords: Vec<Scalar> = pt.iter().flat_map(|p| p.coords().to_vec()).collect();
        let a = eval_formula(&q, &pt).unwrap();
        if a != eval_real(&lq, &coords).unwrap() {
            return Err(format!("case {case}: lowering changes the truth of {q}"));
        }
        trues += a as usize;
    }

    let sig = h();
    let lowered = |text: &str| {
        let q = parse_query(&sig, &format!("{text} = 0")).unwrap();
        let Formula::Eq(l, _) = &q.formula else { unreachable!() };
        lower_query_term(&q, l)
    };
    let x0 = RealPoly::var(4, 0);
    let zero = RealPoly::zero(4);
    let got = lowered("q - i*q*i - j*q*j - k*q*k");
    if got != [x0.scale(&Scalar::from_i64(4)), zero.clone(), zero.clone(), zero.clone()] {
        return Err(format!("q - iqi - jqj - kqk lowers to {got:?}"));
    }
    let got = lowered("1/16*(q - i*q*i - j*q*j - k*q*k)^2 + 1");
    if got != [x0.mul(&x0).add(&RealPoly::constant(4, Scalar::one())), zero.clone(), zero.clone(), zero] {
        return Err(format!("(1/16)(q - iqi - jqj - kqk)^2 + 1 lowers to {got:?}"));
    }
    Ok(format!("1000 instances ({trues} true), 4x0 and x0^2 + 1 exact"))
}

// ---------------------------------------------------------------- 7

fn qe_witness() -> Result<String, String> {
    let sig = h();
    let phi = "forall a forall b ((q*a)*b = q*(a*b) and q*a = a*q) and \
               exists c (forall d forall e ((c*d)*e = c*(d*e) and c*d = d*c) and c*c = q)";
    let lq = lower_formula(&parse_query(&sig, phi).unwrap());
    let at = |x: Rational, c: usize| {
        let mut v = vec![Scalar::zero(); 4];
        v[c] = q_of(x);
        decide(&lq, &v).map_err(|e| e.to_string())
    };
    for x in [rat(0, 1), rat(1, 1), rat(4, 1), rat(9, 4)] {
        if !at(x.clone(), 0)? {
            return Err(format!("φ fails at ({x}, 0, 0, 0)"));
        }
    }
    if at(rat(-1, 1), 0)? || at(rat(1, 1), 1)? {
        return Err("φ holds at (-1, 0, 0, 0) or (0, 1, 0, 0)".into());
    }
    Ok("true at x0 = 0, 1, 4, 9/4; false at (-1,0,0,0) and (0,1,0,0)".into())
}

// ---------------------------------------------------------------- 8

/// Rational points of the unit 2-sphere of imaginary units from Pythagorean quadruples.
fn pythagorean_units(count: usize) -> Vec<AlgebraElement> {
    let mut out = Vec::new();
    'search: for n in 1i64.. {
        for a in -n..=n {
            for b in -n..=n {
                let c2 = n * n - a * a - b * b;
                if c2 < 0 {
                    continue;
                }
                let c = (c2 as f64).sqrt().round() as i64;
                if c * c != c2 {
                    continue;
                }
                for c in if c == 0 { vec![0] } else { vec![c, -c] } {
                    let coords = vec![Scalar::zero(), q_of(rat(a, n)), q_of(rat(b, n)), q_of(rat(c, n))];
                    let u = AlgebraElement::new(&h(), coords).unwrap();
                    if !out.contains(&u) {
                        out.push(u);
                    }
                    if out.len() == count {
                        break 'search;
                    }
                }
            }
        }
    }
    out
}

fn vanishing() -> Result<String, String> {
    let sig = h();
    let pts = vec![vec![el(&sig, "i")], vec![el(&sig, "-i")]];
    let sphere = pythagorean_units(25);
    let mut dims = Vec::new();
    for d in 2..=6 {
        let basis = vanishing_space(&sig, 1, &pts, d).map_err(|e| e.to_string())?;
        if basis.is_empty() {
            return Err(format!("empty vanishing space at degree {d}"));
        }
        for p in &basis {
            for u in &sphere {
                if !p.eval(std::slice::from_ref(u)).unwrap().is_zero() {
                    return Err(format!("degree {d}: {p} does not vanish at {u}"));
                }
            }
        }
        dims.push(basis.len().to_string());
    }
    Ok(format!("dimensions {} for d = 2..6, 25 sphere points", dims.join(", ")))
}

// ---------------------------------------------------------------- 9

fn realization() -> Result<String, String> {
    let x = RealPoly::var(2, 0);
    let y = RealPoly::var(2, 1);
    let circle = x.mul(&x).add(&y.mul(&y)).sub(&RealPoly::constant(2, Scalar::one()));
    let pts = [(rat(1, 1), rat(0, 1)), (rat(0, 1), rat(1, 1)), (rat(3, 5), rat(4, 5)), (rat(-4, 5), rat(3, 5))];
    for mode in [RealizeMode::Conjunction, RealizeMode::SumOfSquares] {
        let r = realize(&h(), &[circle.clone()], mode).map_err(|e| e.to_string())?;
        for (a, b) in &pts {
            let v = vec![q_of(a.clone()), q_of(b.clone())];
            let image = r.forward(&v).unwrap();
            for t in &r.target {
                if !t.eval(&image).unwrap().is_zero() {
                    return Err(format!("{mode:?}: image of ({a}, {b}) misses {t}"));
                }
            }
            if r.project(&image).unwrap() != v {
                return Err(format!("{mode:?}: ({a}, {b}) does not project back"));
            }
        }
    }
    Ok("4 circle points, both modes".into())
}

// ---------------------------------------------------------------- 10

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let f = r.last().unwrap() / b.last().unwrap();
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * c;
        }
        r = trim(r);
    }
    r
}

fn quo(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); a.len() + 1 - b.len()];
    while r.len() >= b.len() {
        let f = r.last().unwrap() / b.last().unwrap();
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * c;
        }
        q[shift] = f;
        r.pop();
        r = trim(r);
    }
    q
}

fn deriv(p: &[Rational]) -> Vec<Rational> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer((k as i64).into())).collect())
}

fn squarefree(p: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (p.to_vec(), deriv(p));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    quo(p, &a)
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Distinct real roots as narrow intervals: roots of `p'` split the line into
/// monotone pieces, and a piece holds a root exactly when `p` changes sign on it.
fn bisection_roots(p: &[Rational]) -> Vec<(Rational, Rational)> {
    let p = squarefree(p);
    if p.len() <= 1 {
        return vec![];
    }
    let bound = Rational::from_integer(1.into()) + p.iter().map(|c| (c / p.last().unwrap()).abs()).fold(Rational::zero(), |a, b| a + b);
    let mut cuts = vec![(-bound.clone(), -bound.clone())];
    cuts.extend(bisection_roots(&deriv(&p)));
    cuts.push((bound.clone(), bound));
    let sign = |x: &Rational| eval(&p, x).signum();
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0].1.clone(), w[1].0.clone());
        let (sl, sh) = (sign(&lo), sign(&hi));
        if sl.is_zero() {
            out.push((lo.clone(), lo));
            continue;
        }
        if sl == sh || sh.is_zero() {
            continue;
        }
        for _ in 0..80 {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            if sign(&mid) == sl {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push((lo, hi));
    }
    out
}

fn scalar_layer() -> Result<String, String> {
    let two = Scalar::from_i64(2);
    let r2 = two.sqrt().unwrap();
    if r2.mul(&r2) != two {
        return Err("√2·√2 ≠ 2".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let s = q_of(rand_rat(&mut rng, 1000, 97).abs());
        if s.sqrt().unwrap().pow(2) != s {
            return Err(format!("sqrt({s})² ≠ {s}"));
        }
    }
    let mut total = 0;
    for _ in 0..100 {
        let deg = rng.gen_range(1..=6);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-10..=10)).collect();
        while c[deg] == 0 {
            c[deg] = rng.gen_range(-10..=10);
        }
        let coeffs: Vec<Rational> = c.iter().map(|&x| rat(x, 1)).collect();
        let sturm = sturm_count_all(&QPoly::new(coeffs.clone()));
        let oracle = bisection_roots(&coeffs).len();
        if sturm != oracle {
            return Err(format!("{c:?}: Sturm {sturm}, bisection {oracle}"));
        }
        total += sturm;
    }
    Ok(format!("100 square roots, 100 polynomials with {total} real roots"))
}

// ----------------------------------------------------------------

#[test]
fn acceptance_criteria() {
    type Criterion = (&'static str, f64, fn() -> Result<String, String>);
    let criteria: [Criterion; 10] = [
        ("multiplication tables", 1.0, basis_tables),
        ("alternativity and norm composition", 30.0, alternativity),
        ("coordinate extraction", 10.0, extraction),
        ("fundamental theorem of algebra", 120.0, fta),
        ("rewriter soundness", 60.0, rewriter),
        ("lowering soundness", 60.0, lowering),
        ("quantifier elimination witness", 5.0, qe_witness),
        ("vanishing ideals of {i, -i} and the sphere", 60.0, vanishing),
        ("realization round trip", 10.0, realization),
        ("scalar layer", 60.0, scalar_layer),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match &result {
            Ok(d) if secs < *limit => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("{d}; over the time limit")),
            Err(e) => ("FAIL", e.clone()),
        };
        writeln!(out, "criterion {:>2} {status} {name} [{secs:.2} s of {limit} s]: {detail}", k + 1).unwrap();
        out.flush().unwrap();
        if status == "FAIL" {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
