//! SMT-LIB2 emission (logic NRA) and a small client for an external solver.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::formula::{LoweredQuery, RealFormula};
use super::poly::RealPoly;
use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};

/// Environment variable naming the solver binary; it overrides the configured path.
pub const SOLVER_ENV: &str = "HYPER_SOLVER";

fn symbol(name: &str) -> String {
    if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') && !name.starts_with(|c: char| c.is_ascii_digit()) {
        name.to_string()
    } else {
        format!("|{name}|")
    }
}

fn int(n: &BigInt) -> String {
    if n.is_negative() {
        format!("(- {})", n.abs())
    } else {
        n.to_string()
    }
}

fn rational(r: &Rational) -> String {
    if r.is_integer() {
        int(r.numer())
    } else {
        format!("(/ {} {})", int(r.numer()), r.denom())
    }
}

/// Irrational constants become declared symbols pinned by their defining polynomial and isolating interval.
struct Emitter<'a> {
    names: &'a [String],
    algebraic: Vec<Scalar>,
}

impl Emitter<'_> {
    fn scalar(&mut self, c: &Scalar) -> String {
        if let Some(r) = c.as_rational() {
            return rational(r);
        }
        let k = match self.algebraic.iter().position(|a| a == c) {
            Some(k) => k,
            None => {
                self.algebraic.push(c.clone());
                self.algebraic.len() - 1
            }
        };
        format!("alg_{k}")
    }

    fn poly(&mut self, p: &RealPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (e, c) in p.terms() {
            let mut factors = Vec::new();
            let coef = self.scalar(c);
            if e.iter().all(|&k| k == 0) || !c.sub(&Scalar::one()).is_zero() {
                factors.push(coef);
            }
            for (i, &k) in e.iter().enumerate() {
                factors.extend(std::iter::repeat_n(symbol(&self.names[i]), k as usize));
            }
            terms.push(if factors.len() == 1 { factors.pop().unwrap() } else { format!("(* {})", factors.join(" ")) });
        }
        if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            format!("(+ {})", terms.join(" "))
        }
    }

    fn formula(&mut self, f: &RealFormula) -> String {
        match f {
            RealFormula::Eq(p) => format!("(= {} 0)", self.poly(p)),
            RealFormula::And(..) => {
                let parts: Vec<String> = f.conjuncts().into_iter().map(|c| self.formula(c)).collect();
                format!("(and {})", parts.join(" "))
            }
            RealFormula::Or(a, b) => format!("(or {} {})", self.formula(a), self.formula(b)),
            RealFormula::Not(a) => format!("(not {})", self.formula(a)),
            RealFormula::Exists(..) | RealFormula::Forall(..) => {
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
                        _ => break,
                    }
                }
                let decl: Vec<String> = vars.iter().map(|&v| format!("({} Real)", symbol(&self.names[v]))).collect();
                let q = if exists { "exists" } else { "forall" };
                format!("({q} ({}) {})", decl.join(" "), self.formula(body))
            }
        }
    }
}

/// SMT-LIB2 script asserting the lowered formula with its free variables declared.
/// With `point`, the free variables are also fixed to those values.
pub fn emit_smt(lq: &LoweredQuery, point: Option<&[Scalar]>) -> Result<String> {
    let mut em = Emitter { names: &lq.names, algebraic: Vec::new() };
    let body = em.formula(&lq.formula);
    let mut fixes = Vec::new();
    if let Some(pt) = point {
        if pt.len() != lq.nfree {
            return Err(Error::ArityMismatch { expected: lq.nfree, got: pt.len() });
        }
        for (k, x) in pt.iter().enumerate() {
            let v = em.scalar(x);
            fixes.push(format!("(assert (= {} {v}))", symbol(&lq.names[k])));
        }
    }
    let mut out = String::new();
    writeln!(out, "(set-logic NRA)").unwrap();
    for name in &lq.names[..lq.nfree] {
        writeln!(out, "(declare-fun {} () Real)", symbol(name)).unwrap();
    }
    for (k, a) in em.algebraic.iter().enumerate() {
        let (lo, hi) = a.isolating_interval().ok_or_else(|| Error::Internal("irrational constant without an isolating interval".into()))?;
        let poly = a.defining_poly();
        writeln!(out, "(declare-fun alg_{k} () Real)").unwrap();
        let mut terms = Vec::new();
        for (d, c) in poly.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mut f = vec![int(c)];
            f.extend(std::iter::repeat_n(format!("alg_{k}"), d));
            terms.push(if f.len() == 1 { f.pop().unwrap() } else { format!("(* {})", f.join(" ")) });
        }
        writeln!(out, "(assert (= (+ {} 0) 0))", terms.join(" ")).unwrap();
        writeln!(out, "(assert (< {} alg_{k} {}))", rational(&lo), rational(&hi)).unwrap();
    }
    for f in fixes {
        writeln!(out, "{f}").unwrap();
    }
    writeln!(out, "(assert {body})").unwrap();
    writeln!(out, "(check-sat)").unwrap();
    writeln!(out, "(exit)").unwrap();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverVerdict {
    Sat,
    Unsat,
    Unknown,
}

/// Where the external solver lives and how long it may run.
#[derive(Clone, Debug, Default)]
pub struct SolverConfig {
    pub path: Option<PathBuf>,
    pub timeout_ms: Option<u64>,
}

impl SolverConfig {
    /// The solver binary: `HYPER_SOLVER` first, then the configured path.
    pub fn resolve(&self) -> Result<PathBuf> {
        match std::env::var_os(SOLVER_ENV) {
            Some(p) if !p.is_empty() => Ok(PathBuf::from(p)),
            _ => self.path.clone().ok_or_else(|| Error::SolverUnavailable(format!("no solver configured (set {SOLVER_ENV} or --solver-path)"))),
        }
    }

    /// Runs the solver on a script file and reads its verdict.
    pub fn run(&self, script: &str) -> Result<SolverVerdict> {
        let bin = self.resolve()?;
        let dir = std::env::temp_dir().join(format!("hyperalg-smt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).map_err(|e| Error::SolverUnavailable(e.to_string()))?;
        let file = dir.join(format!("{:016x}.smt2", fnv(script)));
        std::fs::write(&file, script).map_err(|e| Error::SolverUnavailable(e.to_string()))?;
        let mut child = Command::new(&bin)
            .arg(&file)
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| Error::SolverUnavailable(format!("{}: {e}", bin.display())))?;
        let limit = self.timeout_ms.map(Duration::from_millis);
        let start = Instant::now();
        loop {
            match child.try_wait().map_err(|e| Error::SolverUnavailable(e.to_string()))? {
                Some(_) => break,
                None if limit.is_some_and(|l| start.elapsed() > l) => {
                    let _ = child.kill();
                    let _ = child.wait();
                    let _ = std::fs::remove_file(&file);
                    return Ok(SolverVerdict::Unknown);
                }
                None => std::thread::sleep(Duration::from_millis(5)),
            }
        }
        let mut text = String::new();
        if let Some(mut out) = child.stdout.take() {
            out.read_to_string(&mut text).map_err(|e| Error::SolverUnavailable(e.to_string()))?;
        }
        let _ = std::fs::remove_file(&file);
        Ok(match text.lines().map(str::trim).find(|l| !l.is_empty()) {
            Some("sat") => SolverVerdict::Sat,
            Some("unsat") => SolverVerdict::Unsat,
            _ => SolverVerdict::Unknown,
        })
    }
}

/// FNV-1a, used to key script files by content.
fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSignature;
    use crate::formula::parse_query;
    use crate::lower::lower_formula;

    fn script(text: &str) -> String {
        let q = parse_query(&AlgebraSignature::quaternion(), text).unwrap();
        emit_smt(&lower_formula(&q), None).unwrap()
    }

    #[test]
    fn sphere_script() {
        let s = script("q^2 + 1 = 0");
        assert!(s.starts_with("(set-logic NRA)\n(declare-fun q_0 () Real)"));
        assert!(s.contains("(assert (and (= (+ 1 (* (- 1) q_3 q_3) (* (- 1) q_2 q_2) (* (- 1) q_1 q_1) (* q_0 q_0)) 0)"));
        assert!(s.ends_with("(check-sat)\n(exit)\n"));
        assert_eq!(s, script("q^2 + 1 = 0"));
    }

    #[test]
    fn quantifier_blocks() {
        let s = script("exists c (c*c = q)");
        assert!(s.contains("(exists ((c_0 Real) (c_1 Real) (c_2 Real) (c_3 Real))"));
        assert!(!s.contains("declare-fun c_0"));
    }

    #[test]
    fn missing_solver() {
        if std::env::var_os(SOLVER_ENV).is_none() {
            assert!(matches!(SolverConfig::default().run("(check-sat)"), Err(Error::SolverUnavailable(_))));
        }
    }
}
