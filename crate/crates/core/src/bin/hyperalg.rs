use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperalg::algebra::{AlgebraElement, AlgebraSignature};
use hyperalg::formula::{eval_formula, eval_term, parse_query, parse_term, to_ordered, Formula, Query, Term};
use hyperalg::geometry::{vanishing_space, AlgebraicSet};
use hyperalg::lower::{emit_smt, lower_formula, realize, RealPoly, RealizeMode, SolverConfig, SolverVerdict, SOLVER_ENV};
use hyperalg::opoly::UnivarPoly;
use hyperalg::roots::solve;
use hyperalg::scalars::{parse_rational, Scalar};
use hyperalg::{selftest, Error, Result};

#[derive(Parser)]
#[command(name = "hyperalg", version, about = "Exact quaternion and octonion algebra from the command line")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Algebra: quaternion or octonion.
    #[arg(long, global = true, default_value = "quaternion")]
    sig: String,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// External SMT solver binary.
    #[arg(long, global = true, env = SOLVER_ENV)]
    solver_path: Option<PathBuf>,
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a term or formula at a point, one element per free variable.
    Eval {
        text: String,
        #[arg(allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Multiply elements left to right, or print the basis multiplication table.
    Mul {
        #[arg(long)]
        table: bool,
        #[arg(allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Zero set of a one-variable ordered polynomial.
    Roots { poly: String },
    /// Rewrite a formula into ordered form.
    Rewrite { formula: String },
    /// Translate a formula into real polynomial arithmetic.
    Lower { formula: String },
    /// Emit SMT-LIB2 for the lowered formula, optionally running the solver.
    Smt {
        formula: String,
        /// Fix the free variables to these elements.
        #[arg(long = "at", allow_hyphen_values = true)]
        at: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// Realize a real algebraic set as a basic algebraic set of the algebra.
    Realize {
        polys: Vec<String>,
        /// Comma separated variable order.
        #[arg(long)]
        vars: Option<String>,
        #[arg(long, value_enum, default_value = "conj")]
        mode: Mode,
        /// Real points to push through the forward map, comma separated.
        #[arg(long = "at", allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Algebraic set operations on JSON descriptions (inline or `@file`).
    Set {
        #[command(subcommand)]
        op: SetOp,
    },
    /// Run the built-in invariant suites.
    Selftest {
        #[arg(long, default_value_t = 1)]
        scale: usize,
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
}

#[derive(Subcommand)]
enum SetOp {
    Member {
        set: String,
        /// One element per variable.
        #[arg(allow_hyphen_values = true)]
        point: Vec<String>,
        #[arg(long)]
        extend: bool,
    },
    Union { a: String, b: String },
    Intersect { a: String, b: String },
    /// Ordered polynomials of bounded degree vanishing at the given points (`;` between coordinates of one point).
    Vanish {
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 1)]
        nvars: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Conj,
    Sos,
}

fn elements(sig: &Arc<AlgebraSignature>, texts: &[String]) -> Result<Vec<AlgebraElement>> {
    texts.iter().map(|t| AlgebraElement::parse(sig, t)).collect()
}

fn set_arg(sig: &Arc<AlgebraSignature>, text: &str) -> Result<AlgebraicSet> {
    let raw = match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))?,
        None => text.to_string(),
    };
    let v: Value = serde_json::from_str(&raw).map_err(|e| Error::Invalid(format!("set description: {e}")))?;
    AlgebraicSet::from_json(sig, &v)
}

fn print(json: bool, human: String, machine: Value) {
    let text = if json { serde_json::to_string_pretty(&machine).expect("values serialize") } else { human };
    // a closed pipe (`| head`) just ends the output
    if writeln!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(0);
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let sig = AlgebraSignature::by_name(&cli.sig)?;
    let json = cli.json;
    match cli.cmd {
        Cmd::Eval { text, point } => {
            let pt = elements(&sig, &point)?;
            match parse_query(&sig, &text) {
                Ok(q) => {
                    let b = eval_formula(&q, &pt)?;
                    print(json, b.to_string(), json!({"formula": q.to_string(), "value": b}));
                }
                Err(_) => {
                    let (t, vars) = parse_term(&sig, &text)?;
                    let q = Query::new(Formula::eq(t.clone(), Term::Zero), vars, &sig);
                    let v = eval_term(&q, &t, &pt)?;
                    print(json, v.to_string(), json!({"term": q.display_term(&t).to_string(), "value": v.to_json()}));
                }
            }
        }
        Cmd::Mul { table, elements: texts } => {
            if table {
                let k = sig.dim();
                let rows: Vec<Vec<String>> = (0..k)
                    .map(|i| (0..k).map(|j| AlgebraElement::basis(&sig, i).mul(&AlgebraElement::basis(&sig, j)).map(|p| p.to_string())).collect())
                    .collect::<Result<_>>()?;
                let human = rows.iter().map(|r| r.iter().map(|c| format!("{c:>4}")).collect::<String>()).collect::<Vec<_>>().join("\n");
                print(json, human, json!({"sig": sig.name(), "table": rows}));
            } else {
                let es = elements(&sig, &texts)?;
                let first = es.first().ok_or_else(|| Error::Invalid("nothing to multiply".into()))?;
                let p = es[1..].iter().try_fold(first.clone(), |acc, e| acc.mul(e))?;
                print(json, p.to_string(), p.to_json());
            }
        }
        Cmd::Roots { poly } => {
            let rs = solve(&UnivarPoly::parse(&sig, &poly)?)?;
            let mut human: Vec<String> = rs.descriptors.iter().map(|d| d.to_string()).collect();
            human.push(format!("dimension {}", rs.dimension()));
            print(json, human.join("\n"), rs.to_json());
        }
        Cmd::Rewrite { formula } => {
            let q = parse_query(&sig, &formula)?;
            let (out, trace) = to_ordered(&q)?;
            let steps = trace.describe(&out);
            let human = std::iter::once(out.to_string()).chain(steps.iter().map(|s| format!("  {s}"))).collect::<Vec<_>>().join("\n");
            print(json, human, json!({"input": q.to_string(), "ordered": out.to_string(), "steps": steps}));
        }
        Cmd::Lower { formula } => {
            let lq = lower_formula(&parse_query(&sig, &formula)?);
            print(json, lq.to_string(), json!({"variables": lq.names, "free": lq.nfree, "formula": lq.to_string()}));
        }
        Cmd::Smt { formula, at, out, check } => {
            let lq = lower_formula(&parse_query(&sig, &formula)?);
            let fixed = if at.is_empty() { None } else { Some(lq.lower_point(&elements(&sig, &at)?)?) };
            let script = emit_smt(&lq, fixed.as_deref())?;
            match &out {
                Some(path) => std::fs::write(path, &script).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?,
                None if !check => print!("{script}"),
                None => {}
            }
            if check {
                let cfg = SolverConfig { path: cli.solver_path.clone(), timeout_ms: cli.timeout_ms };
                let verdict = match cfg.run(&script)? {
                    SolverVerdict::Sat => "sat",
                    SolverVerdict::Unsat => "unsat",
                    SolverVerdict::Unknown => "unknown",
                };
                print(json, verdict.to_string(), json!({"verdict": verdict}));
            }
        }
        Cmd::Realize { polys, vars, mode, at } => {
            let texts: Vec<&str> = polys.iter().map(String::as_str).collect();
            let names: Option<Vec<&str>> = vars.as_deref().map(|v| v.split(',').map(str::trim).collect());
            let (system, _) = RealPoly::parse_system(&texts, names.as_deref())?;
            let mode = match mode {
                Mode::Conj => RealizeMode::Conjunction,
                Mode::Sos => RealizeMode::SumOfSquares,
            };
            let r = realize(&sig, &system, mode)?;
            let mut human = vec![format!("target ({} variables):", r.names.len())];
            human.extend(r.target.iter().map(|p| format!("  {p} = 0")));
            let mut images = Vec::new();
            for text in &at {
                let x = text.split(',').map(|c| parse_rational(c.trim()).map(Scalar::from_rational)).collect::<Result<Vec<_>>>()?;
                let image = r.forward(&x)?;
                let (inside, back) = (r.contains(&image)?, r.project(&image)?);
                let shown: Vec<String> = image.iter().map(|e| e.to_string()).collect();
                let back: Vec<String> = back.iter().map(|s| s.to_string()).collect();
                human.push(format!("({text}) -> ({}) in target: {inside}, projects to ({})", shown.join(", "), back.join(", ")));
                images.push(json!({"point": text, "image": shown, "in_target": inside, "projection": back}));
            }
            let mut machine = r.to_json();
            machine["images"] = Value::Array(images);
            print(json, human.join("\n"), machine);
        }
        Cmd::Set { op } => match op {
            SetOp::Member { set, point, extend } => {
                let mut s = set_arg(&sig, &set)?;
                if extend {
                    s = s.extend_scalars();
                }
                let b = s.member(&elements(&sig, &point)?)?;
                print(json, b.to_string(), json!({"member": b}));
            }
            SetOp::Union { a, b } => {
                let s = set_arg(&sig, &a)?.union(&set_arg(&sig, &b)?)?;
                print(true, String::new(), s.to_json());
            }
            SetOp::Intersect { a, b } => {
                let s = set_arg(&sig, &a)?.intersect(&set_arg(&sig, &b)?)?;
                print(true, String::new(), s.to_json());
            }
            SetOp::Vanish { points, degree, nvars } => {
                let pts = points.iter().map(|p| elements(&sig, &p.split(';').map(str::to_string).collect::<Vec<_>>())).collect::<Result<Vec<_>>>()?;
                let basis: Vec<String> = vanishing_space(&sig, nvars, &pts, degree)?.iter().map(|p| p.to_string()).collect();
                print(json, basis.join("\n"), json!({"degree": degree, "dimension": basis.len(), "basis": basis}));
            }
        },
        Cmd::Selftest { scale, suites } => {
            let reports = selftest::run(cli.seed, scale, &suites);
            let ok = reports.iter().all(|r| r.passed());
            let human = reports
                .iter()
                .map(|r| match &r.failure {
                    None => format!("PASS {:<14} {:>6} cases", r.name, r.cases),
                    Some(f) => format!("FAIL {:<14} {f}", r.name),
                })
                .collect::<Vec<_>>()
                .join("\n");
            print(json, human, Value::Array(reports.iter().map(|r| r.to_json()).collect()));
            for r in &reports {
                eprintln!("{:<14} {:>7} ms", r.name, r.millis);
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::SolverUnavailable(_)) { 2 } else { 1 })
        }
    }
}
