//! Writing a lowered formula as an SMT-LIB script and running a solver when one is configured.

use hyperalg::algebra::AlgebraSignature;
use hyperalg::formula::parse_query;
use hyperalg::lower::{emit_smt, lower_formula, SolverConfig};
use hyperalg::{Error, Result};

fn main() -> Result<()> {
    let h = AlgebraSignature::quaternion();
    let q = parse_query(&h, "q*q = -1 and q*i = i*q")?;
    let script = emit_smt(&lower_formula(&q), None)?;
    println!("{script}");

    let solver = SolverConfig { path: None, timeout_ms: Some(5000) };
    match solver.run(&script) {
        Ok(v) => println!("solver says {v:?}"),
        Err(Error::SolverUnavailable(msg)) => println!("no solver: {msg}"),
        Err(e) => return Err(e),
    }
    Ok(())
}
