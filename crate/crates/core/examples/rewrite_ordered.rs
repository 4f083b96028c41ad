//! Rewriting formulas so every atom is an ordered polynomial.

use hyperalg::algebra::AlgebraSignature;
use hyperalg::formula::{eval_formula, is_ordered_query, parse_query, to_ordered};
use hyperalg::algebra::AlgebraElement;
use hyperalg::Result;

fn main() -> Result<()> {
    let h = AlgebraSignature::quaternion();
    let q = parse_query(&h, "q2*q1 = q1*(q3*q2) + i")?;
    let (out, trace) = to_ordered(&q)?;
    println!("input:  {q}");
    println!("output: {out}");
    println!("ordered: {}", is_ordered_query(&out)?);
    for line in trace.describe(&out) {
        println!("  {line}");
    }

    let pt: Vec<AlgebraElement> = ["j", "i", "-k"].iter().map(|s| AlgebraElement::parse(&h, s)).collect::<Result<_>>()?;
    println!("at (j, i, -k): {} and {}", eval_formula(&q, &pt)?, eval_formula(&out, &pt)?);
    Ok(())
}
