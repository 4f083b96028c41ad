//! Lowering to real coordinates and deciding small quantified formulas.

use hyperalg::algebra::{AlgebraElement, AlgebraSignature};
use hyperalg::formula::parse_query;
use hyperalg::lower::{decide, eval_real, lower_formula};
use hyperalg::scalars::rat;
use hyperalg::{Result, Scalar};

fn main() -> Result<()> {
    let h = AlgebraSignature::quaternion();
    let q = parse_query(&h, "q*q + 1 = 0")?;
    let lq = lower_formula(&q);
    println!("{q}\n  lowers to {lq}");
    let j = AlgebraElement::parse(&h, "j")?;
    println!("  at j: {}", eval_real(&lq, &lq.lower_point(&[j])?)?);

    // real squares of central elements
    let phi = parse_query(
        &h,
        "forall a forall b ((q*a)*b = q*(a*b) and q*a = a*q) and \
         exists c (forall d forall e ((c*d)*e = c*(d*e) and c*d = d*c) and c*c = q)",
    )?;
    let lphi = lower_formula(&phi);
    for (x0, x1) in [(rat(9, 4), rat(0, 1)), (rat(-1, 1), rat(0, 1)), (rat(1, 1), rat(1, 1))] {
        let pt = [x0.clone(), x1.clone(), rat(0, 1), rat(0, 1)].map(Scalar::from_rational);
        println!("central square at ({x0}, {x1}, 0, 0): {}", decide(&lphi, &pt)?);
    }
    Ok(())
}
