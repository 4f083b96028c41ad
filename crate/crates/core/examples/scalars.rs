//! Exact real algebraic numbers: square roots, nested radicals and root isolation.

use hyperalg::scalars::{isolate_real_roots, rat};
use hyperalg::{Result, Scalar};
use num_bigint::BigInt;

fn main() -> Result<()> {
    let two = Scalar::from_i64(2);
    let r2 = two.sqrt()?;
    println!("sqrt(2) = {r2} ~ {:.12}", r2.to_f64());
    println!("sqrt(2)^2 = {}", r2.mul(&r2));

    // sqrt(2) + sqrt(3) has minimal polynomial x^4 - 10x^2 + 1
    let s = r2.add(&Scalar::from_i64(3).sqrt()?);
    println!("sqrt(2) + sqrt(3) ~ {:.12}, defined by {:?}", s.to_f64(), s.defining_poly());

    let q = Scalar::from_rational(rat(9, 16));
    println!("sqrt(9/16) = {}", q.sqrt()?);

    // real roots of x^3 - 2x - 1 = (x + 1)(x^2 - x - 1)
    let p: Vec<BigInt> = [-1, -2, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
    for r in isolate_real_roots(&p)? {
        println!("root of x^3 - 2x - 1: {r} ~ {:.12}", r.to_f64());
    }
    Ok(())
}
