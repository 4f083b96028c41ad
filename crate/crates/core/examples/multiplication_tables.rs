//! Quaternion and octonion basis tables, the norm, inverses and a non-associative triple.

use hyperalg::algebra::{AlgebraElement, AlgebraSignature};
use hyperalg::Result;

fn main() -> Result<()> {
    for sig in [AlgebraSignature::quaternion(), AlgebraSignature::octonion()] {
        println!("{sig}");
        let e = |i| AlgebraElement::basis(&sig, i);
        for i in 0..sig.dim() {
            let row: Vec<String> = (0..sig.dim()).map(|j| Ok(format!("{:>4}", e(i).mul(&e(j))?.to_string()))).collect::<Result<_>>()?;
            println!("  {}", row.join(""));
        }
    }

    let o = AlgebraSignature::octonion();
    let e = |i| AlgebraElement::basis(&o, i);
    println!("(e1 e2) e4 = {}", e(1).mul(&e(2))?.mul(&e(4))?);
    println!("e1 (e2 e4) = {}", e(1).mul(&e(2).mul(&e(4))?)?);

    let a = AlgebraElement::parse(&o, "1 + 2e3 - 1/2e5")?;
    println!("|{a}|^2 = {}, inverse {}", a.norm()?, a.inv()?);
    println!("a * a^-1 = {}", a.mul(&a.inv()?)?);
    Ok(())
}
