//! Zero sets of one-variable quaternion polynomials: isolated points and spheres.

use hyperalg::algebra::{AlgebraElement, AlgebraSignature};
use hyperalg::opoly::UnivarPoly;
use hyperalg::roots::{companion_root_count, solve};
use hyperalg::Result;

fn main() -> Result<()> {
    let h = AlgebraSignature::quaternion();
    for text in ["q^2 + 1", "q^2 - q*(i + j) + k", "q^3 - q^2*i + q - i", "q^2*(1 + i) + q*j - 2"] {
        let p = UnivarPoly::parse(&h, text)?;
        let rs = solve(&p)?;
        println!("{p}: zero set of dimension {}", rs.dimension());
        for d in &rs.descriptors {
            println!("  {d}");
        }
        let (found, expected) = companion_root_count(&rs)?;
        println!("  {found} of {expected} companion roots accounted for");
    }

    let rs = solve(&UnivarPoly::parse(&h, "q^2 + 1")?)?;
    for text in ["3/5j + 4/5k", "i + j"] {
        let x = AlgebraElement::parse(&h, text)?;
        println!("{x} on the sphere of q^2 + 1: {}", rs.contains(&x)?);
    }
    Ok(())
}
