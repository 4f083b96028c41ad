//! Realizing a real algebraic set as the projection of a quaternion zero set.

use hyperalg::algebra::AlgebraSignature;
use hyperalg::lower::{realize, RealPoly, RealizeMode};
use hyperalg::scalars::rat;
use hyperalg::{Result, Scalar};

fn main() -> Result<()> {
    let (polys, names) = RealPoly::parse_system(&["x^2 + y^2 - 1"], Some(&["x", "y"]))?;
    for mode in [RealizeMode::Conjunction, RealizeMode::SumOfSquares] {
        let r = realize(&AlgebraSignature::quaternion(), &polys, mode)?;
        println!("{mode:?}: {} algebra variables, {} equations", r.names.len(), r.target.len());
        for t in &r.target {
            println!("  {t} = 0");
        }
        let p = [Scalar::from_rational(rat(3, 5)), Scalar::from_rational(rat(4, 5))];
        let image = r.forward(&p)?;
        let shown: Vec<String> = image.iter().map(|e| e.to_string()).collect();
        let back: Vec<String> = r.project(&image)?.iter().map(|s| s.to_string()).collect();
        println!("  ({}) = (3/5, 4/5) maps to ({}) and projects to ({})", names.join(", "), shown.join(", "), back.join(", "));
    }
    Ok(())
}
