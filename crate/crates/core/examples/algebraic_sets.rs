//! Finite unions of basic algebraic sets and spaces of vanishing polynomials.

use hyperalg::algebra::{AlgebraElement, AlgebraSignature};
use hyperalg::geometry::{parse_components, sphere_points, vanishing_space};
use hyperalg::{Result, Scalar};

fn main() -> Result<()> {
    let h = AlgebraSignature::quaternion();
    let el = |s: &str| AlgebraElement::parse(&h, s);

    let pm_i = parse_components(&h, &[vec!["q - i".into()], vec!["q + i".into()]], None)?;
    let sphere = parse_components(&h, &[vec!["q^2 + 1".into()]], None)?;
    let both = pm_i.intersect(&sphere)?;
    for x in ["i", "-i", "j", "1"] {
        println!("{x}: in {{i, -i}} {}, on the sphere {}, in both {}", pm_i.member(&[el(x)?])?, sphere.member(&[el(x)?])?, both.member(&[el(x)?])?);
    }
    println!("{}", pm_i.union(&sphere)?.to_json());

    // everything of low degree that vanishes at i and -i also vanishes on the whole sphere
    let pts = vec![vec![el("i")?], vec![el("-i")?]];
    let tests = sphere_points(&h, &Scalar::zero(), &Scalar::one(), 10);
    for d in 2..=4 {
        let basis = vanishing_space(&h, 1, &pts, d)?;
        let mut all = true;
        for p in &basis {
            for u in &tests {
                all &= p.eval(std::slice::from_ref(u))?.is_zero();
            }
        }
        println!("degree {d}: {} basis polynomials, all vanish on 10 sphere points: {all}", basis.len());
    }
    Ok(())
}
