//! Recovering real coordinates with ring operations only.

use hyperalg::algebra::{coord_extract, AlgebraElement, AlgebraSignature};
use hyperalg::lower::coordinate_term;
use hyperalg::formula::{Formula, Query, Term, VarTable};
use hyperalg::Result;

fn main() -> Result<()> {
    let h = AlgebraSignature::quaternion();
    let q = AlgebraElement::parse(&h, "3/2 - i + 4j + 7k")?;
    let coords: Vec<String> = coord_extract(&q)?.iter().map(|c| c.to_string()).collect();
    println!("{q} has coordinates ({})", coords.join(", "));

    let o = AlgebraSignature::octonion();
    let x = AlgebraElement::parse(&o, "2e1 - e6 + 5e7 - 1/3")?;
    let coords: Vec<String> = coord_extract(&x)?.iter().map(|c| c.to_string()).collect();
    println!("{x} has coordinates ({})", coords.join(", "));

    // the same extraction as a term of the language
    let query = Query::new(Formula::eq(Term::Var(0), Term::Zero), VarTable::new(vec!["q".into()]), &h);
    for c in 0..2 {
        let t = coordinate_term(&h, &Term::Var(0), c)?;
        println!("coordinate {c} of q: {}", query.display_term(&t));
    }
    Ok(())
}
