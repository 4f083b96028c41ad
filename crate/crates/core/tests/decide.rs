use hyperalg::algebra::AlgebraSignature;
use hyperalg::formula::parse_query;
use hyperalg::lower::{decide, lower_formula};
use hyperalg::scalars::{rat, Scalar};
use hyperalg::Error;

fn decide_at(text: &str, x: [(i64, i64); 4]) -> bool {
    let lq = lower_formula(&parse_query(&AlgebraSignature::quaternion(), text).unwrap());
    let point: Vec<Scalar> = x.iter().map(|&(n, d)| Scalar::from_rational(rat(n, d))).collect();
    decide(&lq, &point).unwrap()
}

// Read with the chained equality, commutativity of all pairs is forced once q != 0.
#[test]
fn chained_center_formula_only_holds_at_zero() {
    let text = "forall a forall b ((q*a)*b = q*(a*b) = (b*q)*a) and \
                exists c ((forall a forall b ((c*a)*b = c*(a*b) = (b*c)*a)) and c^2 = q)";
    assert!(decide_at(text, [(0, 1), (0, 1), (0, 1), (0, 1)]));
    for x in [[(1, 1), (0, 1), (0, 1), (0, 1)], [(4, 1), (0, 1), (0, 1), (0, 1)], [(0, 1), (1, 1), (0, 1), (0, 1)]] {
        assert!(!decide_at(text, x));
    }
}

#[test]
fn squares_of_central_elements() {
    let text = "forall a forall b ((q*a)*b = q*(a*b) and q*a = a*q) and \
                exists c (forall d forall e ((c*d)*e = c*(d*e) and c*d = d*c) and c*c = q)";
    assert!(decide_at(text, [(9, 4), (0, 1), (0, 1), (0, 1)]));
    assert!(!decide_at(text, [(-1, 1), (0, 1), (0, 1), (0, 1)]));
    assert!(!decide_at(text, [(1, 1), (1, 1), (0, 1), (0, 1)]));
}

#[test]
fn square_roots_of_minus_one() {
    let minus_one = [(-1, 1), (0, 1), (0, 1), (0, 1)];
    // a square root commuting with i and j is real
    assert!(!decide_at("exists t (t*t = q and t*i = i*t and t*j = j*t)", minus_one));
    assert!(decide_at("exists t (t*t = q and t*i = i*t)", minus_one));
    assert!(decide_at("exists t (t*t = q)", minus_one));
    // t*t = i leaves 2·t0·t1 = 1 with t0^2 = t1^2, outside the exact fragment
    let lq = lower_formula(&parse_query(&AlgebraSignature::quaternion(), "exists t (t*t = q)").unwrap());
    let point = [(0, 1), (1, 1), (0, 1), (0, 1)].map(|(n, d)| Scalar::from_rational(rat(n, d)));
    assert!(matches!(decide(&lq, &point), Err(Error::Undecided(_))));
}
