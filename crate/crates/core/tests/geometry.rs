use std::sync::Arc;

use hyperalg::algebra::{AlgebraElement, AlgebraSignature};
use hyperalg::geometry::{parse_components, sphere_points, vanishing_space, AlgebraicSet};
use hyperalg::scalars::{rat, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn h() -> Arc<AlgebraSignature> {
    AlgebraSignature::quaternion()
}

fn set(comps: &[&[&str]], vars: &[&str]) -> AlgebraicSet {
    let c: Vec<Vec<String>> = comps.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
    let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    parse_components(&h(), &c, Some(&v)).unwrap()
}

fn random_quaternion(rng: &mut impl Rng) -> AlgebraElement {
    let coords = (0..4).map(|_| Scalar::from_rational(rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))).collect();
    AlgebraElement::new(&h(), coords).unwrap()
}

/// Small integer points, so that the sets below are hit with positive frequency.
fn small_point() -> impl Strategy<Value = AlgebraElement> {
    prop::sample::select(vec!["0", "1", "-1", "i", "-i", "j", "k", "1 + i", "2"]).prop_map(|s| AlgebraElement::parse(&h(), s).unwrap())
}

proptest! {
    #[test]
    fn membership_distributes(p in small_point()) {
        let a = set(&[&["q - i"], &["q^2 - 1"]], &["q"]);
        let b = set(&[&["q^2 + 1"]], &["q"]);
        let (ma, mb) = (a.member(&[p.clone()]).unwrap(), b.member(&[p.clone()]).unwrap());
        prop_assert_eq!(a.union(&b).unwrap().member(&[p.clone()]).unwrap(), ma || mb);
        prop_assert_eq!(a.intersect(&b).unwrap().member(&[p.clone()]).unwrap(), ma && mb);
    }
}

#[test]
fn self_union_keeps_membership() {
    let s = set(&[&["q^2 + 1"], &["q - 2"]], &["q"]);
    let twice = s.union(&s).unwrap();
    assert_eq!(twice.basics().len(), 2 * s.basics().len());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut probes: Vec<AlgebraElement> = (0..50).map(|_| random_quaternion(&mut rng)).collect();
    probes.extend(sphere_points(&h(), &Scalar::zero(), &Scalar::one(), 5));
    for p in probes {
        assert_eq!(s.member(&[p.clone()]).unwrap(), twice.member(&[p]).unwrap());
    }
}

#[test]
fn arity_mismatch_is_an_error() {
    let s = set(&[&["q1 - q2"]], &["q1", "q2"]);
    assert!(s.member(&[AlgebraElement::one(&h())]).is_err());
}

#[test]
fn sharp_dimension_witnesses() {
    let vars = ["q1", "q2"];
    let p1 = set(&[&["q1"]], &vars);
    let p2 = set(&[&["q1^2 + q2^2 + 1"]], &vars);
    let p3 = set(&[&["q1^2 + 1"]], &vars);
    let mut rng = ChaCha8Rng::seed_from_u64(38);
    let sphere = sphere_points(&h(), &Scalar::zero(), &Scalar::one(), 50);
    for u in &sphere {
        let free = random_quaternion(&mut rng);
        assert!(p1.member(&[AlgebraElement::zero(&h()), free.clone()]).unwrap());
        assert!(p3.member(&[u.clone(), free]).unwrap());
    }
    // (s·u, t·u) with s² + t² = 1 and u an imaginary unit
    let circle = [(rat(3, 5), rat(4, 5)), (rat(-5, 13), rat(12, 13)), (rat(1, 1), rat(0, 1)), (rat(8, 17), rat(-15, 17))];
    for u in &sphere {
        for (s, t) in &circle {
            let q1 = u.scale(&Scalar::from_rational(s.clone()));
            let q2 = u.scale(&Scalar::from_rational(t.clone()));
            assert!(p2.member(&[q1, q2]).unwrap());
        }
    }
    let one = AlgebraElement::one(&h());
    assert!(!p2.member(&[one.clone(), one]).unwrap());
}

#[test]
fn vanishing_ideals_of_two_points_and_the_sphere_agree() {
    let pts = vec![vec![AlgebraElement::parse(&h(), "i").unwrap()], vec![AlgebraElement::parse(&h(), "-i").unwrap()]];
    let sphere = sphere_points(&h(), &Scalar::zero(), &Scalar::one(), 25);
    for d in 2..=6 {
        let basis = vanishing_space(&h(), 1, &pts, d).unwrap();
        // 4(d+1) unknowns, 8 independent conditions
        assert_eq!(basis.len(), 4 * (d as usize + 1) - 8);
        for p in &basis {
            for u in &sphere {
                assert!(p.eval(std::slice::from_ref(u)).unwrap().is_zero());
            }
        }
    }
}
