//! Recovering coordinates using only ring operations, integer division and
//! left-division by basis units.
//!
//! Quaternions: `4q_0 = q − iqi − jqj − kqk` and, for example,
//! `4i·q_1 = q − iqi + jqj + kqk`.
//!
//! Octonions: with `S(o) = Σ_h e_h o e_h` one has `S(o) = −7o_0 + 5·Im(o)`, so
//! `12·o_0 = 5o − S(o)` and `12·e_l o_l = o − 5·e_l o e_l + Σ_{h≠l} e_h o e_h`.
//! The shorter octonion identity `8o_0 = o − S(o)` is false (the difference is
//! `−4·Im(o)`); [`literal_octonion_identity_residual`] exposes that residual.

use super::element::AlgebraElement;
use super::signature::SigKind;
use crate::error::{Error, Result};
use crate::scalars::{rat, Scalar};

/// `e_h o e_h` (well defined in any alternative algebra).
fn sandwich(o: &AlgebraElement, h: usize) -> AlgebraElement {
    let e = AlgebraElement::basis(o.sig(), h);
    e.mul(o).and_then(|x| x.mul(&e)).expect("same signature")
}

/// Left division by `n·e_l` for a nonzero integer `n`: multiply by `−e_l/n` on the left.
fn left_div_unit(x: &AlgebraElement, n: i64, l: usize) -> AlgebraElement {
    let sig = x.sig();
    if l == 0 {
        return x.scale(&Scalar::from_rational(rat(1, n)));
    }
    let inv = AlgebraElement::basis(sig, l).scale(&Scalar::from_rational(rat(-1, n)));
    inv.mul(x).expect("same signature")
}

/// Coordinates recovered through the identities; the real part of each
/// recovered element is returned and checked against the stored coordinates.
pub fn coord_extract(a: &AlgebraElement) -> Result<Vec<Scalar>> {
    let recovered = extract_elements(a)?;
    let mut out = Vec::with_capacity(recovered.len());
    for (l, r) in recovered.iter().enumerate() {
        if !r.is_real() {
            return Err(Error::Internal(format!("coordinate {l} did not come out real: {r}")));
        }
        out.push(r.coord(0).clone());
    }
    if out.as_slice() != a.coords() {
        return Err(Error::Internal("coordinate extraction disagrees with stored coordinates".into()));
    }
    Ok(out)
}

/// Each coordinate as an algebra element `a_l·1`, computed by the identities.
pub fn extract_elements(a: &AlgebraElement) -> Result<Vec<AlgebraElement>> {
    match a.sig().kind() {
        SigKind::Quaternion => Ok(quaternion(a)),
        SigKind::Octonion => Ok(octonion(a)),
        SigKind::Generic => Err(Error::NoInvolution(a.sig().name().to_string())),
    }
}

fn quaternion(q: &AlgebraElement) -> Vec<AlgebraElement> {
    let s: Vec<AlgebraElement> = (1..4).map(|h| sandwich(q, h)).collect();
    let mut out = Vec::with_capacity(4);
    // 4q_0 = q − Σ e_h q e_h
    let mut acc = q.clone();
    for x in &s {
        acc = acc.sub(x).unwrap();
    }
    out.push(left_div_unit(&acc, 4, 0));
    // 4e_l q_l = q − e_l q e_l + Σ_{h≠l} e_h q e_h
    for l in 1..4 {
        let mut acc = q.clone();
        for (h, x) in s.iter().enumerate() {
            acc = if h + 1 == l { acc.sub(x).unwrap() } else { acc.add(x).unwrap() };
        }
        out.push(left_div_unit(&acc, 4, l));
    }
    out
}

fn octonion(o: &AlgebraElement) -> Vec<AlgebraElement> {
    let s: Vec<AlgebraElement> = (1..8).map(|h| sandwich(o, h)).collect();
    let total = s.iter().fold(AlgebraElement::zero(o.sig()), |acc, x| acc.add(x).unwrap());
    let five = Scalar::from_i64(5);
    let mut out = Vec::with_capacity(8);
    out.push(left_div_unit(&o.scale(&five).sub(&total).unwrap(), 12, 0));
    for l in 1..8 {
        // o − 5·e_l o e_l + (S − e_l o e_l) = o + S − 6·e_l o e_l
        let x = &s[l - 1];
        let acc = o.add(&total).unwrap().sub(&x.scale(&Scalar::from_i64(6))).unwrap();
        out.push(left_div_unit(&acc, 12, l));
    }
    out
}

/// `(o − Σ_h e_h o e_h) − 8·o_0`, which vanishes only when `Im(o) = 0`.
pub fn literal_octonion_identity_residual(o: &AlgebraElement) -> Result<AlgebraElement> {
    if o.sig().kind() != SigKind::Octonion {
        return Err(Error::Invalid("octonion element expected".into()));
    }
    let mut acc = o.clone();
    for h in 1..8 {
        acc = acc.sub(&sandwich(o, h))?;
    }
    let real = AlgebraElement::real(o.sig(), o.coord(0).mul(&Scalar::from_i64(8)));
    acc.sub(&real)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSignature;

    #[test]
    fn quaternion_real_part() {
        let h = AlgebraSignature::quaternion();
        let q = AlgebraElement::parse(&h, "1 + 2i + 3j + 4k").unwrap();
        let c = coord_extract(&q).unwrap();
        assert_eq!(c, q.coords());
        assert_eq!(c[0], Scalar::one());
        let z = AlgebraElement::zero(&h);
        assert!(coord_extract(&z).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn octonion_basis_element() {
        let o = AlgebraSignature::octonion();
        let e5 = AlgebraElement::basis(&o, 5);
        let c = coord_extract(&e5).unwrap();
        let expect: Vec<Scalar> = [0, 0, 0, 0, 0, 1, 0, 0].iter().map(|&n| Scalar::from_i64(n)).collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn literal_octonion_identity_fails_off_the_reals() {
        let o = AlgebraSignature::octonion();
        let x = AlgebraElement::parse(&o, "2 + e3").unwrap();
        let r = literal_octonion_identity_residual(&x).unwrap();
        // residual is -4·Im(o)
        assert_eq!(r, AlgebraElement::parse(&o, "-4e3").unwrap());
        let real = AlgebraElement::parse(&o, "7/3").unwrap();
        assert!(literal_octonion_identity_residual(&real).unwrap().is_zero());
    }
}
