//! Real quadratic factors `t² − s·t + n` of a square-free rational polynomial.
//!
//! For the roots `z_1..z_d` of `h`, every unordered pair `{z_i, z_j}` gives
//! `σ = (z_i + z_j) + λ·z_i z_j`. Their power sums come from those of `h`, so
//! the pair polynomial `M(T) = Π (T − σ)` is exact. When `M` is square-free,
//! a real `σ` belongs to a pair closed under conjugation, and
//! `u = F_u(σ) / M'(σ)` with `F_u = Σ_P u_P Π_{Q≠P} (T − σ_Q)` recovers
//! `u ∈ {z_i + z_j, z_i z_j}`.
//!
//! Everything is kept as integer polynomials modulo the monic integer `M`
//! with one common denominator `D`: `s = S/D`, `n = N/D`. Computations done
//! once modulo `M` are valid at every root, and each real root `θ` only costs
//! sign tests.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::algebraic::RootRepr;
use crate::scalars::isolate::{isolate_squarefree, RootBox};
use crate::scalars::poly::zpoly;
use crate::scalars::{FieldElem, NumberField, QPoly, Rational, Scalar};

/// Integer polynomial reduced modulo a monic integer polynomial.
pub(crate) type ZP = Vec<BigInt>;

/// Arithmetic in `ℤ[T] / (M)` for monic `M`.
#[derive(Clone, Debug)]
pub(crate) struct ModRing {
    m: Vec<BigInt>,
}

impl ModRing {
    fn deg(&self) -> usize {
        self.m.len() - 1
    }

    pub fn reduce(&self, mut p: Vec<BigInt>) -> ZP {
        let d = self.deg();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let off = p.len() - d;
            for (k, mk) in self.m[..d].iter().enumerate() {
                p[off + k] -= &top * mk;
            }
        }
        zpoly::trim(p)
    }

    pub fn constant(&self, c: BigInt) -> ZP {
        zpoly::trim(vec![c])
    }

    pub fn add(&self, a: &ZP, b: &ZP) -> ZP {
        let mut out = vec![BigInt::zero(); a.len().max(b.len())];
        for (k, c) in a.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in b.iter().enumerate() {
            out[k] += c;
        }
        zpoly::trim(out)
    }

    pub fn neg(&self, a: &ZP) -> ZP {
        a.iter().map(|c| -c).collect()
    }

    pub fn sub(&self, a: &ZP, b: &ZP) -> ZP {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &ZP, b: &ZP) -> ZP {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }

    pub fn scale(&self, a: &ZP, c: &BigInt) -> ZP {
        zpoly::trim(a.iter().map(|x| x * c).collect())
    }
}

/// A real root `θ` of `M`, either rational or generating a number field.
#[derive(Clone, Debug)]
pub(crate) enum Theta {
    Rat(Rational),
    Field(Arc<NumberField>),
}

impl Theta {
    /// Exact sign of `p(θ)`.
    pub fn sign(&self, p: &ZP) -> Ordering {
        if p.is_empty() {
            return Ordering::Equal;
        }
        match self {
            Theta::Rat(r) => zpoly::sign_at(p, r),
            Theta::Field(f) => f.sign_at_theta(&QPoly::from_ints(p)),
        }
    }

    /// `num(θ) / den(θ)`.
    pub fn scalar(&self, num: &ZP, den: &ZP) -> Result<Scalar> {
        match self {
            Theta::Rat(r) => {
                let d = QPoly::from_ints(den).eval(r);
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::from_rational(QPoly::from_ints(num).eval(r) / d))
            }
            Theta::Field(f) => Ok(Scalar::from_field_elem(FieldElem::new(f, QPoly::from_ints(num), QPoly::from_ints(den))?)),
        }
    }
}

/// The pair data of one square-free polynomial.
#[derive(Clone, Debug)]
pub(crate) struct PairSystem {
    pub ring: ModRing,
    pub s: ZP,
    pub n: ZP,
    pub d: ZP,
    /// Real roots of `M` whose pair is a conjugate pair of non-real roots.
    pub thetas: Vec<Theta>,
}

const LAMBDAS: [i64; 12] = [0, 1, -1, 2, -2, 3, -3, 5, -5, 7, 11, -13];

fn to_int(r: &Rational) -> BigInt {
    debug_assert!(r.is_integer());
    r.to_integer()
}

/// Pair system of a square-free polynomial of degree at least 2.
pub(crate) fn pair_system(h: &QPoly) -> Result<Option<PairSystem>> {
    let d = h.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 2 {
        return Ok(None);
    }
    // H(u) = L^{d-1} h(u / L) is monic with integer coefficients; u = L z
    let ints = h.to_primitive_ints();
    let l = ints[d].clone();
    let big_h = QPoly::from_ints(&ints).scale_var(&Rational::from_integer(l.clone()).recip()).monic();
    let n_pairs = d * (d - 1) / 2;
    let ps = big_h.power_sums(2 * n_pairs + 2);
    for &lam in &LAMBDAS {
        let data = pair_sums(&ps, n_pairs, &Rational::from_integer(lam.into()));
        let m = QPoly::from_power_sums(n_pairs, &data.sigma);
        let m_int: Vec<BigInt> = m.coeffs().iter().map(to_int).collect();
        if !zpoly::certify_squarefree(&m_int) && !QPoly::gcd(&m, &m.derivative()).is_constant() {
            continue;
        }
        let ring = ModRing { m: m_int.clone() };
        let f_s: ZP = rur_numerator(&m, &data.sum).iter().map(to_int).collect();
        let f_n: ZP = rur_numerator(&m, &data.prod).iter().map(to_int).collect();
        let dm: ZP = m.derivative().coeffs().iter().map(to_int).collect();
        // s = F_s / (L·M'), n = F_n / (L²·M')
        let s = ring.scale(&zpoly::trim(f_s), &l);
        let n = ring.reduce(f_n);
        let dd = ring.scale(&ring.reduce(dm), &(&l * &l));
        // n − s²/4 = (4·N·D − S²) / (4·D²)
        let disc = ring.sub(&ring.scale(&ring.mul(&n, &dd), &BigInt::from(4)), &ring.mul(&s, &s));
        let mut thetas = Vec::new();
        for b in isolate_squarefree(&m_int) {
            let t = match b {
                RootBox::Exact(r) => Theta::Rat(r),
                RootBox::Open(lo, hi) => Theta::Field(NumberField::new(m.clone(), RootRepr::from_isolated(m_int.clone(), lo, hi))),
            };
            if t.sign(&disc) == Ordering::Greater {
                thetas.push(t);
            }
        }
        return Ok(Some(PairSystem { ring, s, n, d: dd, thetas }));
    }
    Err(Error::Internal("no separating linear form found for the root pairs".into()))
}

/// A conjugate pair: `s = z + z̄`, `n = z·z̄`, with `n − s²/4 > 0`.
#[derive(Clone, Debug)]
pub struct PairRoot {
    pub s: Scalar,
    pub n: Scalar,
}

/// `(z + z̄, z z̄)` for every conjugate pair of non-real roots of a square-free `h`.
pub fn conjugate_pairs(h: &QPoly) -> Result<Vec<PairRoot>> {
    let Some(sys) = pair_system(h)? else { return Ok(vec![]) };
    sys.thetas
        .iter()
        .map(|t| Ok(PairRoot { s: t.scalar(&sys.s, &sys.d)?, n: t.scalar(&sys.n, &sys.d)? }))
        .collect()
}

struct PairSums {
    /// `Σ_P σ_P^k` for `k = 0..=N`.
    sigma: Vec<Rational>,
    /// `Σ_P (z_i + z_j) σ_P^k` and `Σ_P z_i z_j σ_P^k` for `k = 0..N`.
    sum: Vec<Rational>,
    prod: Vec<Rational>,
}

/// Sums over unordered pairs from the power sums `ps` of the roots.
fn pair_sums(ps: &[Rational], n: usize, lam: &Rational) -> PairSums {
    // for symmetric f = Σ c_ab X^a Y^b: Σ_{i<j} f = Σ c_ab (P_a P_b − P_{a+b}) / 2
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mono = |a: usize, b: usize| -> Rational { (&ps[a] * &ps[b] - &ps[a + b]) * &half };
    // dense bivariate polynomial σ^k, coefficient [a][b] of X^a Y^b
    let mut pow: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    let (mut sigma, mut sum, mut prod) = (Vec::new(), Vec::new(), Vec::new());
    for k in 0..=n {
        let (mut s, mut su, mut pr) = (Rational::zero(), Rational::zero(), Rational::zero());
        for (a, row) in pow.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                s += c * mono(a, b);
                if k < n {
                    su += c * (mono(a + 1, b) + mono(a, b + 1));
                    pr += c * mono(a + 1, b + 1);
                }
            }
        }
        sigma.push(s);
        if k < n {
            sum.push(su);
            prod.push(pr);
            pow = times_sigma(&pow, lam);
        }
    }
    PairSums { sigma, sum, prod }
}

/// `f · (X + Y + λXY)`.
fn times_sigma(f: &[Vec<Rational>], lam: &Rational) -> Vec<Vec<Rational>> {
    let k = f.len();
    let mut out = vec![vec![Rational::zero(); k + 1]; k + 1];
    for (a, row) in f.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[a + 1][b] += c;
            out[a][b + 1] += c;
            if !lam.is_zero() {
                out[a + 1][b + 1] += c * lam;
            }
        }
    }
    out
}

/// Coefficients of `F(T) = Σ_j T^j Σ_{m>j} M_m t_{m−1−j}` from the weighted power sums `t_k`.
fn rur_numerator(m: &QPoly, t: &[Rational]) -> Vec<Rational> {
    let n = m.degree().unwrap();
    let mut c = vec![Rational::zero(); n];
    for (j, slot) in c.iter_mut().enumerate() {
        for mm in j + 1..=n {
            *slot += m.coeff(mm) * &t[mm - 1 - j];
        }
    }
    c
}

/// Clears denominators: the integer multiple of `xs` by the lcm of their denominators.
pub(crate) fn clear_denominators(xs: &[Rational]) -> Vec<BigInt> {
    let l = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    xs.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(c: &[i64]) -> Vec<(f64, f64)> {
        let mut v: Vec<(f64, f64)> = conjugate_pairs(&QPoly::from_i64(c)).unwrap().iter().map(|p| (p.s.to_f64(), p.n.to_f64())).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn single_pair() {
        assert_eq!(pairs(&[1, 0, 1]), vec![(0.0, 1.0)]);
        assert_eq!(pairs(&[5, -2, 1]), vec![(2.0, 5.0)]);
        assert_eq!(pairs(&[5, -4, 4]), vec![(1.0, 1.25)]);
        assert!(pairs(&[-1, 0, 1]).is_empty());
    }

    #[test]
    fn two_pairs_and_real_roots() {
        // (t² + 1)(t² − 2t + 5)(t − 3)
        let p = &(&QPoly::from_i64(&[1, 0, 1]) * &QPoly::from_i64(&[5, -2, 1])) * &QPoly::from_i64(&[-3, 1]);
        let ints: Vec<i64> = p.coeffs().iter().map(|c| c.numer().try_into().unwrap()).collect();
        assert_eq!(pairs(&ints), vec![(0.0, 1.0), (2.0, 5.0)]);
    }

    #[test]
    fn symmetric_roots_need_a_shifted_form() {
        // t⁴ + 1 has z + w = 0 for two different pairs
        let v = pairs(&[1, 0, 0, 0, 1]);
        assert_eq!(v.len(), 2);
        let r = std::f64::consts::SQRT_2;
        assert!((v[0].0 + r).abs() < 1e-12 && (v[0].1 - 1.0).abs() < 1e-12);
        assert!((v[1].0 - r).abs() < 1e-12);
    }

    #[test]
    fn irreducible_quartic() {
        // t⁴ + t + 1: two conjugate pairs with irrational data
        let v = pairs(&[1, 1, 0, 0, 1]);
        assert_eq!(v.len(), 2);
        let prod: f64 = v.iter().map(|p| p.1).product();
        assert!((prod - 1.0).abs() < 1e-9);
        let s: f64 = v.iter().map(|p| p.0).sum();
        assert!(s.abs() < 1e-9);
    }

    #[test]
    fn modular_ring() {
        // ℤ[T]/(T² + 1): T·T = −1
        let r = ModRing { m: vec![BigInt::one(), BigInt::zero(), BigInt::one()] };
        let t = vec![BigInt::zero(), BigInt::one()];
        assert_eq!(r.mul(&t, &t), vec![BigInt::from(-1)]);
        assert!(r.sub(&t, &t).is_empty());
    }
}
