//! Finite-dimensional algebras given by structure constants.

use std::fmt;
use std::sync::{Arc, LazyLock};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::{int, Rational};

/// Which built-in algebra a signature is, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigKind {
    Quaternion,
    Octonion,
    Generic,
}

/// `e_i · e_j = Σ_l c[i][j][l] e_l`, stored sparsely; `e_0` is the identity.
#[derive(Debug, PartialEq)]
pub struct AlgebraSignature {
    name: String,
    kind: SigKind,
    basis_names: Vec<String>,
    table: Vec<Vec<Vec<(usize, Rational)>>>,
}

/// Octonion triples with `e_i e_j = e_k`.
pub const OCTONION_TRIPLES: [[usize; 3]; 7] =
    [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];

static QUATERNION: LazyLock<Arc<AlgebraSignature>> = LazyLock::new(|| {
    // i j = k, j k = i, k i = j, squares -1
    let cyc = [[1, 2, 3], [2, 3, 1], [3, 1, 2]];
    Arc::new(from_triples("quaternion", SigKind::Quaternion, &["1", "i", "j", "k"], &cyc))
});

static OCTONION: LazyLock<Arc<AlgebraSignature>> = LazyLock::new(|| {
    let names = ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];
    // each listed triple is cyclic: ijk, jki, kij all have sign +1
    let mut cyc = Vec::new();
    for [a, b, c] in OCTONION_TRIPLES {
        cyc.extend([[a, b, c], [b, c, a], [c, a, b]]);
    }
    Arc::new(from_triples("octonion", SigKind::Octonion, &names, &cyc))
});

fn from_triples(name: &str, kind: SigKind, names: &[&str], cyc: &[[usize; 3]]) -> AlgebraSignature {
    let k = names.len();
    let mut table = vec![vec![Vec::new(); k]; k];
    for (j, row) in table[0].iter_mut().enumerate() {
        row.push((j, Rational::one()));
    }
    for i in 1..k {
        table[i][0].push((i, Rational::one()));
        table[i][i].push((0, -Rational::one()));
    }
    for &[a, b, c] in cyc {
        table[a][b] = vec![(c, Rational::one())];
        table[b][a] = vec![(c, -Rational::one())];
    }
    AlgebraSignature { name: name.into(), kind, basis_names: names.iter().map(|s| s.to_string()).collect(), table }
}

impl AlgebraSignature {
    pub fn quaternion() -> Arc<AlgebraSignature> {
        QUATERNION.clone()
    }

    pub fn octonion() -> Arc<AlgebraSignature> {
        OCTONION.clone()
    }

    /// Accepts `quaternion`/`H` and `octonion`/`O` (case-insensitive).
    pub fn by_name(name: &str) -> Result<Arc<AlgebraSignature>> {
        match name.to_ascii_lowercase().as_str() {
            "quaternion" | "quaternions" | "h" => Ok(Self::quaternion()),
            "octonion" | "octonions" | "o" => Ok(Self::octonion()),
            _ => Err(Error::Invalid(format!("unknown algebra signature `{name}`"))),
        }
    }

    /// Generic signature from a dense `k×k×k` array; `e_0` must be a two-sided identity.
    pub fn new(name: &str, basis_names: Vec<String>, constants: Vec<Vec<Vec<Rational>>>) -> Result<Arc<Self>> {
        let k = basis_names.len();
        if k == 0 {
            return Err(Error::Invalid("empty basis".into()));
        }
        let shape_ok = constants.len() == k && constants.iter().all(|r| r.len() == k && r.iter().all(|c| c.len() == k));
        if !shape_ok {
            return Err(Error::Invalid(format!("structure constants must have shape {k}x{k}x{k}")));
        }
        let delta = |a: usize, b: usize| if a == b { Rational::one() } else { Rational::zero() };
        for j in 0..k {
            for l in 0..k {
                if constants[0][j][l] != delta(j, l) || constants[j][0][l] != delta(j, l) {
                    return Err(Error::Invalid("e_0 is not a two-sided identity".into()));
                }
            }
        }
        let table = constants
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(l, v)| (l, v.clone())).collect())
                    .collect()
            })
            .collect();
        Ok(Arc::new(AlgebraSignature { name: name.into(), kind: SigKind::Generic, basis_names, table }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SigKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    /// Nonzero entries of `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    /// Dense constant `c[i][j][l]`.
    pub fn constant(&self, i: usize, j: usize, l: usize) -> Rational {
        self.table[i][j].iter().find(|(m, _)| *m == l).map(|(_, v)| v.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn has_involution(&self) -> bool {
        self.kind != SigKind::Generic
    }

    pub fn same_as(&self, o: &AlgebraSignature) -> bool {
        std::ptr::eq(self, o) || self == o
    }

    /// Octonion sign `ε_ijk` for imaginary indices `1..=7`.
    pub fn epsilon(i: usize, j: usize, k: usize) -> i64 {
        let o = Self::octonion();
        let c = o.constant(i, j, k);
        if c.is_zero() {
            0
        } else if c == int(1) {
            1
        } else {
            -1
        }
    }

    pub fn to_json(&self) -> Value {
        let dense: Vec<Vec<Vec<String>>> = (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| (0..self.dim()).map(|l| crate::scalars::format_rational(&self.constant(i, j, l))).collect())
                    .collect()
            })
            .collect();
        json!({ "name": self.name, "basis": self.basis_names, "constants": dense })
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_table() {
        let h = AlgebraSignature::quaternion();
        assert_eq!(h.product(1, 2), &[(3, int(1))]);
        assert_eq!(h.product(2, 1), &[(3, int(-1))]);
        for i in 1..4 {
            assert_eq!(h.product(i, i), &[(0, int(-1))]);
        }
    }

    #[test]
    fn octonion_epsilon_is_totally_antisymmetric() {
        let mut plus = 0;
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    let e = AlgebraSignature::epsilon(i, j, k);
                    assert_eq!(e, -AlgebraSignature::epsilon(j, i, k));
                    assert_eq!(e, AlgebraSignature::epsilon(j, k, i));
                    if e == 1 {
                        plus += 1;
                    }
                }
            }
        }
        // 7 triples, 3 cyclic rotations each
        assert_eq!(plus, 21);
        for [a, b, c] in OCTONION_TRIPLES {
            assert_eq!(AlgebraSignature::epsilon(a, b, c), 1);
        }
    }

    #[test]
    fn generic_signature_requires_identity() {
        let one = || vec![vec![vec![int(1)]]];
        assert!(AlgebraSignature::new("R", vec!["1".into()], one()).is_ok());
        let bad = vec![vec![vec![int(2)]]];
        assert!(AlgebraSignature::new("R", vec!["1".into()], bad).is_err());
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(AlgebraSignature::by_name("H").unwrap().dim(), 4);
        assert_eq!(AlgebraSignature::by_name("octonion").unwrap().dim(), 8);
        assert!(AlgebraSignature::by_name("sedenion").is_err());
    }
}
