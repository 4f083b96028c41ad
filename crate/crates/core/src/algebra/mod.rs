//! Algebras from structure constants, with the quaternions and octonions built in.

mod element;
mod extract;
mod signature;

pub use element::AlgebraElement;
pub use extract::{coord_extract, extract_elements, literal_octonion_identity_residual};
pub use signature::{AlgebraSignature, SigKind, OCTONION_TRIPLES};

use std::sync::Arc;

use crate::error::Result;
use crate::scalars::Scalar;

/// Free-function form of [`AlgebraElement::mul`].
pub fn alg_mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.mul(b)
}

/// Free-function form of [`AlgebraElement::inv`].
pub fn alg_inv(a: &AlgebraElement) -> Result<AlgebraElement> {
    a.inv()
}

/// Elements `c·1` for a scalar `c`.
pub fn real_element(sig: &Arc<AlgebraSignature>, c: Scalar) -> AlgebraElement {
    AlgebraElement::real(sig, c)
}
