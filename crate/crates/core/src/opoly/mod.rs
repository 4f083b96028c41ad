//! Ordered polynomials: variables on the left in a fixed order, coefficients on the right.

mod ordered;
mod univar;

pub use ordered::{default_names, Monomial, OrderedPoly};
pub use univar::{companion, conv_mul, reduce_mod_sphere, ScalarPoly, UnivarPoly};
