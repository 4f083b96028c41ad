//! Exact quaternion and octonion algebra over the real algebraic numbers.

pub mod algebra;
pub mod error;
pub mod formula;
pub mod geometry;
pub mod lower;
pub mod opoly;
pub mod random;
pub mod roots;
pub mod scalars;
pub mod selftest;

pub use error::{Error, Result};
pub use scalars::Scalar;
