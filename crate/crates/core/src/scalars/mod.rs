//! Exact arithmetic over the rationals and the real algebraic numbers.

pub mod algebraic;
pub mod isolate;
pub mod poly;
pub mod rational;
mod scalar;

pub use algebraic::{FieldElem, Interval, NumberField, RootRepr};
pub use poly::QPoly;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use scalar::{isolate_real_roots, scalar_arith, scalar_compare, ArithOp, RealAlgebraic, Scalar};
