//! Lowering to real arithmetic: coordinates, SMT-LIB, exact decision on a
//! fragment, and realization of real algebraic sets.

mod decide;
mod formula;
mod poly;
mod realize;
mod smt;

pub use decide::{decide, eliminate_universal, solve_exists};
pub use formula::{eval_real, lower_formula, lower_query_term, lower_term, LoweredQuery, RealFormula};
pub use poly::{RealPoly, RealPolyDisplay};
pub use realize::{coordinate_term, realize, Realization, RealizeMode};
pub use smt::{emit_smt, SolverConfig, SolverVerdict, SOLVER_ENV};
