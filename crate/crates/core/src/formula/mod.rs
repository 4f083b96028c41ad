//! First-order formulas over an algebra: syntax, expansion, rewriting to
//! ordered form and exact evaluation.

mod ast;
mod eval;
mod normalize;
mod parser;
mod rewrite;

pub use ast::{Formula, FormulaDisplay, Query, Term, TermDisplay, VarTable};
pub use normalize::{
    build_term, expand, expand_atom, is_ordered, mono_is_ordered, monos_to_ordered, parse_ordered_poly, to_ordered_term,
    MonoTree, SignedMono,
};
pub use parser::{parse_query, parse_query_with, parse_term};
pub use rewrite::{is_ordered_query, replay, to_ordered, Phase, RewriteStep, RewriteTrace};
pub use eval::{eval_formula, eval_term};
