//! Symbolic arithmetic over generic integers.
//!
//! A generic integer is a binary expansion whose digits are elements of the
//! free Boolean ring over variables `x0, x1, ...`. Instantiating the variables
//! turns it into an ordinary integer, and every arithmetic operation here
//! commutes with instantiation. On top of that ring sit lopsided division,
//! the Boolean factoring reductions (`bf` and `mbf`) and a solver for
//! scarcely satisfiable Boolean equations.

pub mod boolring;
pub mod dyadic;
pub mod error;
pub mod factor;
pub mod generic;
pub mod satsolve;
pub mod trace;

pub use boolring::{BoolExpr, Instantiation, Term, VarSet};
pub use dyadic::DyadicInt;
pub use error::{Error, Result};
pub use generic::GenericInt;
pub use trace::{DivisionStep, DivisionTrace};

/// Whether the high end of a value is meaningful.
///
/// `Exact` values carry a tail that repeats forever above the stored width,
/// `Truncated` values are residues modulo `2^width`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Truncated,
}
