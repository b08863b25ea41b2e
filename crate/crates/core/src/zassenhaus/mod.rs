//! The recursive Zassenhaus engine.
//!
//! With `R_1(t) = exp(-t Xn) ... exp(-t X1) exp(t (X1 + ... + Xn))` and
//! `R_m(t) = exp(-t^m W_m) R_{m-1}(t)`, the logarithmic derivatives
//! `F_m(t) = R_m'(t) R_m(t)^{-1} = sum_k f_{m,k} t^k` satisfy a recursion in
//! `m`, and `f_{m,m} = (m+1) W_{m+1}` reads off the exponents.
//!
//! All values are stored as associative polynomials; commutator forms are
//! renderings only.

mod engine;
mod expanded;
mod f1k;
mod series;

use thiserror::Error;

use crate::freealg::AlgebraError;
use crate::lieform::LieError;

pub use engine::EngineCtx;
pub use expanded::{expanded_formula, AdTerm};
pub use f1k::{f1k_comm, f1k_comm_by_composition, f1k_direct};
pub use series::{closed_form, series, PathChoice, SeriesTerm, ZassenhausSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degree {degree} exceeds the truncation degree {max_degree}")]
    DegreeOverflow { degree: usize, max_degree: usize },
    #[error("internal error: computation paths disagree for W_{m}")]
    PathDisagreement { m: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lie(#[from] LieError),
}
