//! Long commutators with multiplicities, integer compositions, and the
//! passage between commutator form and the associative expansion.

mod comm;
mod composition;
mod dsw;
mod render;

use thiserror::Error;

use crate::freealg::AlgebraError;

pub use comm::{left_normed_expansion, CommTerm, LieExpr};
pub use composition::{compositions, Composition};
pub use dsw::{dsw_project, dynkin_form, is_lie};
pub use render::{parse, render, RenderFormat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("compositions need a positive weight, got {0}")]
    InvalidWeight(usize),
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("generator index {0} is not positive")]
    InvalidIndex(u8),
    #[error("generator X{0} given multiplicity zero")]
    ZeroMultiplicity(u8),
    #[error("bracket has no letters")]
    EmptyBracket,
    #[error("input is not homogeneous of positive degree")]
    NotHomogeneous,
    #[error("polynomial is not a Lie element")]
    NotLie,
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
