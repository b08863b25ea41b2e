//! Independent checks of engine output: the peel-off oracle, the exact
//! truncated product identity, and a numeric order-of-accuracy check.

mod exact;
mod numeric;
mod report;

use thiserror::Error;

use crate::freealg::{AlgebraError, AssocPoly};
use crate::zassenhaus::EngineError;

pub use exact::{exact_identity_check, ordered_product, peel_oracle};
pub use numeric::{
    numeric_order_check, numeric_order_check_with, residuals, NumericMatrixSet, ORDER_TOLERANCE,
    ROUNDOFF_FLOOR,
};
pub use report::{Residual, VerificationMode, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Compares engine exponents with the peel-off oracle term by term.
pub fn oracle_comparison(
    n: usize,
    max_degree: usize,
    engine_ws: &[AssocPoly],
) -> Result<VerificationReport, OracleError> {
    let reference = peel_oracle(n, max_degree)?;
    if reference.len() != engine_ws.len() {
        return Err(OracleError::InvalidArgument(format!(
            "expected {} exponents, got {}",
            reference.len(),
            engine_ws.len()
        )));
    }
    let mismatched = reference
        .iter()
        .zip(engine_ws)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(offset, _)| offset + 2)
        .collect();
    Ok(VerificationReport::oracle(n, max_degree, mismatched))
}
