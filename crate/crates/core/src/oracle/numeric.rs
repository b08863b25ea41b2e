//! Floating-point order-of-accuracy check: substitute random matrices for the
//! generators and measure how fast the truncated product converges.

use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{OracleError, Residual, VerificationReport};
use crate::freealg::AssocPoly;
use crate::zassenhaus::{series, PathChoice};

/// Residuals below this are round-off; no order can be read from them.
pub const ROUNDOFF_FLOOR: f64 = 100.0 * f64::EPSILON;

/// Half-width of the accepted band around the expected order `K + 1`.
pub const ORDER_TOLERANCE: f64 = 0.5;

/// `n` square matrices of dimension `dim` standing in for `X1..Xn`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericMatrixSet {
    pub matrices: Vec<DMatrix<f64>>,
    pub seed: Option<u64>,
}

impl NumericMatrixSet {
    /// Entries uniform in `[-1/2, 1/2]`, deterministic in `(n, dim, seed)`.
    pub fn random(n: usize, dim: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let matrices = (0..n)
            .map(|_| DMatrix::from_fn(dim, dim, |_, _| rng.gen_range(-0.5..=0.5)))
            .collect();
        NumericMatrixSet {
            matrices,
            seed: Some(seed),
        }
    }

    pub fn from_matrices(matrices: Vec<DMatrix<f64>>) -> Result<Self, OracleError> {
        let dim = matrices.first().map(|m| m.nrows()).unwrap_or(0);
        if dim == 0
            || matrices
                .iter()
                .any(|m| m.nrows() != dim || m.ncols() != dim)
        {
            return Err(OracleError::InvalidArgument(
                "need at least one square matrix, all of one size".into(),
            ));
        }
        Ok(NumericMatrixSet {
            matrices,
            seed: None,
        })
    }

    pub fn n(&self) -> usize {
        self.matrices.len()
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].nrows()
    }

    /// Substitutes the matrices into a polynomial (`X_i -> matrices[i-1]`).
    pub fn evaluate(&self, p: &AssocPoly) -> Result<DMatrix<f64>, OracleError> {
        if p.ctx().n() != self.n() {
            return Err(OracleError::InvalidArgument(format!(
                "polynomial in {} generators, {} matrices supplied",
                p.ctx().n(),
                self.n()
            )));
        }
        let dim = self.dim();
        let mut out = DMatrix::zeros(dim, dim);
        for (word, coeff) in p.terms() {
            let mut product = DMatrix::identity(dim, dim);
            for &letter in word.letters() {
                product *= &self.matrices[letter as usize - 1];
            }
            let c = coeff.to_f64().unwrap_or(f64::NAN);
            out += product * c;
        }
        Ok(out)
    }
}

/// Frobenius norm of `exp(t sum X_i) - prod exp(t X_i) prod_k exp(t^k W_k)`
/// for each `t`. `ws[i]` is `W_{i+2}`.
pub fn residuals(
    matrices: &NumericMatrixSet,
    ws: &[AssocPoly],
    t_values: &[f64],
) -> Result<Vec<Residual>, OracleError> {
    let dim = matrices.dim();
    let generator_sum = matrices
        .matrices
        .iter()
        .fold(DMatrix::zeros(dim, dim), |acc, m| acc + m);
    let w_values: Vec<DMatrix<f64>> = ws
        .iter()
        .map(|w| matrices.evaluate(w))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(t_values.len());
    for &t in t_values {
        let lhs = (&generator_sum * t).exp();
        let mut rhs = DMatrix::identity(dim, dim);
        for x in &matrices.matrices {
            rhs *= (x * t).exp();
        }
        for (offset, w) in w_values.iter().enumerate() {
            let power = t.powi(offset as i32 + 2);
            rhs *= (w * power).exp();
        }
        out.push(Residual {
            t,
            norm: (lhs - rhs).norm(),
        });
    }
    Ok(out)
}

fn check_t_values(t_values: &[f64]) -> Result<Vec<f64>, OracleError> {
    if t_values.len() < 2 || t_values.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
        return Err(OracleError::InvalidArgument(
            "need at least two positive t values".into(),
        ));
    }
    let mut sorted = t_values.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let ratio = sorted[0] / sorted[1];
    let geometric = sorted
        .windows(2)
        .all(|pair| ((pair[0] / pair[1]) / ratio - 1.0).abs() < 1e-9);
    if ratio <= 1.0 || !geometric {
        return Err(OracleError::InvalidArgument(
            "t values must be distinct and in geometric progression".into(),
        ));
    }
    Ok(sorted)
}

/// Order check against supplied exponents. Passes when the order read off
/// the two smallest `t` lies within `K + 1 +- 0.5`; residuals at round-off
/// level make the report inconclusive (and not failing).
pub fn numeric_order_check_with(
    matrices: &NumericMatrixSet,
    max_degree: usize,
    ws: &[AssocPoly],
    t_values: &[f64],
) -> Result<VerificationReport, OracleError> {
    let t_values = check_t_values(t_values)?;
    if ws.len() + 1 != max_degree.max(1) {
        return Err(OracleError::InvalidArgument(format!(
            "expected exponents W_2..W_{max_degree}, got {}",
            ws.len()
        )));
    }
    let residuals = residuals(matrices, ws, &t_values)?;
    let expected = (max_degree + 1) as f64;
    let finest = &residuals[residuals.len() - 2..];
    let inconclusive = finest.iter().any(|r| r.norm < ROUNDOFF_FLOOR);
    let observed = (!inconclusive)
        .then(|| (finest[0].norm / finest[1].norm).ln() / (finest[0].t / finest[1].t).ln());
    let monotone = residuals
        .windows(2)
        .all(|pair| pair[1].norm <= pair[0].norm);
    let in_band = observed.is_some_and(|p| (p - expected).abs() <= ORDER_TOLERANCE);

    let mut report = VerificationReport::numeric(matrices.n(), max_degree);
    report.pass = inconclusive || in_band;
    report.residuals = residuals;
    report.observed_order = observed;
    report.expected_order = Some(expected);
    report.inconclusive = Some(inconclusive);
    report.monotone = Some(monotone);
    report.norm_kind = Some("frobenius".into());
    report.dim = Some(matrices.dim());
    report.seed = matrices.seed;
    Ok(report)
}

/// Order check of the engine's `W_2..W_K` on random `dim x dim` matrices.
/// `K = 1` checks the bare product `exp(tX1)...exp(tXn)`.
pub fn numeric_order_check(
    n: usize,
    max_degree: usize,
    dim: usize,
    seed: u64,
    t_values: &[f64],
) -> Result<VerificationReport, OracleError> {
    if dim < 2 {
        return Err(OracleError::InvalidArgument(format!(
            "matrix dimension must be >= 2 (got {dim})"
        )));
    }
    if n == 0 || max_degree == 0 {
        return Err(OracleError::InvalidArgument(
            "n and max degree must be positive".into(),
        ));
    }
    let ws = if max_degree >= 2 {
        series(n, max_degree, PathChoice::Generic)?.polys()
    } else {
        Vec::new()
    };
    let matrices = NumericMatrixSet::random(n, dim, seed);
    numeric_order_check_with(&matrices, max_degree, &ws, t_values)
}
