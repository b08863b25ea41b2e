use super::{OracleError, VerificationReport};
use crate::freealg::{format_rational, AlgebraCtx, AssocPoly};

/// Recomputes `W_2..W_K` by peeling: starting from
/// `R = exp(-Xn) ... exp(-X1) exp(X1 + ... + Xn)`, each `W_m` is the
/// degree-`m` part of `log R`, after which `R <- exp(-W_m) R`.
///
/// Uses only truncated exp/log, never the recursive engine.
pub fn peel_oracle(n: usize, max_degree: usize) -> Result<Vec<AssocPoly>, OracleError> {
    if max_degree < 2 {
        return Err(OracleError::InvalidArgument(format!(
            "max degree must be >= 2 (got {max_degree})"
        )));
    }
    let ctx = AlgebraCtx::new(n, max_degree)?;
    let mut residual = AssocPoly::one(ctx);
    for i in (1..=n).rev() {
        let inverse = AssocPoly::generator(ctx, i)?.neg().exp_trunc()?;
        residual = residual.mul(&inverse)?;
    }
    residual = residual.mul(&AssocPoly::generator_sum(ctx).exp_trunc()?)?;

    let mut out = Vec::with_capacity(max_degree - 1);
    for m in 2..=max_degree {
        let w = residual.log_trunc()?.degree_component(m)?;
        residual = w.neg().exp_trunc()?.mul(&residual)?;
        out.push(w);
    }
    Ok(out)
}

/// `exp(e1) exp(e2) ...` in the truncated algebra.
pub fn ordered_product(ctx: AlgebraCtx, exponents: &[AssocPoly]) -> Result<AssocPoly, OracleError> {
    let mut product = AssocPoly::one(ctx);
    for e in exponents {
        product = product.mul(&e.exp_trunc()?)?;
    }
    Ok(product)
}

/// Checks `exp(X1 + ... + Xn) = exp(X1) ... exp(Xn) exp(W2) ... exp(WK)`
/// exactly through degree `K`. `ws[i]` is `W_{i+2}`.
pub fn exact_identity_check(
    n: usize,
    max_degree: usize,
    ws: &[AssocPoly],
) -> Result<VerificationReport, OracleError> {
    let ctx = AlgebraCtx::new(n, max_degree)?;
    if ws.len() + 1 != max_degree {
        return Err(OracleError::InvalidArgument(format!(
            "expected {} exponents W_2..W_{max_degree}, got {}",
            max_degree.saturating_sub(1),
            ws.len()
        )));
    }
    for w in ws {
        ctx.check_same(&w.ctx())?;
    }
    let lhs = AssocPoly::generator_sum(ctx).exp_trunc()?;
    let mut exponents: Vec<AssocPoly> = (1..=n)
        .map(|i| AssocPoly::generator(ctx, i))
        .collect::<Result<_, _>>()?;
    exponents.extend(ws.iter().cloned());
    let rhs = ordered_product(ctx, &exponents)?;
    let defect = lhs.sub(&rhs)?;
    Ok(VerificationReport::exact(
        n,
        max_degree,
        format_rational(&defect.max_abs_coeff()),
        defect.degrees(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::rational;

    fn x(ctx: AlgebraCtx, i: usize) -> AssocPoly {
        AssocPoly::generator(ctx, i).unwrap()
    }

    #[test]
    fn two_variable_low_degree() {
        let ws = peel_oracle(2, 3).unwrap();
        let ctx = ws[0].ctx();
        // W2 = -1/2 [X1, X2]
        assert_eq!(
            ws[0],
            x(ctx, 1)
                .bracket(&x(ctx, 2))
                .unwrap()
                .scale(&rational(-1, 2))
        );
        assert!(ws[1].is_homogeneous_of(3));
    }

    #[test]
    fn single_generator_zero() {
        assert!(peel_oracle(1, 6).unwrap().iter().all(AssocPoly::is_zero));
        let ctx = AlgebraCtx::new(1, 6).unwrap();
        let zeros = vec![AssocPoly::zero(ctx); 5];
        assert!(exact_identity_check(1, 6, &zeros).unwrap().pass);
    }

    #[test]
    fn perturbed_exponent_fails_in_its_degree() {
        let mut ws = peel_oracle(2, 5).unwrap();
        assert!(exact_identity_check(2, 5, &ws).unwrap().pass);
        let ctx = ws[0].ctx();
        ws[3] = AssocPoly::zero(ctx);
        let report = exact_identity_check(2, 5, &ws).unwrap();
        assert!(!report.pass);
        assert_eq!(report.defect_degrees, Some(vec![5]));
    }

    #[test]
    fn argument_errors() {
        assert!(peel_oracle(2, 1).is_err());
        assert!(peel_oracle(0, 3).is_err());
        let ctx = AlgebraCtx::new(2, 3).unwrap();
        assert!(exact_identity_check(2, 3, &[AssocPoly::zero(ctx)]).is_err());
        let other = AlgebraCtx::new(2, 4).unwrap();
        let wrong = vec![AssocPoly::zero(other), AssocPoly::zero(other)];
        assert!(exact_identity_check(2, 3, &wrong).is_err());
    }
}
