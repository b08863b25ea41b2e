//! The two routes to `f_{1,k}`, the coefficient of `t^k` in the logarithmic
//! derivative of `exp(-t Xn) ... exp(-t X1) exp(t (X1 + ... + Xn))`.

use num_bigint::BigInt;
use num_traits::One;

use super::EngineError;
use crate::freealg::{inverse_factorial, AlgebraCtx, AssocPoly, Rational};
use crate::lieform::{compositions, CommTerm, Composition, LieExpr};

/// `f_{1,k}` from the ad-operator sum
///
/// ```text
/// (-1)^k  sum_{i=2..n}  sum_{j1+..+j_{i-1} >= 1, j1+..+jn = k}
///         ad_{Xn}^{jn} ... ad_{X1}^{j1} X_i / (j1! ... jn!)
/// ```
///
/// evaluated letter by letter: after applying the `ad_{X_l}` factors for
/// `l = 1..L`, slot `s` holds the partial sum with `j1 + .. + jL = s`.
pub fn f1k_direct(k: usize, ctx: AlgebraCtx) -> Result<AssocPoly, EngineError> {
    if k == 0 {
        return Err(EngineError::InvalidArgument(
            "f_{1,k} needs k >= 1".to_string(),
        ));
    }
    ctx.check_degree(k + 1)
        .map_err(|_| EngineError::DegreeOverflow {
            degree: k + 1,
            max_degree: ctx.max_degree(),
        })?;
    let n = ctx.n();
    let mut total = AssocPoly::zero(ctx);
    for i in 2..=n {
        let mut slots = vec![AssocPoly::zero(ctx); k + 1];
        slots[0] = AssocPoly::generator(ctx, i)?;
        for l in 1..=n {
            let x_l = AssocPoly::generator(ctx, l)?;
            let mut next = vec![AssocPoly::zero(ctx); k + 1];
            for (s, source) in slots.iter().enumerate() {
                if source.is_zero() {
                    continue;
                }
                let mut nested = source.clone();
                for j in 0..=(k - s) {
                    if j > 0 {
                        nested = x_l.bracket(&nested)?;
                        if nested.is_zero() {
                            break;
                        }
                    }
                    next[s + j].add_scaled(&inverse_factorial(j), &nested)?;
                }
            }
            if l == i - 1 {
                // at least one of j1..j_{i-1} must be positive
                next[0] = AssocPoly::zero(ctx);
            }
            slots = next;
        }
        total = total.add(&slots[k])?;
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    Ok(total.scale(&Rational::from_integer(BigInt::from(sign))))
}

/// `f_{1,k}` as a sum of long commutators indexed by compositions of `k`:
///
/// ```text
/// sum_{(k1..kl) |= k} 1/(k1!...kl!)
///     sum_{i1 < j <= n, i1 < i2 < i3 < ... < il <= n} [X_j X_{i1}^{k1} ... X_{il}^{kl}]
/// ```
///
/// `j` is unconstrained relative to `i2, ..., il`.
pub fn f1k_comm(k: usize, n: usize) -> Result<LieExpr, EngineError> {
    let mut out = LieExpr::new();
    for (_, group) in f1k_comm_by_composition(k, n)? {
        out = out.merge(&group);
    }
    Ok(out)
}

/// The summands of [`f1k_comm`], one per composition, in composition order.
pub fn f1k_comm_by_composition(
    k: usize,
    n: usize,
) -> Result<Vec<(Composition, LieExpr)>, EngineError> {
    if k == 0 || n == 0 {
        return Err(EngineError::InvalidArgument(format!(
            "f_{{1,k}} needs k >= 1 and n >= 1 (got k = {k}, n = {n})"
        )));
    }
    if n > crate::freealg::MAX_GENERATORS {
        return Err(EngineError::InvalidArgument(format!(
            "n = {n} is too large"
        )));
    }
    let mut groups = Vec::new();
    for composition in compositions(k)? {
        let parts = composition.parts();
        let weight = parts
            .iter()
            .fold(Rational::one(), |acc, &p| acc * inverse_factorial(p));
        let mut group = LieExpr::new();
        for i1 in 1..=n {
            for j in (i1 + 1)..=n {
                let mut indices = vec![i1];
                push_increasing(
                    &mut indices,
                    parts.len(),
                    n,
                    &mut |seq: &[usize]| -> Result<(), EngineError> {
                        let tail: Vec<(u8, usize)> = seq
                            .iter()
                            .zip(parts)
                            .map(|(&index, &mult)| (index as u8, mult))
                            .collect();
                        group.push(CommTerm::new(weight.clone(), j as u8, &tail)?);
                        Ok(())
                    },
                )?;
            }
        }
        groups.push((composition, group));
    }
    Ok(groups)
}

/// Extends `prefix` with strictly increasing indices up to `n` until it has
/// `len` entries, calling `visit` on each completion.
fn push_increasing<F>(
    prefix: &mut Vec<usize>,
    len: usize,
    n: usize,
    visit: &mut F,
) -> Result<(), EngineError>
where
    F: FnMut(&[usize]) -> Result<(), EngineError>,
{
    if prefix.len() == len {
        return visit(prefix);
    }
    let start = prefix.last().map_or(1, |&last| last + 1);
    for next in start..=n {
        prefix.push(next);
        push_increasing(prefix, len, n, visit)?;
        prefix.pop();
    }
    Ok(())
}
