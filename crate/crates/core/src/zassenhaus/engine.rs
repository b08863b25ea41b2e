use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use super::expanded::{expanded_formula, AdTerm};
use super::f1k::f1k_direct;
use super::EngineError;
use crate::freealg::{inverse_factorial, AlgebraCtx, AssocPoly, Rational};

/// Memoizing evaluator for the families `f_{m,k}` and `W_m` at fixed
/// `(n, K)`.
///
/// Cached values are immutable and shared through `Arc`; the caches are
/// safe for concurrent readers and insertion is insert-if-absent.
#[derive(Debug)]
pub struct EngineCtx {
    alg: AlgebraCtx,
    f_memo: RwLock<HashMap<(usize, usize), Arc<AssocPoly>>>,
    w_memo: RwLock<HashMap<usize, Arc<AssocPoly>>>,
}

impl EngineCtx {
    pub fn new(alg: AlgebraCtx) -> Self {
        EngineCtx {
            alg,
            f_memo: RwLock::new(HashMap::new()),
            w_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn alg(&self) -> AlgebraCtx {
        self.alg
    }

    fn cached_f(&self, key: (usize, usize)) -> Option<Arc<AssocPoly>> {
        self.f_memo.read().expect("memo lock").get(&key).cloned()
    }

    fn cached_w(&self, m: usize) -> Option<Arc<AssocPoly>> {
        self.w_memo.read().expect("memo lock").get(&m).cloned()
    }

    fn insert_f(&self, key: (usize, usize), value: AssocPoly) -> Arc<AssocPoly> {
        let mut memo = self.f_memo.write().expect("memo lock");
        memo.entry(key).or_insert_with(|| Arc::new(value)).clone()
    }

    fn insert_w(&self, m: usize, value: AssocPoly) -> Arc<AssocPoly> {
        let mut memo = self.w_memo.write().expect("memo lock");
        memo.entry(m).or_insert_with(|| Arc::new(value)).clone()
    }

    /// `f_{m,k}`, homogeneous of degree `k + 1`.
    ///
    /// `f_{1,k}` comes from the ad-operator sum; for `m >= 2`
    ///
    /// ```text
    /// f_{m,k} = sum_{j=0}^{floor(k/m)-1} (-1)^j / j! ad_{W_m}^j f_{m-1, k-mj}
    /// ```
    pub fn fmk(&self, m: usize, k: usize) -> Result<Arc<AssocPoly>, EngineError> {
        if m == 0 || k < m {
            return Err(EngineError::InvalidArgument(format!(
                "f_{{m,k}} needs 1 <= m <= k (got m = {m}, k = {k})"
            )));
        }
        if k + 1 > self.alg.max_degree() {
            return Err(EngineError::DegreeOverflow {
                degree: k + 1,
                max_degree: self.alg.max_degree(),
            });
        }
        if let Some(hit) = self.cached_f((m, k)) {
            return Ok(hit);
        }
        let value = if m == 1 {
            f1k_direct(k, self.alg)?
        } else {
            let w = self.w_term(m)?;
            let mut sum = AssocPoly::zero(self.alg);
            for j in 0..(k / m) {
                let inner = self.fmk(m - 1, k - m * j)?;
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let factor = inverse_factorial(j) * Rational::from_integer(BigInt::from(sign));
                sum.add_scaled(&factor, &w.ad_pow(j, &inner)?)?;
            }
            sum
        };
        Ok(self.insert_f((m, k), value))
    }

    /// `W_m` by the generic rule: `W_2 = f_{1,1}/2`, `W_3 = f_{1,2}/3`,
    /// `W_4 = f_{1,3}/4`, and `W_m = f_{floor((m-1)/2), m-1} / m` for
    /// `m >= 5`.
    pub fn w_term(&self, m: usize) -> Result<Arc<AssocPoly>, EngineError> {
        self.check_w_index(m)?;
        if let Some(hit) = self.cached_w(m) {
            return Ok(hit);
        }
        let level = if m <= 4 { 1 } else { (m - 1) / 2 };
        let f = self.fmk(level, m - 1)?;
        let value = f.scale(&Rational::new(BigInt::from(1), BigInt::from(m)));
        Ok(self.insert_w(m, value))
    }

    /// `W_m` for `m >= 5` by the fully grouped formulas: the explicit
    /// expressions in `f_{1,*}` for `m <= 10`, and the residue-class
    /// formulas in `f_{M,*}` (`M` = 2k-2, 2k-1 or 2k for `m = 6k + i`)
    /// beyond. Not memoized; lower `W`s and the `f_{M,*}` come from the
    /// generic caches.
    pub fn w_term_expanded(&self, m: usize) -> Result<AssocPoly, EngineError> {
        self.check_w_index(m)?;
        if m < 5 {
            return Err(EngineError::InvalidArgument(format!(
                "the expanded formulas start at W_5 (got m = {m})"
            )));
        }
        let inv_m = Rational::new(BigInt::from(1), BigInt::from(m));
        if m == 5 {
            // W_5 = f_{1,4}/5 - [f_{1,1}, f_{1,2}]/10
            let f11 = self.fmk(1, 1)?;
            let f12 = self.fmk(1, 2)?;
            let f14 = self.fmk(1, 4)?;
            let mut out = f14.scale(&inv_m);
            out.add_scaled(
                &Rational::new(BigInt::from(-1), BigInt::from(10)),
                &f11.bracket(&f12)?,
            )?;
            return Ok(out);
        }
        let mut sum = AssocPoly::zero(self.alg);
        for term in expanded_formula(m) {
            sum.add_scaled(&term.coeff, &self.eval_ad_term(&term)?)?;
        }
        Ok(sum.scale(&inv_m))
    }

    fn eval_ad_term(&self, term: &AdTerm) -> Result<AssocPoly, EngineError> {
        let (level, k) = term.f;
        let mut value = (*self.fmk(level, k)?).clone();
        for &(w_index, power) in term.ads.iter().rev() {
            value = self.w_term(w_index)?.ad_pow(power, &value)?;
        }
        Ok(value)
    }

    fn check_w_index(&self, m: usize) -> Result<(), EngineError> {
        if m < 2 {
            return Err(EngineError::InvalidArgument(format!(
                "Zassenhaus exponents start at W_2 (got m = {m})"
            )));
        }
        if m > self.alg.max_degree() {
            return Err(EngineError::DegreeOverflow {
                degree: m,
                max_degree: self.alg.max_degree(),
            });
        }
        Ok(())
    }
}
