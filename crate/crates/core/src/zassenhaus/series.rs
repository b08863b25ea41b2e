use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::f1k::f1k_comm;
use super::{EngineCtx, EngineError};
use crate::freealg::{AlgebraCtx, AssocPoly, Rational};
use crate::lieform::{dynkin_form, LieExpr};

/// Which computation route to use for `W_m`, `m >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathChoice {
    Generic,
    Expanded,
    Both,
}

impl PathChoice {
    pub fn as_str(&self) -> &'static str {
        match self {
            PathChoice::Generic => "generic",
            PathChoice::Expanded => "expanded",
            PathChoice::Both => "both",
        }
    }
}

impl fmt::Display for PathChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PathChoice {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generic" => Ok(PathChoice::Generic),
            "expanded" => Ok(PathChoice::Expanded),
            "both" => Ok(PathChoice::Both),
            other => Err(EngineError::InvalidArgument(format!(
                "unknown path {other:?}"
            ))),
        }
    }
}

/// One exponent `W_m` with the route that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTerm {
    pub m: usize,
    pub poly: AssocPoly,
    pub path: PathChoice,
    /// Commutator display for `m <= 4`, taken from the closed `f_{1,m-1}/m`
    /// form.
    pub closed_form: Option<LieExpr>,
}

impl SeriesTerm {
    /// Commutator form: the closed display when there is one, otherwise the
    /// left-normed Dynkin form of the polynomial.
    pub fn lie_form(&self) -> Result<LieExpr, EngineError> {
        match &self.closed_form {
            Some(form) => Ok(form.clone()),
            None => Ok(dynkin_form(&self.poly)?),
        }
    }
}

/// The ordered exponents `W_2, ..., W_K` for `n` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZassenhausSeries {
    pub n: usize,
    pub max_degree: usize,
    pub terms: Vec<SeriesTerm>,
}

impl ZassenhausSeries {
    pub fn ctx(&self) -> AlgebraCtx {
        AlgebraCtx::new(self.n, self.max_degree).expect("validated on construction")
    }

    pub fn polys(&self) -> Vec<AssocPoly> {
        self.terms.iter().map(|t| t.poly.clone()).collect()
    }

    pub fn term(&self, m: usize) -> Option<&SeriesTerm> {
        self.terms.iter().find(|t| t.m == m)
    }
}

/// The closed commutator form `f_{1,m-1}/m` of `W_m` for `2 <= m <= 4`;
/// `None` for larger `m`.
pub fn closed_form(m: usize, n: usize) -> Result<Option<LieExpr>, EngineError> {
    if !(2..=4).contains(&m) {
        return Ok(None);
    }
    let form = f1k_comm(m - 1, n)?.scale(&Rational::new(BigInt::from(1), BigInt::from(m)));
    Ok(Some(form))
}

/// Computes `W_2..W_K`. With [`PathChoice::Both`] every term from `W_5` on
/// is produced by both routes and any disagreement is an error.
pub fn series(
    n: usize,
    max_degree: usize,
    path: PathChoice,
) -> Result<ZassenhausSeries, EngineError> {
    if max_degree < 2 {
        return Err(EngineError::InvalidArgument(format!(
            "the series starts at W_2; max degree must be >= 2 (got {max_degree})"
        )));
    }
    let ctx = AlgebraCtx::new(n, max_degree)?;
    let engine = EngineCtx::new(ctx);
    let mut terms = Vec::with_capacity(max_degree - 1);
    for m in 2..=max_degree {
        let poly = match (m, path) {
            (2..=4, _) | (_, PathChoice::Generic) => (*engine.w_term(m)?).clone(),
            (_, PathChoice::Expanded) => engine.w_term_expanded(m)?,
            (_, PathChoice::Both) => {
                let generic = engine.w_term(m)?;
                let expanded = engine.w_term_expanded(m)?;
                if *generic != expanded {
                    return Err(EngineError::PathDisagreement { m });
                }
                expanded
            }
        };
        let closed_form = closed_form(m, n)?;
        if let Some(form) = &closed_form {
            if form.expand(ctx)? != poly {
                return Err(EngineError::PathDisagreement { m });
            }
        }
        terms.push(SeriesTerm {
            m,
            poly,
            path,
            closed_form,
        });
    }
    Ok(ZassenhausSeries {
        n,
        max_degree,
        terms,
    })
}
