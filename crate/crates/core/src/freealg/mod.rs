//! Exact arithmetic in the free associative algebra `Q<X1, ..., Xn>`
//! truncated above a fixed degree.
//!
//! Every Lie element used elsewhere in the crate is represented here by its
//! associative expansion, with `[A, B] = AB - BA`.

mod json;
mod poly;
mod word;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

pub use json::{PolyJson, TermJson};
pub use poly::AssocPoly;
pub use word::Word;

/// Exact scalar coefficient. Always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Largest supported number of generators; letters are stored as `u8`.
pub const MAX_GENERATORS: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch { left: AlgebraCtx, right: AlgebraCtx },
    #[error("invalid algebra context: n = {n}, max degree = {max_degree}")]
    InvalidContext { n: usize, max_degree: usize },
    #[error("generator index {index} out of range 1..={n}")]
    LetterOutOfRange { index: usize, n: usize },
    #[error("degree {degree} exceeds the truncation degree {max_degree}")]
    DegreeOverflow { degree: usize, max_degree: usize },
    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },
    #[error("polynomial is not homogeneous of positive degree")]
    NotHomogeneous,
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

/// Number of generators and truncation degree shared by a family of
/// polynomials. Words of degree above `max_degree` are discarded eagerly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraCtx {
    n: usize,
    max_degree: usize,
}

impl AlgebraCtx {
    pub fn new(n: usize, max_degree: usize) -> Result<Self, AlgebraError> {
        if n == 0 || n > MAX_GENERATORS || max_degree == 0 {
            return Err(AlgebraError::InvalidContext { n, max_degree });
        }
        Ok(AlgebraCtx { n, max_degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn check_same(&self, other: &AlgebraCtx) -> Result<(), AlgebraError> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch {
                left: *self,
                right: *other,
            })
        }
    }

    pub fn check_letter(&self, index: usize) -> Result<(), AlgebraError> {
        if index == 0 || index > self.n {
            Err(AlgebraError::LetterOutOfRange { index, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_degree(&self, degree: usize) -> Result<(), AlgebraError> {
        if degree > self.max_degree {
            Err(AlgebraError::DegreeOverflow {
                degree,
                max_degree: self.max_degree,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for AlgebraCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n = {}, K = {})", self.n, self.max_degree)
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `1 / k!` as an exact rational.
pub fn inverse_factorial(k: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(k))
}

/// Always `p/q`, even when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or `p`. Rejects zero denominators and non-reduced input.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let malformed = || AlgebraError::Malformed(format!("bad rational {s:?}"));
    let (numer, denom) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| malformed())?;
    let denom: BigInt = denom.parse().map_err(|_| malformed())?;
    if !denom.is_positive() {
        return Err(malformed());
    }
    let value = Rational::new(numer.clone(), denom.clone());
    if value.numer() != &numer || value.denom() != &denom {
        return Err(malformed());
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ctx_validation() {
        assert!(AlgebraCtx::new(0, 3).is_err());
        assert!(AlgebraCtx::new(2, 0).is_err());
        assert!(AlgebraCtx::new(256, 3).is_err());
        let ctx = AlgebraCtx::new(3, 4).unwrap();
        assert!(ctx.check_letter(0).is_err());
        assert!(ctx.check_letter(4).is_err());
        assert!(ctx.check_letter(3).is_ok());
        assert!(ctx.check_degree(5).is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rational(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rational(3, 1)), "3/1");
        assert_eq!(parse_rational("-1/2").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert!(parse_rational("2/4").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(inverse_factorial(5), rational(1, 120));
    }
}
