//! Dynkin-Specht-Wever projection: a degree-`d` word `x1...xd` maps to
//! `[x1, ..., xd] / d`. The map fixes exactly the Lie elements of degree `d`.

use num_bigint::BigInt;

use super::comm::{left_normed_expansion, CommTerm, LieExpr};
use super::LieError;
use crate::freealg::{AssocPoly, Rational};

/// Projection of a homogeneous polynomial of degree `d >= 1`.
pub fn dsw_project(a: &AssocPoly) -> Result<AssocPoly, LieError> {
    let degree = homogeneous_degree(a)?;
    let ctx = a.ctx();
    let inv_degree = Rational::new(BigInt::from(1), BigInt::from(degree));
    let mut acc = std::collections::HashMap::new();
    for (word, coeff) in a.terms() {
        let weight = coeff * &inv_degree;
        for (expanded, c) in left_normed_expansion(word.letters()) {
            *acc.entry(expanded)
                .or_insert_with(|| Rational::from_integer(0.into())) +=
                &weight * Rational::from_integer(c.into());
        }
    }
    Ok(AssocPoly::from_terms(ctx, acc)?)
}

/// True when the homogeneous input is a Lie element.
pub fn is_lie(a: &AssocPoly) -> Result<bool, LieError> {
    if a.is_zero() {
        return Ok(true);
    }
    Ok(&dsw_project(a)? == a)
}

/// Left-normed commutator form of a Lie polynomial (each homogeneous part
/// projected separately). Fails when the input is not a Lie element.
pub fn dynkin_form(a: &AssocPoly) -> Result<LieExpr, LieError> {
    let mut out = LieExpr::new();
    for d in a.degrees() {
        let part = a.degree_component(d)?;
        if d == 0 || !is_lie(&part)? {
            return Err(LieError::NotLie);
        }
        let inv_degree = Rational::new(BigInt::from(1), BigInt::from(d));
        for (word, coeff) in part.terms() {
            let letters = word.letters();
            if letters.len() >= 2 && letters[0] == letters[1] {
                continue;
            }
            out.push(CommTerm::from_word(coeff * &inv_degree, word.clone())?);
        }
    }
    Ok(out)
}

fn homogeneous_degree(a: &AssocPoly) -> Result<usize, LieError> {
    match a.degrees().as_slice() {
        [] => Ok(1),
        [d] if *d >= 1 => Ok(*d),
        _ => Err(LieError::NotHomogeneous),
    }
}
