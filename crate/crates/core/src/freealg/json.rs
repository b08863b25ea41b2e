//! Canonical JSON form:
//! `{"n":2,"maxDegree":3,"terms":[{"word":[2,1],"coeff":"1/2"}]}`.

use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, AlgebraCtx, AlgebraError, AssocPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<u8>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub n: usize,
    #[serde(rename = "maxDegree")]
    pub max_degree: usize,
    pub terms: Vec<TermJson>,
}

impl From<&AssocPoly> for PolyJson {
    fn from(p: &AssocPoly) -> Self {
        PolyJson {
            n: p.ctx().n(),
            max_degree: p.ctx().max_degree(),
            terms: p
                .terms()
                .map(|(w, c)| TermJson {
                    word: w.letters().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for AssocPoly {
    type Error = AlgebraError;

    /// Accepts only the canonical form: strictly increasing term order,
    /// nonzero reduced coefficients.
    fn try_from(json: &PolyJson) -> Result<Self, AlgebraError> {
        let ctx = AlgebraCtx::new(json.n, json.max_degree)?;
        let mut previous: Option<Word> = None;
        let mut terms = Vec::with_capacity(json.terms.len());
        for term in &json.terms {
            let word = Word::from_letters(term.word.clone());
            if previous.as_ref().is_some_and(|p| p >= &word) {
                return Err(AlgebraError::Malformed(format!(
                    "terms out of canonical order at {word}"
                )));
            }
            let coeff = parse_rational(&term.coeff)?;
            if num_traits::Zero::is_zero(&coeff) {
                return Err(AlgebraError::Malformed("zero coefficient stored".into()));
            }
            previous = Some(word.clone());
            terms.push((word, coeff));
        }
        AssocPoly::from_terms(ctx, terms)
    }
}

impl AssocPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson::from(self)
    }

    /// Compact canonical JSON text.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data serializes")
    }

    pub fn from_json_str(s: &str) -> Result<AssocPoly, AlgebraError> {
        let json: PolyJson =
            serde_json::from_str(s).map_err(|e| AlgebraError::Malformed(e.to_string()))?;
        AssocPoly::try_from(&json)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::rational;

    #[test]
    fn canonical_text() {
        let ctx = AlgebraCtx::new(2, 3).unwrap();
        let x1 = AssocPoly::generator(ctx, 1).unwrap();
        let x2 = AssocPoly::generator(ctx, 2).unwrap();
        let p = x2
            .bracket(&x1)
            .unwrap()
            .scale(&rational(1, 2))
            .add(&x1)
            .unwrap();
        assert_eq!(
            p.to_json_string(),
            r#"{"n":2,"maxDegree":3,"terms":[{"word":[1],"coeff":"1/1"},{"word":[1,2],"coeff":"-1/2"},{"word":[2,1],"coeff":"1/2"}]}"#
        );
        assert_eq!(AssocPoly::from_json_str(&p.to_json_string()).unwrap(), p);
    }

    #[test]
    fn rejects_non_canonical() {
        let unordered = r#"{"n":2,"maxDegree":3,"terms":[{"word":[2],"coeff":"1/1"},{"word":[1],"coeff":"1/1"}]}"#;
        assert!(AssocPoly::from_json_str(unordered).is_err());
        let unreduced = r#"{"n":2,"maxDegree":3,"terms":[{"word":[1],"coeff":"2/4"}]}"#;
        assert!(AssocPoly::from_json_str(unreduced).is_err());
        let zero = r#"{"n":2,"maxDegree":3,"terms":[{"word":[1],"coeff":"0/1"}]}"#;
        assert!(AssocPoly::from_json_str(zero).is_err());
        let out_of_range = r#"{"n":2,"maxDegree":3,"terms":[{"word":[3],"coeff":"1/1"}]}"#;
        assert!(AssocPoly::from_json_str(out_of_range).is_err());
        let too_long = r#"{"n":2,"maxDegree":1,"terms":[{"word":[1,1],"coeff":"1/1"}]}"#;
        assert!(AssocPoly::from_json_str(too_long).is_err());
    }
}
