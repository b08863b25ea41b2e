use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationMode {
    Exact,
    Numeric,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub t: f64,
    pub norm: f64,
}

/// Outcome of one verification. Serialized field names are camelCase;
/// fields that do not apply to the mode are omitted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub mode: VerificationMode,
    pub pass: bool,
    pub residuals: Vec<Residual>,
    pub observed_order: Option<f64>,
    pub n: usize,
    pub max_degree: usize,
    /// Exact mode: largest |coefficient| of the defect, as `p/q`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_defect: Option<String>,
    /// Exact mode: degrees in which the defect is nonzero.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub defect_degrees: Option<Vec<usize>>,
    /// Oracle mode: exponents on which engine and oracle disagree.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mismatched_terms: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected_order: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inconclusive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub monotone: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub norm_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl VerificationReport {
    fn base(mode: VerificationMode, n: usize, max_degree: usize) -> Self {
        VerificationReport {
            mode,
            pass: false,
            residuals: Vec::new(),
            observed_order: None,
            n,
            max_degree,
            max_defect: None,
            defect_degrees: None,
            mismatched_terms: None,
            expected_order: None,
            inconclusive: None,
            monotone: None,
            norm_kind: None,
            dim: None,
            seed: None,
        }
    }

    /// Passes iff the defect is identically zero.
    pub fn exact(
        n: usize,
        max_degree: usize,
        max_defect: String,
        defect_degrees: Vec<usize>,
    ) -> Self {
        VerificationReport {
            pass: defect_degrees.is_empty(),
            max_defect: Some(max_defect),
            defect_degrees: Some(defect_degrees),
            ..Self::base(VerificationMode::Exact, n, max_degree)
        }
    }

    pub fn oracle(n: usize, max_degree: usize, mismatched: Vec<usize>) -> Self {
        VerificationReport {
            pass: mismatched.is_empty(),
            mismatched_terms: Some(mismatched),
            ..Self::base(VerificationMode::Oracle, n, max_degree)
        }
    }

    pub(crate) fn numeric(n: usize, max_degree: usize) -> Self {
        Self::base(VerificationMode::Numeric, n, max_degree)
    }

    pub fn is_inconclusive(&self) -> bool {
        self.inconclusive.unwrap_or(false)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
