use serde::Serialize;
use serde_json::Value;

use crate::finiteness::{AdmissiblePoint, Verdict};
use crate::order::SizeResult;

/// JSON object printed by the command-line tool.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    /// `null` when undecided (closure cap reached without a certificate).
    pub finite: Option<bool>,
    pub order: Option<String>,
    /// Coordinates of the point, each as digits over `F_p`, low degree first.
    pub alpha: Vec<Vec<u64>>,
    pub nu: usize,
    /// Modulus of `F_{q^nu}` over `F_p` in which `alpha` is written.
    pub field_poly: Vec<u64>,
    pub evidence: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Value>>,
}

impl Report {
    fn with_point(finite: Option<bool>, order: Option<String>, point: Option<&AdmissiblePoint>, evidence: &str) -> Self {
        Report {
            finite,
            order,
            alpha: point.map(|p| p.alpha_coeffs()).unwrap_or_default(),
            nu: point.map_or(0, |p| p.nu),
            field_poly: point.map(|p| p.field().modulus().to_vec()).unwrap_or_default(),
            evidence: evidence.to_string(),
            trace: None,
        }
    }

    pub fn from_verdict(v: &Verdict) -> Self {
        Self::with_point(Some(v.finite), None, v.point.as_ref(), v.evidence.name())
    }

    pub fn from_size(s: &SizeResult) -> Self {
        Self::with_point(Some(true), Some(s.order.value.to_string()), Some(&s.point), "IsoBasis")
    }

    pub fn from_oracle(finite: Option<bool>, order: Option<String>, evidence: &str) -> Self {
        Self::with_point(finite, order, None, evidence)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
