use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Fail dominates inconclusive, which dominates pass.
    pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts
            .into_iter()
            .fold(Verdict::Pass, |acc, v| match (acc, v) {
                (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
                (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
                _ => Verdict::Pass,
            })
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

/// Machine-readable outcome of one check or witness construction.
///
/// Serializes as `{"check", "params", "verdict", "horizon", "evidence"}`.
/// `horizon` is the depth or number of steps actually examined.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    pub horizon: Option<u64>,
    pub evidence: Value,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, verdict: Verdict) -> Self {
        VerificationReport {
            check: check.into(),
            params: Map::new(),
            verdict,
            horizon: None,
            evidence: Value::Null,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(
            key.to_owned(),
            serde_json::to_value(value).expect("parameters serialize to JSON"),
        );
        self
    }

    pub fn with_horizon(mut self, horizon: usize) -> Self {
        self.horizon = Some(horizon as u64);
        self
    }

    pub fn with_evidence(mut self, evidence: impl Serialize) -> Self {
        self.evidence = serde_json::to_value(evidence).expect("evidence serializes to JSON");
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes to JSON")
    }
}
