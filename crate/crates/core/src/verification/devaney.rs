use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::conditions::{check_diameter_condition, search_separation};
use super::report::{Verdict, VerificationReport};
use super::witnesses::{periodic_approximation, sensitivity_witness, transitive_witness};
use crate::error::Result;
use crate::limits::Limits;
use crate::rational::{format_rational, ratio, Rational};
use crate::structures::ChaoticStructure;
use crate::symbolic::{enumerate_words, periodic_point, SymbolicPoint};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DevaneyParams {
    pub max_depth: usize,
    #[serde(with = "crate::rational::serde_rational")]
    pub threshold: Rational,
    pub max_degree: usize,
    pub eps_grid: Vec<String>,
    /// Targets are all periodic points with period length up to this.
    pub sample_period: usize,
    pub transitive_k: usize,
}

impl Default for DevaneyParams {
    fn default() -> Self {
        DevaneyParams {
            max_depth: 10,
            threshold: ratio(1, 100),
            max_degree: 4,
            eps_grid: vec!["1/2".into(), "1/8".into(), "1/64".into()],
            sample_period: 3,
            transitive_k: 3,
        }
    }
}

impl DevaneyParams {
    fn eps_values(&self) -> Result<Vec<Rational>> {
        self.eps_grid
            .iter()
            .map(|s| crate::rational::parse_rational(s))
            .collect()
    }
}

/// Diameter and separation conditions, then the three witness constructions
/// on a sampled grid of targets. Passes only when every sub-check passes.
pub fn verify_devaney(
    st: &dyn ChaoticStructure,
    params: &DevaneyParams,
    limits: &Limits,
) -> Result<VerificationReport> {
    let eps_values = params.eps_values()?;
    let mut checks = Vec::new();

    checks.push(check_diameter_condition(
        st,
        params.max_depth,
        &params.threshold,
        limits,
    )?);

    let (separation_reports, cert) = search_separation(st, params.max_degree, limits)?;
    let separation = if cert.is_some() {
        separation_reports
            .last()
            .cloned()
            .expect("certified report")
    } else {
        VerificationReport::new("separation_search", Verdict::Fail)
            .param("max_degree", params.max_degree)
            .with_horizon(params.max_degree)
            .with_evidence(json!({ "attempts": separation_reports }))
    };
    checks.push(separation);

    let transitive = transitive_witness(st, params.transitive_k, limits)?;
    let mut targets: Vec<SymbolicPoint> = Vec::new();
    for len in 1..=params.sample_period {
        for w in enumerate_words(st.alphabet(), len, limits)? {
            let p = periodic_point(&w)?;
            if !targets.contains(&p) {
                targets.push(p);
            }
        }
    }
    targets.push(transitive.point.clone());

    let mut density_rows = Vec::new();
    let mut density_verdicts = Vec::new();
    for x in &targets {
        for eps in &eps_values {
            let a = periodic_approximation(st, x, eps, limits)?;
            density_verdicts.push(a.report.verdict);
            density_rows.push(json!({
                "target": x,
                "eps": format_rational(eps),
                "depth": a.depth,
                "periodic_point": a.point,
                "distance": a.report.evidence["distance"],
                "verdict": a.report.verdict,
            }));
        }
    }
    checks.push(
        VerificationReport::new("periodic_density", Verdict::combine(density_verdicts))
            .param("sample_period", params.sample_period)
            .param("eps_grid", &params.eps_grid)
            .with_evidence(json!({
                "targets": targets.len(),
                "approximations": density_rows,
                "scope": "sampled targets: every periodic point of period <= sample_period and the transitive witness",
            })),
    );

    checks.push(transitive.report);

    let sensitivity = match &cert {
        Some(cert) => {
            let mut rows = Vec::new();
            let mut verdicts = Vec::new();
            for x in &targets {
                for eps in &eps_values {
                    let s = sensitivity_witness(st, x, eps, cert, limits)?;
                    verdicts.push(s.report.verdict);
                    rows.push(json!({
                        "target": x,
                        "eps": format_rational(eps),
                        "partner": s.partner,
                        "time": s.time,
                        "separation_distance": s.report.evidence["separation_distance"],
                        "verdict": s.report.verdict,
                    }));
                }
            }
            VerificationReport::new("sensitivity", Verdict::combine(verdicts))
                .param("degree", cert.degree)
                .param("epsilon0", format_rational(&cert.epsilon0))
                .with_evidence(json!({ "witnesses": rows }))
        }
        None => VerificationReport::new("sensitivity", Verdict::Fail).with_evidence(json!({
            "skipped": "no separation certificate up to max_degree",
        })),
    };
    checks.push(sensitivity);

    let verdict = Verdict::combine(checks.iter().map(|c| c.verdict));
    let summary: Vec<Value> = checks
        .iter()
        .map(|c| json!({"check": c.check, "verdict": c.verdict}))
        .collect();
    Ok(VerificationReport::new("devaney", verdict)
        .param("structure", st.describe())
        .param("settings", params)
        .param("limits", limits)
        .with_horizon(params.max_depth)
        .with_evidence(json!({
            "summary": summary,
            "certificate": cert,
            "pseudometric": !st.capabilities().is_metric,
            "checks": checks,
        })))
}
