use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::report::{Verdict, VerificationReport};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{format_rational, Rational};
use crate::structures::ChaoticStructure;
use crate::symbolic::{enumerate_words, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterMethod {
    /// Maximum over every word of the depth.
    Enumeration,
    /// The structure's own formula, used when enumeration would exceed the cap.
    ClosedForm,
}

/// `max_{|w| = depth} diam(F_w)`.
pub fn max_diameter_at(
    st: &dyn ChaoticStructure,
    depth: usize,
    limits: &Limits,
) -> Result<(Rational, DiameterMethod)> {
    let alphabet = st.alphabet();
    match alphabet.word_count(depth) {
        Some(count) if count <= limits.cap => {
            let words = enumerate_words(alphabet, depth, limits)?;
            let mut best = Rational::zero();
            for w in &words {
                let d = st.cylinder_diameter(w)?;
                if d > best {
                    best = d;
                }
            }
            Ok((best, DiameterMethod::Enumeration))
        }
        count => match st.max_diameter_closed_form(depth) {
            Some(d) => Ok((d, DiameterMethod::ClosedForm)),
            None => limits
                .ensure(
                    || format!("maximum diameter at depth {depth} without a closed form"),
                    count,
                )
                .map(|_| unreachable!("count exceeds cap")),
        },
    }
}

/// Tabulates `D_n` for `n = 1..=max_depth`.
///
/// Passes when the sequence is non-increasing and `D_max_depth < threshold`;
/// inconclusive when non-increasing but still above the threshold.
pub fn check_diameter_condition(
    st: &dyn ChaoticStructure,
    max_depth: usize,
    threshold: &Rational,
    limits: &Limits,
) -> Result<VerificationReport> {
    if max_depth == 0 {
        return Err(Error::argument("diameter check needs max_depth >= 1"));
    }
    if !threshold.is_positive() {
        return Err(Error::argument("diameter threshold must be positive"));
    }
    let mut rows = Vec::with_capacity(max_depth);
    let mut diameters: Vec<Rational> = Vec::with_capacity(max_depth);
    for depth in 1..=max_depth {
        let (d, method) = max_diameter_at(st, depth, limits)?;
        rows.push(json!({
            "depth": depth,
            "max_diameter": format_rational(&d),
            "method": method,
        }));
        diameters.push(d);
    }
    let non_increasing = diameters.windows(2).all(|p| p[1] <= p[0]);
    let last = diameters.last().expect("max_depth >= 1");
    let below = last < threshold;
    let verdict = match (non_increasing, below) {
        (false, _) => Verdict::Fail,
        (true, true) => Verdict::Pass,
        (true, false) => Verdict::Inconclusive,
    };
    Ok(VerificationReport::new("diameter_condition", verdict)
        .param("structure", st.describe())
        .param("max_depth", max_depth)
        .param("threshold", format_rational(threshold))
        .with_horizon(max_depth)
        .with_evidence(json!({
            "diameters": rows,
            "non_increasing": non_increasing,
            "final_below_threshold": below,
            "pseudometric": !st.capabilities().is_metric,
        })))
}

/// Degree `n`, gap `epsilon0`, and for every depth-`n` word a partner word
/// whose cylinder lies at distance at least `epsilon0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub degree: usize,
    pub epsilon0: Rational,
    pub witness_map: BTreeMap<Word, Word>,
}

impl SeparationCertificate {
    pub fn witness(&self, w: &Word) -> Option<&Word> {
        self.witness_map.get(w)
    }

    /// Recomputes every witness distance against `st`.
    pub fn verify(&self, st: &dyn ChaoticStructure, limits: &Limits) -> Result<bool> {
        let words = enumerate_words(st.alphabet(), self.degree, limits)?;
        if words.len() != self.witness_map.len() || !self.epsilon0.is_positive() {
            return Ok(false);
        }
        for w in &words {
            let Some(v) = self.witness(w) else {
                return Ok(false);
            };
            if v.len() != self.degree || st.cylinder_distance(w, v)? < self.epsilon0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    degree: usize,
    #[serde(with = "crate::rational::serde_rational")]
    epsilon0: Rational,
    witness_map: Vec<WitnessEntry>,
}

#[derive(Serialize, Deserialize)]
struct WitnessEntry {
    word: Word,
    witness: Word,
}

impl Serialize for SeparationCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateRepr {
            degree: self.degree,
            epsilon0: self.epsilon0.clone(),
            witness_map: self
                .witness_map
                .iter()
                .map(|(w, v)| WitnessEntry {
                    word: w.clone(),
                    witness: v.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SeparationCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CertificateRepr::deserialize(d)?;
        Ok(SeparationCertificate {
            degree: repr.degree,
            epsilon0: repr.epsilon0,
            witness_map: repr
                .witness_map
                .into_iter()
                .map(|e| (e.word, e.witness))
                .collect(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct SeparationOutcome {
    pub report: VerificationReport,
    pub certificate: Option<SeparationCertificate>,
}

/// Exhaustive `epsilon0 = min_w max_v d(F_w, F_v)` over words of length `degree`.
///
/// Rows are evaluated in parallel; the result is combined by exact min and max,
/// so it does not depend on scheduling. Each word's witness is the
/// lexicographically smallest partner reaching `epsilon0`.
pub fn check_separation(
    st: &dyn ChaoticStructure,
    degree: usize,
    limits: &Limits,
) -> Result<SeparationOutcome> {
    if degree == 0 {
        return Err(Error::argument("separation degree must be >= 1"));
    }
    let words = enumerate_words(st.alphabet(), degree, limits)?;

    let row_best: Vec<Rational> = words
        .par_iter()
        .map(|w| {
            words.iter().try_fold(Rational::zero(), |best, v| {
                let d = st.cylinder_distance(w, v)?;
                Ok(if d > best { d } else { best })
            })
        })
        .collect::<Result<_>>()?;
    let epsilon0 = row_best
        .iter()
        .min()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let certified = epsilon0.is_positive();

    let witnesses: Vec<Option<Word>> = if certified {
        words
            .par_iter()
            .map(|w| {
                for v in &words {
                    if st.cylinder_distance(w, v)? >= epsilon0 {
                        return Ok(Some(v.clone()));
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?
    } else {
        vec![None; words.len()]
    };

    let rows: Vec<Value> = words
        .iter()
        .zip(&row_best)
        .zip(&witnesses)
        .map(|((w, best), v)| {
            json!({
                "word": w,
                "best_distance": format_rational(best),
                "witness": v,
            })
        })
        .collect();
    let evidence = json!({
        "epsilon0": format_rational(&epsilon0),
        "word_count": words.len(),
        "pairs_examined": words.len() * words.len(),
        "rows": rows,
        "pseudometric": !st.capabilities().is_metric,
    });
    let report = VerificationReport::new("separation_condition", Verdict::from_bool(certified))
        .param("structure", st.describe())
        .param("degree", degree)
        .with_horizon(degree)
        .with_evidence(evidence);

    let certificate = certified.then(|| SeparationCertificate {
        degree,
        epsilon0: epsilon0.clone(),
        witness_map: words
            .into_iter()
            .zip(witnesses)
            .map(|(w, v)| (w, v.expect("every row reaches its own maximum")))
            .collect(),
    });
    Ok(SeparationOutcome {
        report,
        certificate,
    })
}

/// Tries degrees `1..=max_degree` and stops at the first certified one.
pub fn search_separation(
    st: &dyn ChaoticStructure,
    max_degree: usize,
    limits: &Limits,
) -> Result<(Vec<VerificationReport>, Option<SeparationCertificate>)> {
    let mut reports = Vec::new();
    for degree in 1..=max_degree {
        let outcome = check_separation(st, degree, limits)?;
        reports.push(outcome.report);
        if outcome.certificate.is_some() {
            return Ok((reports, outcome.certificate));
        }
    }
    Ok((reports, None))
}
