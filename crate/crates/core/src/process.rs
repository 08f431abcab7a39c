//! Seeded finite-state IID processes.
//!
//! A realization of the process is a finite word over the states, read as a
//! bounded-stream symbolic point; one step of the process is one application
//! of the shift. Sampling draws a 64-bit integer `u` from ChaCha20 seeded with
//! `seed_from_u64(seed)` and returns the least state `i` with
//! `u < ceil(C_i * 2^64)`, where `C_i` is the exact cumulative probability.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{format_rational, int, ratio, rational_from_json, Rational};
use crate::structures::{parse_distance_table, ChaoticStructure, FiniteStateStructure};
use crate::symbolic::{enumerate_words, Symbol, SymbolicPoint, Word};
use crate::verification::{
    check_diameter_condition, check_separation, Verdict, VerificationReport,
};

pub const RNG_ALGORITHM: &str = "chacha20";
pub const DEFAULT_SEED: u64 = 42;
pub const BUILTIN_NAMES: [&str; 5] = ["coin", "die", "tetra", "traffic", "five_city"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteStateProcess {
    name: String,
    probabilities: Vec<Rational>,
    structure: FiniteStateStructure,
    seed: u64,
    thresholds: Vec<u128>,
}

impl FiniteStateProcess {
    /// Validates that every probability is positive, that they sum to exactly one,
    /// and that there is one per state of `structure`.
    pub fn new(
        name: impl Into<String>,
        probabilities: Vec<Rational>,
        structure: FiniteStateStructure,
        seed: u64,
    ) -> Result<Self> {
        if probabilities.len() != structure.states() {
            return Err(Error::validation(
                "probabilities",
                format!(
                    "{} probabilities for {} states",
                    probabilities.len(),
                    structure.states()
                ),
            ));
        }
        if let Some(i) = probabilities.iter().position(|p| !p.is_positive()) {
            return Err(Error::validation(
                format!("probabilities[{i}]"),
                "every state needs positive probability",
            ));
        }
        let total: Rational = probabilities.iter().sum();
        if !total.is_one() {
            return Err(Error::validation(
                "probabilities",
                format!("must sum to 1, sum is {}", format_rational(&total)),
            ));
        }

        let scale = BigInt::one() << 64;
        let mut cumulative = Rational::zero();
        let thresholds = probabilities
            .iter()
            .map(|p| {
                cumulative += p;
                let num = cumulative.numer() * &scale;
                let den = cumulative.denom();
                let ceil: BigInt = (num + den - 1u32) / den;
                ceil.to_u128().expect("threshold at most 2^64")
            })
            .collect();

        Ok(FiniteStateProcess {
            name: name.into(),
            probabilities,
            structure,
            seed,
            thresholds,
        })
    }

    /// `p` equally likely states at unit distance from each other.
    pub fn uniform(name: impl Into<String>, p: u32, seed: u64) -> Result<Self> {
        Self::new(
            name,
            vec![ratio(1, i64::from(p)); p as usize],
            FiniteStateStructure::unit(p)?,
            seed,
        )
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn states(&self) -> usize {
        self.probabilities.len()
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.probabilities
    }

    pub fn structure(&self) -> &FiniteStateStructure {
        &self.structure
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn describe(&self) -> Value {
        json!({
            "type": "finite_state_process",
            "name": self.name,
            "probabilities": self.probabilities.iter().map(format_rational).collect::<Vec<_>>(),
            "distances": self.structure.describe()["distances"],
            "seed": self.seed,
            "rng": RNG_ALGORITHM,
        })
    }

    /// `n` IID draws; the first `n` draws never depend on how many follow.
    pub fn sample_realization(&self, n: usize) -> Result<Realization> {
        if n == 0 {
            return Err(Error::argument("realization length must be >= 1"));
        }
        let mut rng = ChaCha20Rng::seed_from_u64(self.seed);
        let symbols = (0..n)
            .map(|_| {
                let u = u128::from(rng.next_u64());
                let i = self
                    .thresholds
                    .iter()
                    .position(|&t| u < t)
                    .expect("last threshold is 2^64");
                i as Symbol + 1
            })
            .collect();
        Ok(Realization {
            process: self.name.clone(),
            rng: RNG_ALGORITHM.into(),
            seed: self.seed,
            symbols: Word::new(symbols)?,
        })
    }
}

/// One of the named processes: `coin` (2 states), `die` (6), `tetra` (4),
/// `traffic` (3), `five_city` (5). All are uniform with unit distances and
/// seeded with [`DEFAULT_SEED`]. `five_city` has no standard distribution;
/// uniform is an interpretation.
pub fn builtin_process(name: &str) -> Result<FiniteStateProcess> {
    let p = match name {
        "coin" => 2,
        "die" => 6,
        "tetra" => 4,
        "traffic" => 3,
        "five_city" => 5,
        other => {
            return Err(Error::argument(format!(
                "unknown process `{other}` (expected one of {})",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    FiniteStateProcess::uniform(name, p, DEFAULT_SEED)
}

/// `{"type":"finite_state_process","probabilities":[...],"distances":[[...]],"seed":...}`
/// with an optional `"name"`.
pub fn load_process(config: &Value) -> Result<FiniteStateProcess> {
    let obj = config
        .as_object()
        .ok_or_else(|| Error::validation("$", "process config must be a JSON object"))?;
    match obj.get("type").and_then(Value::as_str) {
        Some("finite_state_process") => {}
        Some(other) => {
            return Err(Error::validation(
                "type",
                format!("expected `finite_state_process`, found `{other}`"),
            ))
        }
        None => return Err(Error::validation("type", "missing or not a string")),
    }
    const FIELDS: [&str; 5] = ["type", "name", "probabilities", "distances", "seed"];
    if let Some(extra) = obj.keys().find(|k| !FIELDS.contains(&k.as_str())) {
        return Err(Error::validation(extra.clone(), "unknown field"));
    }
    let probabilities = obj
        .get("probabilities")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::validation("probabilities", "missing or not an array"))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            rational_from_json(v)
                .map_err(|e| Error::validation(format!("probabilities[{i}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let table = parse_distance_table(
        obj.get("distances")
            .ok_or_else(|| Error::validation("distances", "missing field"))?,
    )?;
    let seed = match obj.get("seed") {
        None => DEFAULT_SEED,
        Some(v) => v
            .as_u64()
            .ok_or_else(|| Error::validation("seed", "must be a nonnegative 64-bit integer"))?,
    };
    let name = match obj.get("name") {
        None => "custom".to_owned(),
        Some(v) => v
            .as_str()
            .ok_or_else(|| Error::validation("name", "must be a string"))?
            .to_owned(),
    };
    FiniteStateProcess::new(name, probabilities, FiniteStateStructure::new(table)?, seed)
}

/// A finite sample path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub process: String,
    pub rng: String,
    pub seed: u64,
    pub symbols: Word,
}

impl Realization {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct RealizationRepr {
    process: String,
    rng: String,
    seed: u64,
    n: usize,
    symbols: Word,
}

impl Serialize for Realization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RealizationRepr {
            process: self.process.clone(),
            rng: self.rng.clone(),
            seed: self.seed,
            n: self.symbols.len(),
            symbols: self.symbols.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Realization {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RealizationRepr::deserialize(d)?;
        if r.n != r.symbols.len() {
            return Err(serde::de::Error::custom(format!(
                "n = {} but {} symbols given",
                r.n,
                r.symbols.len()
            )));
        }
        Ok(Realization {
            process: r.process,
            rng: r.rng,
            seed: r.seed,
            symbols: r.symbols,
        })
    }
}

/// The realization as a stream whose horizon is its length.
pub fn realization_to_point(r: &Realization) -> Result<SymbolicPoint> {
    if r.is_empty() {
        return Err(Error::argument("empty realization"));
    }
    Ok(SymbolicPoint::stream(r.symbols.clone()))
}

/// Compares `shift(point)` with `tail` position by position.
pub fn compare_shift_with_tail(
    point: &SymbolicPoint,
    tail: &SymbolicPoint,
) -> Result<VerificationReport> {
    let shifted = point.shift()?;
    let len = shifted
        .horizon()
        .unwrap_or(0)
        .max(tail.horizon().unwrap_or(0));
    let mismatch = (1..=len).find(|&k| shifted.symbol_at(k).ok() != tail.symbol_at(k).ok());
    Ok(VerificationReport::new(
        "step_shift_equivalence",
        Verdict::from_bool(mismatch.is_none()),
    )
    .with_horizon(len)
    .with_evidence(json!({
        "positions_compared": len,
        "first_mismatch": mismatch,
    })))
}

/// Checks that one process step is one shift: the stream of a seeded
/// realization, shifted once, equals the stream of its tail.
pub fn step_shift_equivalence(proc: &FiniteStateProcess, n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::argument("shift equivalence needs n >= 2"));
    }
    let r = proc.sample_realization(n)?;
    let point = realization_to_point(&r)?;
    let tail = realization_to_point(&Realization {
        symbols: r.symbols.tail(),
        ..r.clone()
    })?;
    let mut report = compare_shift_with_tail(&point, &tail)?;
    report.params.insert("process".into(), proc.describe());
    report.params.insert("n".into(), json!(n));
    Ok(report)
}

/// Occurrence counts divided by the length, for states `1..=p`.
pub fn empirical_frequencies(r: &Realization, p: usize) -> Result<Vec<Rational>> {
    if r.is_empty() {
        return Err(Error::argument("empty realization"));
    }
    let mut counts = vec![0i64; p];
    for &s in r.symbols.symbols() {
        let slot = counts
            .get_mut(s as usize - 1)
            .ok_or_else(|| Error::argument(format!("symbol {s} exceeds {p} states")))?;
        *slot += 1;
    }
    let n = r.len() as i64;
    Ok(counts.into_iter().map(|c| ratio(c, n)).collect())
}

type Visits = Vec<(Word, Option<usize>)>;

/// First visit time (0-based window start) of every depth-`k` cylinder in `r`.
fn cylinder_visits(
    r: &Realization,
    p: usize,
    k: usize,
    limits: &Limits,
) -> Result<(Visits, usize)> {
    let alphabet = crate::symbolic::Alphabet::new(p as u32)?;
    let words = enumerate_words(alphabet, k, limits)?;
    let mut first: HashMap<&[Symbol], usize> = HashMap::new();
    for (t, window) in r.symbols.symbols().windows(k).enumerate() {
        first.entry(window).or_insert(t);
    }
    let windows = r.len().saturating_sub(k) + 1;
    let visits = words
        .into_iter()
        .map(|w| {
            let t = first.get(w.symbols()).copied();
            (w, t)
        })
        .collect();
    Ok((visits, windows))
}

/// Diameter condition, degree-1 separation, empirical transitivity of the
/// seeded length-`n` realization at depth `k`, and step/shift equivalence.
pub fn verify_process_chaos(
    proc: &FiniteStateProcess,
    k: usize,
    n: usize,
    limits: &Limits,
) -> Result<VerificationReport> {
    if k == 0 || n < k.max(2) {
        return Err(Error::argument(format!(
            "need k >= 1 and n >= max(k, 2); got k = {k}, n = {n}"
        )));
    }
    let st = proc.structure();
    let p = proc.states();
    limits.ensure(
        || format!("{p}^{k} depth-{k} cylinders"),
        st.alphabet().word_count(k),
    )?;

    let diameter = check_diameter_condition(st, k, &ratio(1, 100), limits)?;
    let separation = check_separation(st, 1, limits)?.report;

    let r = proc.sample_realization(n)?;
    let (visits, windows) = cylinder_visits(&r, p, k, limits)?;
    let missing: Vec<&Word> = visits
        .iter()
        .filter(|(_, t)| t.is_none())
        .map(|(w, _)| w)
        .collect();
    let min_prob = proc
        .probabilities()
        .iter()
        .min()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let expected_min = Rational::from_integer(BigInt::from(windows)) * num_traits::pow(min_prob, k);
    let warning = (expected_min < int(10)).then(|| {
        format!(
            "least likely depth-{k} cylinder is expected only {} times in {windows} windows; \
             increase n",
            format_rational(&expected_min)
        )
    });
    let first_visits: Vec<Value> = visits
        .iter()
        .map(|(w, t)| json!({"word": w, "first_visit": t}))
        .collect();
    let transitivity = VerificationReport::new(
        "empirical_transitivity",
        Verdict::from_bool(missing.is_empty()),
    )
    .param("k", k)
    .param("n", n)
    .param("seed", proc.seed())
    .with_horizon(n)
    .with_evidence(json!({
        "empirical": true,
        "cylinders": visits.len(),
        "visited": visits.len() - missing.len(),
        "missing": missing,
        "first_visits": first_visits,
        "least_expected_visits": format_rational(&expected_min),
        "warning": warning,
    }));

    let shift = step_shift_equivalence(proc, n)?;
    let checks = [diameter, separation, transitivity, shift];
    let verdict = Verdict::combine(checks.iter().map(|c| c.verdict));
    let summary: Vec<Value> = checks
        .iter()
        .map(|c| json!({"check": c.check, "verdict": c.verdict}))
        .collect();
    Ok(VerificationReport::new("process_chaos", verdict)
        .param("process", proc.describe())
        .param("k", k)
        .param("n", n)
        .param("limits", limits)
        .with_horizon(n)
        .with_evidence(json!({
            "summary": summary,
            "pseudometric": true,
            "checks": checks,
        })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let coin = builtin_process("coin").unwrap();
        assert_eq!(coin.states(), 2);
        assert_eq!(coin.probabilities(), &[ratio(1, 2), ratio(1, 2)]);
        assert_eq!(builtin_process("die").unwrap().states(), 6);
        assert_eq!(builtin_process("five_city").unwrap().states(), 5);
        assert_eq!(builtin_process("tetra").unwrap().states(), 4);
        assert_eq!(builtin_process("traffic").unwrap().states(), 3);
        assert!(builtin_process("roulette").is_err());
    }

    #[test]
    fn rejects_bad_probabilities() {
        let st = FiniteStateStructure::unit(2).unwrap();
        let e = FiniteStateProcess::new("x", vec![int(1), int(0)], st.clone(), 0).unwrap_err();
        assert!(matches!(e, Error::Validation { ref path, .. } if path == "probabilities[1]"));
        let e = FiniteStateProcess::new("x", vec![ratio(1, 2), ratio(1, 3)], st.clone(), 0)
            .unwrap_err();
        assert!(matches!(e, Error::Validation { ref path, .. } if path == "probabilities"));
        assert!(FiniteStateProcess::new("x", vec![int(1)], st, 0).is_err());
    }

    #[test]
    fn sampling_is_reproducible_and_prefix_coherent() {
        let coin = builtin_process("coin").unwrap();
        let a = coin.sample_realization(5).unwrap();
        assert_eq!(a, coin.sample_realization(5).unwrap());
        let long = coin.sample_realization(50).unwrap();
        assert_eq!(long.symbols.prefix(5), a.symbols);
        assert!(coin.sample_realization(0).is_err());
        let one = coin.sample_realization(1).unwrap();
        assert!((1..=2).contains(&one.symbols.symbols()[0]));
    }

    #[test]
    fn rare_symbol_frequency() {
        let st = FiniteStateStructure::unit(2).unwrap();
        let proc = FiniteStateProcess::new("rare", vec![ratio(999, 1000), ratio(1, 1000)], st, 42)
            .unwrap();
        let r = proc.sample_realization(10_000).unwrap();
        let f = empirical_frequencies(&r, 2).unwrap();
        // expected 10 occurrences, sd ~ 3.2
        assert!(
            f[1] > int(0) && f[1] < ratio(25, 10_000),
            "{}",
            format_rational(&f[1])
        );
    }

    #[test]
    fn frequencies_examples() {
        let mk = |v: &[u32]| Realization {
            process: "t".into(),
            rng: RNG_ALGORITHM.into(),
            seed: 0,
            symbols: Word::new(v.to_vec()).unwrap(),
        };
        assert_eq!(
            empirical_frequencies(&mk(&[1, 1, 2, 2]), 2).unwrap(),
            vec![ratio(1, 2), ratio(1, 2)]
        );
        assert_eq!(
            empirical_frequencies(&mk(&[1, 1, 1]), 2).unwrap(),
            vec![int(1), int(0)]
        );
        assert!(empirical_frequencies(&mk(&[3]), 2).is_err());
    }

    #[test]
    fn realization_point() {
        let r = Realization {
            process: "t".into(),
            rng: RNG_ALGORITHM.into(),
            seed: 0,
            symbols: Word::new(vec![1, 2, 2]).unwrap(),
        };
        let x = realization_to_point(&r).unwrap();
        assert_eq!(x.horizon(), Some(3));
        assert_eq!(
            x.shift().unwrap(),
            SymbolicPoint::stream(Word::new(vec![2, 2]).unwrap())
        );
        assert_eq!(x.cylinder_of(2).unwrap(), Word::new(vec![1, 2]).unwrap());
        let empty = Realization {
            symbols: Word::empty(),
            ..r
        };
        assert!(realization_to_point(&empty).is_err());
    }

    #[test]
    fn shift_equivalence() {
        let coin = builtin_process("coin").unwrap().with_seed(7);
        assert!(step_shift_equivalence(&coin, 100).unwrap().passed());
        assert!(step_shift_equivalence(&builtin_process("die").unwrap(), 2)
            .unwrap()
            .passed());
        assert!(step_shift_equivalence(&coin, 1).is_err());

        let x = SymbolicPoint::stream(Word::new(vec![1, 2, 1, 1]).unwrap());
        let bad_tail = SymbolicPoint::stream(Word::new(vec![2, 2, 1]).unwrap());
        let r = compare_shift_with_tail(&x, &bad_tail).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.evidence["first_mismatch"], 2);
    }

    #[test]
    fn load_process_config() {
        let v: Value = serde_json::from_str(
            r#"{"type":"finite_state_process","probabilities":["1/4",0.75],"distances":[[0,1],[1,0]],"seed":9}"#,
        )
        .unwrap();
        let p = load_process(&v).unwrap();
        assert_eq!(p.seed(), 9);
        assert_eq!(p.probabilities()[1], ratio(3, 4));
        let bad: Value = serde_json::from_str(
            r#"{"type":"finite_state_process","probabilities":[1,0],"distances":[[0,1],[1,0]]}"#,
        )
        .unwrap();
        assert!(
            matches!(load_process(&bad), Err(Error::Validation { ref path, .. }) if path == "probabilities[1]")
        );
    }

    #[test]
    fn realization_json_shape() {
        let r = builtin_process("coin")
            .unwrap()
            .sample_realization(3)
            .unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["n", "process", "rng", "seed", "symbols"]);
        assert_eq!(v["n"], 3);
        assert_eq!(serde_json::from_value::<Realization>(v).unwrap(), r);
        let bad = json!({"process":"c","rng":"chacha20","seed":1,"n":2,"symbols":[1]});
        assert!(serde_json::from_value::<Realization>(bad).is_err());
    }

    #[test]
    fn missing_cylinder_is_named() {
        let coin = builtin_process("coin").unwrap();
        let r = verify_process_chaos(&coin, 3, 6, &Limits::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let t = &r.evidence["checks"][2];
        assert_eq!(t["check"], "empirical_transitivity");
        assert!(!t["evidence"]["missing"].as_array().unwrap().is_empty());
        assert!(t["evidence"]["warning"].is_string());
    }
}
