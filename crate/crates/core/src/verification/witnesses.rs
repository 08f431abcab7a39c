//! Constructions behind the chaos ingredients: periodic approximations,
//! a transitive orbit, sensitivity partners, Li-Yorke pairs, and returns to
//! cylinders. Every constructor replays its own claims before reporting.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde_json::{json, Value};

use super::conditions::{max_diameter_at, SeparationCertificate};
use super::report::{Verdict, VerificationReport};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{format_rational, Rational};
use crate::structures::ChaoticStructure;
use crate::symbolic::{
    concat_point, enumerate_words, periodic_point, transitive_prefix_with, PrefixBackend,
    SymbolicPoint, Word,
};

/// Smallest depth `k >= min_depth` with `D_k < eps`.
fn depth_below(
    st: &dyn ChaoticStructure,
    eps: &Rational,
    min_depth: usize,
    limits: &Limits,
) -> Result<(usize, Rational)> {
    for k in min_depth..=limits.max_depth {
        let (d, _) = max_diameter_at(st, k, limits)?;
        if &d < eps {
            return Ok((k, d));
        }
    }
    Err(Error::Resource {
        what: format!(
            "a depth whose cylinder diameters are below {}",
            format_rational(eps)
        ),
        required: format!("depth > {}", limits.max_depth),
        cap: limits.max_depth as u64,
    })
}

/// Exact distance, or `None` where the structure can only bound it (bounded
/// streams on geometric structures).
fn exact_distance(
    st: &dyn ChaoticStructure,
    x: &SymbolicPoint,
    y: &SymbolicPoint,
) -> Result<Option<Rational>> {
    match st.point_distance(x, y) {
        Ok(d) => Ok(Some(d)),
        Err(Error::Capability { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn opt_rational(r: &Option<Rational>) -> Value {
    r.as_ref()
        .map_or(Value::Null, |r| Value::String(format_rational(r)))
}

fn require_positive(eps: &Rational) -> Result<()> {
    if !eps.is_positive() {
        return Err(Error::argument("eps must be positive"));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct PeriodicApproximation {
    pub point: SymbolicPoint,
    pub depth: usize,
    pub report: VerificationReport,
}

/// The periodic point repeating `x`'s first `k` symbols, with the least `k`
/// such that depth-`k` cylinders have diameter below `eps`.
pub fn periodic_approximation(
    st: &dyn ChaoticStructure,
    x: &SymbolicPoint,
    eps: &Rational,
    limits: &Limits,
) -> Result<PeriodicApproximation> {
    require_positive(eps)?;
    st.alphabet().check_point(x)?;
    let (k, dk) = depth_below(st, eps, 1, limits)?;
    let block = x.cylinder_of(k)?;
    let p = periodic_point(&block)?;

    let distance = exact_distance(st, x, &p)?;
    let periodic = p.shift_n(k)? == p;
    let shares_cylinder = p.in_cylinder(&block)?;
    let within = distance.as_ref().is_none_or(|d| d <= &dk);
    let verdict = Verdict::from_bool(periodic && shares_cylinder && within && &dk < eps);

    let report = VerificationReport::new("periodic_approximation", verdict)
        .param("structure", st.describe())
        .param("target", x)
        .param("eps", format_rational(eps))
        .with_horizon(k)
        .with_evidence(json!({
            "depth": k,
            "block": block,
            "periodic_point": p,
            "max_diameter_at_depth": format_rational(&dk),
            "distance": opt_rational(&distance),
            "distance_bound": format_rational(&dk),
            "shift_k_fixes_point": periodic,
            "same_cylinder": shares_cylinder,
        }));
    Ok(PeriodicApproximation {
        point: p,
        depth: k,
        report,
    })
}

#[derive(Clone, Debug)]
pub struct TransitiveWitness {
    pub point: SymbolicPoint,
    pub prefix: Word,
    /// First time each word of length `1..=k` is visited.
    pub schedule: BTreeMap<Word, usize>,
    pub report: VerificationReport,
}

/// An orbit visiting every cylinder of depth `<= k`: the transitive prefix
/// followed by the constant point `1, 1, …`.
pub fn transitive_witness(
    st: &dyn ChaoticStructure,
    k: usize,
    limits: &Limits,
) -> Result<TransitiveWitness> {
    transitive_witness_with(st, k, limits, PrefixBackend::Lexicographic)
}

pub fn transitive_witness_with(
    st: &dyn ChaoticStructure,
    k: usize,
    limits: &Limits,
    backend: PrefixBackend,
) -> Result<TransitiveWitness> {
    let alphabet = st.alphabet();
    let prefix = transitive_prefix_with(alphabet, k, limits, backend)?;
    let point = concat_point(&prefix, &periodic_point(&Word::new(vec![1])?)?);

    let mut schedule = BTreeMap::new();
    let mut missing = Vec::new();
    let mut replay_failures = Vec::new();
    for j in 1..=k {
        for w in enumerate_words(alphabet, j, limits)? {
            match prefix.find_block(&w) {
                Some(t) => {
                    if point.shift_n(t)?.cylinder_of(j)? != w {
                        replay_failures.push(w.clone());
                    }
                    schedule.insert(w, t);
                }
                None => missing.push(w),
            }
        }
    }
    let verdict = Verdict::from_bool(missing.is_empty() && replay_failures.is_empty());
    let entries: Vec<Value> = schedule
        .iter()
        .map(|(w, t)| json!({"word": w, "time": t}))
        .collect();
    let report = VerificationReport::new("transitive_witness", verdict)
        .param("m", alphabet.size())
        .param("k", k)
        .param("backend", backend)
        .with_horizon(prefix.len())
        .with_evidence(json!({
            "point": point,
            "prefix_length": prefix.len(),
            "schedule": entries,
            "last_first_visit": schedule.values().max(),
            "missing": missing,
            "replay_failures": replay_failures,
        }));
    Ok(TransitiveWitness {
        point,
        prefix,
        schedule,
        report,
    })
}

#[derive(Clone, Debug)]
pub struct SensitivityWitness {
    /// The nearby point.
    pub partner: SymbolicPoint,
    /// Shift count at which the two orbits are separated.
    pub time: usize,
    pub report: VerificationReport,
}

/// A point within `eps` of `x` whose orbit is pushed `epsilon0` away after `k` steps.
///
/// `y` copies `x`'s first `k` symbols (so both lie in one cylinder of diameter
/// `D_k < eps`), then the certificate's partner of `x`'s next block, then `1, 1, …`.
pub fn sensitivity_witness(
    st: &dyn ChaoticStructure,
    x: &SymbolicPoint,
    eps: &Rational,
    cert: &SeparationCertificate,
    limits: &Limits,
) -> Result<SensitivityWitness> {
    require_positive(eps)?;
    st.alphabet().check_point(x)?;
    let expected = st.alphabet().word_count(cert.degree);
    if expected != Some(cert.witness_map.len() as u64) || !cert.epsilon0.is_positive() {
        return Err(Error::Precondition(format!(
            "separation certificate of degree {} does not cover this structure's alphabet",
            cert.degree
        )));
    }
    let (k, dk) = depth_below(st, eps, 0, limits).map_err(|e| match e {
        Error::Resource { .. } => Error::Precondition(format!(
            "no depth up to {} has cylinder diameter below {}",
            limits.max_depth,
            format_rational(eps)
        )),
        other => other,
    })?;
    let degree = cert.degree;
    x.require_depth(k + degree)?;

    let head = x.cylinder_of(k)?;
    let block = x.shift_n(k)?.cylinder_of(degree)?;
    let partner_block = cert
        .witness(&block)
        .ok_or_else(|| Error::Precondition(format!("certificate has no witness for {block}")))?
        .clone();
    let y = concat_point(
        &head.concat(&partner_block),
        &periodic_point(&Word::new(vec![1])?)?,
    );

    let closeness = exact_distance(st, x, &y)?;
    let gap = st.cylinder_distance(&block, &partner_block)?;
    let separation = exact_distance(st, &x.shift_n(k)?, &y.shift_n(k)?)?;
    let close_ok = closeness.as_ref().is_none_or(|d| d <= &dk) && &dk < eps;
    let gap_ok = gap >= cert.epsilon0;
    let sep_ok = separation.as_ref().is_none_or(|d| d >= &gap);
    let verdict = Verdict::from_bool(close_ok && gap_ok && sep_ok && y != *x);

    let report = VerificationReport::new("sensitivity_witness", verdict)
        .param("structure", st.describe())
        .param("target", x)
        .param("eps", format_rational(eps))
        .param("degree", degree)
        .param("epsilon0", format_rational(&cert.epsilon0))
        .with_horizon(k + degree)
        .with_evidence(json!({
            "depth": k,
            "max_diameter_at_depth": format_rational(&dk),
            "partner": y,
            "closeness_distance": opt_rational(&closeness),
            "separation_time": k,
            "separated_blocks": [block, partner_block],
            "cylinder_distance": format_rational(&gap),
            "separation_distance": opt_rational(&separation),
            "pseudometric": !st.capabilities().is_metric,
        }));
    Ok(SensitivityWitness {
        partner: y,
        time: k,
        report,
    })
}

#[derive(Clone, Debug)]
pub struct LiYorkePair {
    pub x: SymbolicPoint,
    pub y: SymbolicPoint,
    pub report: VerificationReport,
}

/// Two points built from alternating agreement and disagreement blocks.
///
/// Block pair `j` has an agreement block of length `2^j` (both points read
/// symbol 1) followed by a disagreement block of length `2^j`, where `x` runs
/// through the depth-`n` words in order and `y` reads each one's certificate
/// witness. `j` starts at the least value with `2^j >= n`. Blocks are laid
/// down until one starts past `horizon`; both points then continue with
/// `1, 1, …`, so the reported bounds speak only about times `<= horizon`.
pub fn li_yorke_pair(
    st: &dyn ChaoticStructure,
    cert: &SeparationCertificate,
    horizon: usize,
    limits: &Limits,
) -> Result<LiYorkePair> {
    let degree = cert.degree;
    if !cert.epsilon0.is_positive() || degree == 0 {
        return Err(Error::Precondition(
            "certificate must have positive epsilon0".into(),
        ));
    }
    let first_j = (1..usize::BITS as usize)
        .find(|&j| 1usize << j >= degree)
        .expect("degree fits in usize");
    let first_cycle = 2usize << first_j;
    if horizon < first_cycle {
        return Err(Error::argument(format!(
            "horizon {horizon} cannot hold one agreement+disagreement cycle of length {first_cycle}"
        )));
    }
    let words = enumerate_words(st.alphabet(), degree, limits)?;
    let partners = words
        .iter()
        .map(|w| {
            cert.witness(w)
                .cloned()
                .ok_or_else(|| Error::Precondition(format!("certificate has no witness for {w}")))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut blocks = Vec::new();
    let mut j = first_j;
    while xs.len() <= horizon {
        let len = 1usize << j;
        blocks.push(json!({"kind": "agreement", "start": xs.len(), "length": len}));
        xs.extend(std::iter::repeat_n(1, len));
        ys.extend(std::iter::repeat_n(1, len));
        blocks.push(json!({"kind": "disagreement", "start": xs.len(), "length": len}));
        let mut filled = 0;
        for (w, v) in words.iter().zip(&partners).cycle() {
            if filled >= len {
                break;
            }
            let take = degree.min(len - filled);
            xs.extend_from_slice(&w.symbols()[..take]);
            ys.extend_from_slice(&v.symbols()[..take]);
            filled += take;
        }
        j += 1;
    }
    let tail = periodic_point(&Word::new(vec![1])?)?;
    let x = concat_point(&Word::new(xs)?, &tail);
    let y = concat_point(&Word::new(ys)?, &tail);
    debug_assert_ne!(x, y);

    let distances = st.orbit_distances(&x, &y, horizon)?;
    let (min_time, min_d) = distances
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)))
        .expect("horizon >= 0");
    let (max_time, max_d) = distances
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("horizon >= 0");

    let mut longest = 0;
    let mut minima = Vec::new();
    for b in &blocks {
        let (start, len) = (
            b["start"].as_u64().unwrap() as usize,
            b["length"].as_u64().unwrap() as usize,
        );
        if b["kind"] != "agreement" || start > horizon {
            continue;
        }
        longest = longest.max(len);
        let end = (start + len - 1).min(horizon);
        let m = distances[start..=end].iter().min().expect("nonempty block");
        minima.push(
            json!({"start": start, "length": len, "min_distance": format_rational(&m.reduced())}),
        );
    }
    let (dl, _) = max_diameter_at(st, longest, limits)?;
    let proximal = min_d <= &dl;
    let separated = max_d >= &cert.epsilon0;
    let verdict = Verdict::from_bool(proximal && separated);

    let report = VerificationReport::new("li_yorke_pair", verdict)
        .param("structure", st.describe())
        .param("degree", degree)
        .param("epsilon0", format_rational(&cert.epsilon0))
        .param("horizon", horizon)
        .with_horizon(horizon)
        .with_evidence(json!({
            "x": x,
            "y": y,
            "blocks": blocks,
            "min_distance": format_rational(&min_d.reduced()),
            "min_time": min_time,
            "longest_agreement_block": longest,
            "max_diameter_at_longest_agreement": format_rational(&dl),
            "max_distance": format_rational(&max_d.reduced()),
            "max_time": max_time,
            "agreement_block_minima": minima,
            "proximal_bound_holds": proximal,
            "separation_bound_holds": separated,
            "pseudometric": !st.capabilities().is_metric,
            "scope": "bounds cover times 0..=horizon; past the last block both points read 1, 1, ...",
        }));
    Ok(LiYorkePair { x, y, report })
}

/// Least return time to each depth-`k` cylinder around `x`, `k = 1..=max_depth`.
///
/// Passes when every depth returns within `horizon`; a missing return is
/// inconclusive, never a refutation.
pub fn poisson_return_check(
    x: &SymbolicPoint,
    max_depth: usize,
    horizon: usize,
) -> Result<VerificationReport> {
    if max_depth == 0 || horizon == 0 {
        return Err(Error::argument("max_depth and horizon must be >= 1"));
    }
    x.require_depth(horizon + max_depth)?;
    let returns: Vec<Option<usize>> = (1..=max_depth)
        .map(|k| (1..=horizon).find(|&n| (0..k).all(|i| x.symbol0(n + i) == x.symbol0(i))))
        .collect();
    let verdict = if returns.iter().all(Option::is_some) {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    let rows: Vec<Value> = returns
        .iter()
        .enumerate()
        .map(|(i, t)| json!({"depth": i + 1, "return_time": t}))
        .collect();
    let absent: Vec<usize> = returns
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_none())
        .map(|(i, _)| i + 1)
        .collect();
    Ok(VerificationReport::new("poisson_return", verdict)
        .param("point", x)
        .param("max_depth", max_depth)
        .param("horizon", horizon)
        .with_horizon(horizon)
        .with_evidence(json!({
            "returns": rows,
            "no_return_within_horizon": absent,
            "scope": "finite-horizon returns to cylinders; Poisson stability itself is not established",
        })))
}
