//! Concrete geometries on the symbolic label set.
//!
//! A [`ChaoticStructure`] assigns distances to points and cylinders. Three
//! reference instances ship with the crate:
//!
//! * [`MAdicIntervalStructure`]: word `w` is the closed interval of `[0, 1]`
//!   read off its base-`m` digits, so depth-`n` cylinders have length `m^-n`.
//! * [`CantorStructure`]: the middle-thirds construction on two symbols.
//! * [`FiniteStateStructure`]: a finite state space where a label's distance
//!   depends only on its first symbol. This is a pseudometric: distinct
//!   labels sharing their first symbol are at distance zero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{format_rational, inverse_power, rational_from_json, Interval, Rational};
use crate::symbolic::{Alphabet, EventuallyPeriodic, Symbol, SymbolicPoint, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Capabilities {
    /// Distance zero implies identical labels.
    pub is_metric: bool,
    pub has_exact_diameters: bool,
    /// Labels evaluate to coordinates in `[0, 1]` (see [`ChaoticStructure::eval_point`]).
    pub geometric: bool,
}

pub trait ChaoticStructure: Send + Sync + fmt::Debug {
    /// Short identifier matching the config `type` field.
    fn kind(&self) -> &'static str;

    fn alphabet(&self) -> Alphabet;

    fn capabilities(&self) -> Capabilities;

    /// The config document that reproduces this structure.
    fn describe(&self) -> Value;

    fn point_distance(&self, x: &SymbolicPoint, y: &SymbolicPoint) -> Result<Rational>;

    fn cylinder_diameter(&self, w: &Word) -> Result<Rational>;

    /// Infimum distance between the cylinders of two equal-length words.
    fn cylinder_distance(&self, a: &Word, b: &Word) -> Result<Rational>;

    /// Depth-`depth` cylinder interval containing the coordinate of `x`.
    fn eval_point(&self, _x: &SymbolicPoint, _depth: usize) -> Result<Interval> {
        Err(Error::Capability {
            structure: self.kind().into(),
            message: "points do not evaluate to coordinates".into(),
        })
    }

    /// Maximum cylinder diameter at `depth`, when known in closed form.
    fn max_diameter_closed_form(&self, _depth: usize) -> Option<Rational> {
        None
    }

    /// `d(shift^n x, shift^n y)` for `n = 0..=horizon`.
    ///
    /// Entries may be unreduced fractions; compare them, or call `reduced()`
    /// before printing.
    fn orbit_distances(
        &self,
        x: &SymbolicPoint,
        y: &SymbolicPoint,
        horizon: usize,
    ) -> Result<Vec<Rational>> {
        (0..=horizon)
            .map(|n| self.point_distance(&x.shift_n(n)?, &y.shift_n(n)?))
            .collect()
    }
}

/// Nested cylinders to coordinates: symbol `s` contributes digit `digits[s-1]`
/// in base `base`, and a depth-`n` cylinder has length `base^-n`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct DigitExpansion {
    base: u32,
    digits: Vec<u32>,
}

impl DigitExpansion {
    fn digit(&self, s: Symbol) -> BigInt {
        BigInt::from(self.digits[s as usize - 1])
    }

    fn interval(&self, w: &Word) -> Interval {
        let base = BigInt::from(self.base);
        let numer = w
            .symbols()
            .iter()
            .fold(BigInt::zero(), |acc, &s| acc * &base + self.digit(s));
        let denom = num_traits::pow(base, w.len());
        let lo = Rational::new(numer.clone(), denom.clone());
        let hi = Rational::new(numer + 1, denom);
        Interval::new(lo, hi)
    }

    /// Exact coordinate of an eventually periodic label.
    fn value(&self, p: &EventuallyPeriodic) -> Rational {
        let base = BigInt::from(self.base);
        let horner = |syms: &[Symbol]| {
            syms.iter()
                .fold(BigInt::zero(), |acc, &s| acc * &base + self.digit(s))
        };
        let pre = horner(p.preperiod());
        let per = horner(p.period());
        let cycle = num_traits::pow(base.clone(), p.period().len()) - 1;
        let scale = num_traits::pow(base, p.preperiod().len());
        Rational::new(pre * &cycle + per, scale * cycle)
    }

    fn distance(&self, kind: &str, x: &SymbolicPoint, y: &SymbolicPoint) -> Result<Rational> {
        match (x.as_periodic(), y.as_periodic()) {
            (Some(a), Some(b)) => Ok((self.value(a) - self.value(b)).abs()),
            _ => Err(Error::Capability {
                structure: kind.into(),
                message: "exact distance needs eventually periodic points; \
                          use distance_enclosure for bounded streams"
                    .into(),
            }),
        }
    }

    /// Uses `D(n) = base * D(n-1) - (c(x_n) - c(y_n))` on a common denominator.
    fn orbit_distances(
        &self,
        kind: &str,
        x: &SymbolicPoint,
        y: &SymbolicPoint,
        horizon: usize,
    ) -> Result<Vec<Rational>> {
        let (Some(a), Some(b)) = (x.as_periodic(), y.as_periodic()) else {
            return Err(self.distance(kind, x, y).unwrap_err());
        };
        let d0 = self.value(a) - self.value(b);
        let denom = d0.denom().clone();
        let base = BigInt::from(self.base);
        let mut numer = d0.numer().clone();
        let mut out = Vec::with_capacity(horizon + 1);
        out.push(Rational::new_raw(numer.abs(), denom.clone()));
        for i in 0..horizon {
            let delta = self.digit(x.symbol0(i)) - self.digit(y.symbol0(i));
            numer = numer * &base - &denom * delta;
            out.push(Rational::new_raw(numer.abs(), denom.clone()));
        }
        Ok(out)
    }
}

/// `[0, 1]` cut into `m` equal pieces per level: word `(i_1..i_n)` is
/// `[v, v + m^-n]` with `v = sum (i_k - 1) m^-k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MAdicIntervalStructure {
    alphabet: Alphabet,
    expansion: DigitExpansion,
}

impl MAdicIntervalStructure {
    pub fn new(m: u32) -> Result<Self> {
        let alphabet = Alphabet::new(m)?;
        Ok(MAdicIntervalStructure {
            alphabet,
            expansion: DigitExpansion {
                base: m,
                digits: (0..m).collect(),
            },
        })
    }

    pub fn interval(&self, w: &Word) -> Result<Interval> {
        self.alphabet.check_word(w)?;
        Ok(self.expansion.interval(w))
    }
}

/// Middle-thirds Cantor set: symbol 1 keeps the left third, symbol 2 the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CantorStructure {
    expansion: DigitExpansion,
}

impl Default for CantorStructure {
    fn default() -> Self {
        CantorStructure {
            expansion: DigitExpansion {
                base: 3,
                digits: vec![0, 2],
            },
        }
    }
}

impl CantorStructure {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn interval(&self, w: &Word) -> Result<Interval> {
        self.alphabet().check_word(w)?;
        Ok(self.expansion.interval(w))
    }
}

macro_rules! geometric_impl {
    ($ty:ty, $kind:literal, $metric:expr) => {
        impl ChaoticStructure for $ty {
            fn kind(&self) -> &'static str {
                $kind
            }

            fn alphabet(&self) -> Alphabet {
                Alphabet::new(self.expansion.digits.len() as u32)
                    .expect("validated at construction")
            }

            fn capabilities(&self) -> Capabilities {
                Capabilities {
                    is_metric: $metric,
                    has_exact_diameters: true,
                    geometric: true,
                }
            }

            fn describe(&self) -> Value {
                describe_geometric($kind, self.alphabet())
            }

            fn point_distance(&self, x: &SymbolicPoint, y: &SymbolicPoint) -> Result<Rational> {
                self.alphabet().check_point(x)?;
                self.alphabet().check_point(y)?;
                self.expansion.distance($kind, x, y)
            }

            fn cylinder_diameter(&self, w: &Word) -> Result<Rational> {
                Ok(self.interval(w)?.width())
            }

            fn cylinder_distance(&self, a: &Word, b: &Word) -> Result<Rational> {
                check_equal_lengths(a, b)?;
                Ok(self.interval(a)?.gap(&self.interval(b)?))
            }

            fn eval_point(&self, x: &SymbolicPoint, depth: usize) -> Result<Interval> {
                self.interval(&x.cylinder_of(depth)?)
            }

            fn max_diameter_closed_form(&self, depth: usize) -> Option<Rational> {
                Some(inverse_power(self.expansion.base, depth))
            }

            fn orbit_distances(
                &self,
                x: &SymbolicPoint,
                y: &SymbolicPoint,
                horizon: usize,
            ) -> Result<Vec<Rational>> {
                self.alphabet().check_point(x)?;
                self.alphabet().check_point(y)?;
                self.expansion.orbit_distances($kind, x, y, horizon)
            }
        }
    };
}

// Dyadic-type rationals have two m-adic labels at distance zero.
geometric_impl!(MAdicIntervalStructure, "madic", false);
geometric_impl!(CantorStructure, "cantor", true);

fn describe_geometric(kind: &str, alphabet: Alphabet) -> Value {
    match kind {
        "madic" => json!({"type": "madic", "m": alphabet.size()}),
        _ => json!({"type": kind}),
    }
}

fn check_equal_lengths(a: &Word, b: &Word) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::argument(format!(
            "cylinder distance needs equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// States `s_1..s_p` with a distance table; `d(x, y) = dist[x_1][y_1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteStateStructure {
    alphabet: Alphabet,
    distances: Vec<Vec<Rational>>,
}

impl FiniteStateStructure {
    /// Validates a `p x p` table: symmetric, zero diagonal, positive off-diagonal.
    pub fn new(distances: Vec<Vec<Rational>>) -> Result<Self> {
        let p = distances.len();
        let alphabet = Alphabet::new(p as u32).map_err(|_| {
            Error::validation("distances", format!("need at least 2 states, got {p}"))
        })?;
        for (i, row) in distances.iter().enumerate() {
            if row.len() != p {
                return Err(Error::validation(
                    format!("distances[{i}]"),
                    format!("row has {} entries, expected {p}", row.len()),
                ));
            }
        }
        for (i, row) in distances.iter().enumerate() {
            for (j, d) in row.iter().enumerate() {
                let path = format!("distances[{i}][{j}]");
                if d.is_negative() {
                    return Err(Error::validation(path, "distance must be nonnegative"));
                }
                if i == j && !d.is_zero() {
                    return Err(Error::validation(path, "diagonal distance must be zero"));
                }
                if i != j && d.is_zero() {
                    return Err(Error::validation(
                        path,
                        "off-diagonal distance must be positive",
                    ));
                }
                if *d != distances[j][i] {
                    return Err(Error::validation(
                        path,
                        format!("table is not symmetric: differs from distances[{j}][{i}]"),
                    ));
                }
            }
        }
        Ok(FiniteStateStructure {
            alphabet,
            distances,
        })
    }

    /// `p` states, every pair of distinct states at distance one.
    pub fn unit(p: u32) -> Result<Self> {
        let p = p as usize;
        Self::new(
            (0..p)
                .map(|i| {
                    (0..p)
                        .map(|j| {
                            if i == j {
                                Rational::zero()
                            } else {
                                Rational::one()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn states(&self) -> usize {
        self.distances.len()
    }

    pub fn state_distance(&self, i: Symbol, j: Symbol) -> &Rational {
        &self.distances[i as usize - 1][j as usize - 1]
    }

    pub fn distances(&self) -> &[Vec<Rational>] {
        &self.distances
    }

    fn max_distance(&self) -> Rational {
        self.distances
            .iter()
            .flatten()
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn first_symbol(&self, x: &SymbolicPoint) -> Result<Symbol> {
        let s = x.symbol_at(1)?;
        if !self.alphabet.contains(s) {
            return Err(Error::argument(format!(
                "symbol {s} is not a state of a {}-state structure",
                self.states()
            )));
        }
        Ok(s)
    }
}

impl ChaoticStructure for FiniteStateStructure {
    fn kind(&self) -> &'static str {
        "finite_state"
    }

    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            is_metric: false,
            has_exact_diameters: true,
            geometric: false,
        }
    }

    fn describe(&self) -> Value {
        let table: Vec<Vec<String>> = self
            .distances
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect();
        json!({"type": "finite_state", "distances": table})
    }

    fn point_distance(&self, x: &SymbolicPoint, y: &SymbolicPoint) -> Result<Rational> {
        Ok(self
            .state_distance(self.first_symbol(x)?, self.first_symbol(y)?)
            .clone())
    }

    fn cylinder_diameter(&self, w: &Word) -> Result<Rational> {
        self.alphabet.check_word(w)?;
        Ok(if w.is_empty() {
            self.max_distance()
        } else {
            Rational::zero()
        })
    }

    fn cylinder_distance(&self, a: &Word, b: &Word) -> Result<Rational> {
        check_equal_lengths(a, b)?;
        self.alphabet.check_word(a)?;
        self.alphabet.check_word(b)?;
        Ok(match (a.symbols().first(), b.symbols().first()) {
            (Some(&i), Some(&j)) => self.state_distance(i, j).clone(),
            _ => Rational::zero(),
        })
    }

    fn max_diameter_closed_form(&self, depth: usize) -> Option<Rational> {
        Some(if depth == 0 {
            self.max_distance()
        } else {
            Rational::zero()
        })
    }

    fn orbit_distances(
        &self,
        x: &SymbolicPoint,
        y: &SymbolicPoint,
        horizon: usize,
    ) -> Result<Vec<Rational>> {
        x.require_depth(horizon + 1)?;
        y.require_depth(horizon + 1)?;
        (0..=horizon)
            .map(|i| {
                let (a, b) = (x.symbol0(i), y.symbol0(i));
                if !self.alphabet.contains(a) || !self.alphabet.contains(b) {
                    return Err(Error::argument(format!(
                        "symbol outside 1..={}",
                        self.states()
                    )));
                }
                Ok(self.state_distance(a, b).clone())
            })
            .collect()
    }
}

/// Bounds on `d(x, y)` from the depth-`depth` cylinders of both points.
///
/// For geometric structures this works on bounded streams, where the exact
/// distance is unavailable; for other structures it is the exact distance.
pub fn distance_enclosure(
    st: &dyn ChaoticStructure,
    x: &SymbolicPoint,
    y: &SymbolicPoint,
    depth: usize,
) -> Result<Interval> {
    if st.capabilities().geometric {
        let a = st.eval_point(x, depth)?;
        let b = st.eval_point(y, depth)?;
        Ok(Interval::new(a.gap(&b), a.span(&b)))
    } else {
        let d = st.point_distance(x, y)?;
        Ok(Interval::new(d.clone(), d))
    }
}

/// Builds a validated structure from its JSON config.
///
/// ```json
/// {"type":"madic","m":2} | {"type":"cantor"} | {"type":"finite_state","distances":[[0,1],[1,0]]}
/// ```
pub fn load_structure(config: &Value) -> Result<Box<dyn ChaoticStructure>> {
    let obj = config
        .as_object()
        .ok_or_else(|| Error::validation("$", "structure config must be a JSON object"))?;
    let ty = obj
        .get("type")
        .ok_or_else(|| Error::validation("type", "missing field"))?
        .as_str()
        .ok_or_else(|| Error::validation("type", "must be a string"))?;
    let allowed: &[&str] = match ty {
        "madic" => &["type", "m"],
        "cantor" => &["type"],
        "finite_state" => &["type", "distances"],
        "custom" => {
            return Err(Error::validation(
                "type",
                "`custom` is reserved; implement ChaoticStructure in code instead",
            ))
        }
        other => {
            return Err(Error::validation(
                "type",
                format!("unknown structure type `{other}` (expected madic, cantor, finite_state)"),
            ))
        }
    };
    if let Some(extra) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::validation(extra.clone(), "unknown field"));
    }
    match ty {
        "madic" => {
            let m = obj
                .get("m")
                .ok_or_else(|| Error::validation("m", "missing field"))?
                .as_u64()
                .filter(|&m| (2..=u64::from(u32::MAX)).contains(&m))
                .ok_or_else(|| Error::validation("m", "must be an integer >= 2"))?;
            Ok(Box::new(MAdicIntervalStructure::new(m as u32)?))
        }
        "cantor" => Ok(Box::new(CantorStructure::new())),
        _ => {
            let table = parse_distance_table(
                obj.get("distances")
                    .ok_or_else(|| Error::validation("distances", "missing field"))?,
            )?;
            Ok(Box::new(FiniteStateStructure::new(table)?))
        }
    }
}

pub fn load_structure_str(config: &str) -> Result<Box<dyn ChaoticStructure>> {
    let v: Value = serde_json::from_str(config)
        .map_err(|e| Error::validation("$", format!("invalid JSON: {e}")))?;
    load_structure(&v)
}

pub(crate) fn parse_distance_table(v: &Value) -> Result<Vec<Vec<Rational>>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::validation("distances", "must be an array of rows"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.as_array()
                .ok_or_else(|| Error::validation(format!("distances[{i}]"), "must be an array"))?
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    rational_from_json(x).map_err(|e| {
                        Error::validation(format!("distances[{i}][{j}]"), e.to_string())
                    })
                })
                .collect()
        })
        .collect()
}
