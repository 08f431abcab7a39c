//! Alphabets, words, symbolic points and the shift map.
//!
//! Symbols are the integers `1..=m`. An infinite point is kept exactly as a
//! preperiod followed by an endlessly repeated period, always in canonical form
//! (minimal period, then minimal preperiod) so that derived equality is equality
//! of sequences. Points that are not eventually periodic are carried as
//! [`BoundedStream`]s whose symbols are known only up to a declared horizon.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;

pub type Symbol = u32;

/// The index set `{1, ..., m}` with `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Alphabet(u32);

impl Alphabet {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::argument(format!(
                "alphabet needs at least 2 symbols, got {m}"
            )));
        }
        Ok(Alphabet(m))
    }

    pub fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, s: Symbol) -> bool {
        (1..=self.0).contains(&s)
    }

    pub fn check_word(self, w: &Word) -> Result<()> {
        match w.symbols().iter().position(|&s| !self.contains(s)) {
            None => Ok(()),
            Some(i) => Err(Error::argument(format!(
                "symbol {} at position {} is outside 1..={}",
                w.symbols()[i],
                i + 1,
                self.0
            ))),
        }
    }

    pub fn check_point(self, x: &SymbolicPoint) -> Result<()> {
        match x {
            SymbolicPoint::Periodic(p) => {
                self.check_word(&Word(p.preperiod.clone()))?;
                self.check_word(&Word(p.period.clone()))
            }
            SymbolicPoint::Stream(s) => self.check_word(&Word(s.visible().to_vec())),
        }
    }

    /// `m^n`, or `None` on overflow.
    pub fn word_count(self, n: usize) -> Option<u64> {
        u64::from(self.0).checked_pow(u32::try_from(n).ok()?)
    }
}

impl TryFrom<u32> for Alphabet {
    type Error = Error;
    fn try_from(m: u32) -> Result<Self> {
        Alphabet::new(m)
    }
}

impl From<Alphabet> for u32 {
    fn from(a: Alphabet) -> u32 {
        a.0
    }
}

/// A finite index sequence; names the cylinder of all points starting with it.
/// The empty word names the whole structure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Symbol>", into = "Vec<Symbol>")]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if let Some(i) = symbols.iter().position(|&s| s == 0) {
            return Err(Error::argument(format!(
                "symbols are numbered from 1; found 0 at position {}",
                i + 1
            )));
        }
        Ok(Word(symbols))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word with its first symbol removed (empty stays empty).
    pub fn tail(&self) -> Word {
        Word(self.0.iter().skip(1).copied().collect())
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    /// Position of the first occurrence of `block` as a contiguous block.
    pub fn find_block(&self, block: &Word) -> Option<usize> {
        if block.is_empty() {
            return Some(0);
        }
        self.0
            .windows(block.len())
            .position(|w| w == block.symbols())
    }
}

impl TryFrom<Vec<Symbol>> for Word {
    type Error = Error;
    fn try_from(v: Vec<Symbol>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<Symbol> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// `preperiod · period · period · …` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodic {
    preperiod: Vec<Symbol>,
    period: Vec<Symbol>,
}

impl EventuallyPeriodic {
    pub fn new(preperiod: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::argument("period must be nonempty"));
        }
        Ok(Self::canonical(preperiod.0, period.0))
    }

    fn canonical(mut preperiod: Vec<Symbol>, mut period: Vec<Symbol>) -> Self {
        let n = period.len();
        let d = (1..=n)
            .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| period[i] == period[i - d]))
            .unwrap_or(n);
        period.truncate(d);
        while let (Some(&a), Some(&b)) = (preperiod.last(), period.last()) {
            if a != b {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        EventuallyPeriodic { preperiod, period }
    }

    pub fn preperiod(&self) -> &[Symbol] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Symbol] {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    fn symbol0(&self, i: usize) -> Symbol {
        match self.preperiod.get(i) {
            Some(&s) => s,
            None => self.period[(i - self.preperiod.len()) % self.period.len()],
        }
    }

    fn shifted(&self, n: usize) -> Self {
        if n <= self.preperiod.len() {
            return EventuallyPeriodic {
                preperiod: self.preperiod[n..].to_vec(),
                period: self.period.clone(),
            };
        }
        let mut period = self.period.clone();
        let r = (n - self.preperiod.len()) % period.len();
        period.rotate_left(r);
        EventuallyPeriodic {
            preperiod: Vec::new(),
            period,
        }
    }
}

/// A point known only through its first `horizon` symbols.
#[derive(Clone, Debug)]
pub struct BoundedStream {
    symbols: Arc<[Symbol]>,
    offset: usize,
}

impl BoundedStream {
    pub fn new(symbols: Word) -> Self {
        BoundedStream {
            symbols: symbols.0.into(),
            offset: 0,
        }
    }

    /// Materializes `horizon` symbols from a deterministic generator; `f` gets 1-based positions.
    pub fn from_fn(horizon: usize, mut f: impl FnMut(usize) -> Symbol) -> Result<Self> {
        Ok(Self::new(Word::new((1..=horizon).map(&mut f).collect())?))
    }

    pub fn horizon(&self) -> usize {
        self.symbols.len() - self.offset
    }

    pub fn visible(&self) -> &[Symbol] {
        &self.symbols[self.offset..]
    }
}

impl PartialEq for BoundedStream {
    fn eq(&self, other: &Self) -> bool {
        self.visible() == other.visible()
    }
}

impl Eq for BoundedStream {}

/// A label `F_{i_1 i_2 …}`: either exactly eventually periodic or a bounded stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicPoint {
    Periodic(EventuallyPeriodic),
    Stream(BoundedStream),
}

impl SymbolicPoint {
    pub fn eventually_periodic(preperiod: Word, period: Word) -> Result<Self> {
        EventuallyPeriodic::new(preperiod, period).map(SymbolicPoint::Periodic)
    }

    pub fn stream(symbols: Word) -> Self {
        SymbolicPoint::Stream(BoundedStream::new(symbols))
    }

    /// Number of known symbols; `None` for eventually periodic points.
    pub fn horizon(&self) -> Option<usize> {
        match self {
            SymbolicPoint::Periodic(_) => None,
            SymbolicPoint::Stream(s) => Some(s.horizon()),
        }
    }

    pub fn as_periodic(&self) -> Option<&EventuallyPeriodic> {
        match self {
            SymbolicPoint::Periodic(p) => Some(p),
            SymbolicPoint::Stream(_) => None,
        }
    }

    /// Fails unless positions `1..=depth` are defined.
    pub fn require_depth(&self, depth: usize) -> Result<()> {
        match self.horizon() {
            Some(h) if h < depth => Err(Error::Horizon {
                needed: depth,
                available: h,
            }),
            _ => Ok(()),
        }
    }

    /// The symbol at 1-based position `k`.
    pub fn symbol_at(&self, k: usize) -> Result<Symbol> {
        if k == 0 {
            return Err(Error::argument("positions are numbered from 1"));
        }
        self.require_depth(k)?;
        Ok(self.symbol0(k - 1))
    }

    /// Unchecked 0-based access; callers have verified the horizon.
    pub(crate) fn symbol0(&self, i: usize) -> Symbol {
        match self {
            SymbolicPoint::Periodic(p) => p.symbol0(i),
            SymbolicPoint::Stream(s) => s.visible()[i],
        }
    }

    /// Similarity map: drops the first symbol.
    pub fn shift(&self) -> Result<Self> {
        self.shift_n(1)
    }

    /// `n`-fold iterate of the shift.
    pub fn shift_n(&self, n: usize) -> Result<Self> {
        match self {
            SymbolicPoint::Periodic(p) => Ok(SymbolicPoint::Periodic(p.shifted(n))),
            SymbolicPoint::Stream(s) => {
                self.require_depth(n)?;
                Ok(SymbolicPoint::Stream(BoundedStream {
                    symbols: Arc::clone(&s.symbols),
                    offset: s.offset + n,
                }))
            }
        }
    }

    /// The first `n` symbols: the depth-`n` cylinder containing this point.
    pub fn cylinder_of(&self, n: usize) -> Result<Word> {
        self.require_depth(n)?;
        Ok(Word((0..n).map(|i| self.symbol0(i)).collect()))
    }

    pub fn in_cylinder(&self, w: &Word) -> Result<bool> {
        self.require_depth(w.len())?;
        Ok(w.0.iter().enumerate().all(|(i, &s)| self.symbol0(i) == s))
    }
}

impl fmt::Display for SymbolicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicPoint::Periodic(p) => {
                write!(f, "{}", Word(p.preperiod.clone()))?;
                write!(f, "{}^inf", Word(p.period.clone()))
            }
            SymbolicPoint::Stream(s) => {
                write!(f, "{}..[h={}]", Word(s.visible().to_vec()), s.horizon())
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Periodic {
        #[serde(default)]
        preperiod: Word,
        period: Word,
    },
    Stream {
        symbols: Word,
        horizon: usize,
    },
}

impl Serialize for SymbolicPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            SymbolicPoint::Periodic(p) => PointRepr::Periodic {
                preperiod: Word(p.preperiod.clone()),
                period: Word(p.period.clone()),
            },
            SymbolicPoint::Stream(st) => PointRepr::Stream {
                symbols: Word(st.visible().to_vec()),
                horizon: st.horizon(),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymbolicPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match PointRepr::deserialize(d)? {
            PointRepr::Periodic { preperiod, period } => {
                SymbolicPoint::eventually_periodic(preperiod, period).map_err(D::Error::custom)
            }
            PointRepr::Stream { symbols, horizon } => {
                if symbols.len() != horizon {
                    return Err(D::Error::custom(format!(
                        "stream horizon {horizon} does not match {} symbols",
                        symbols.len()
                    )));
                }
                Ok(SymbolicPoint::stream(symbols))
            }
        }
    }
}

/// The point `w · w · w · …`.
pub fn periodic_point(w: &Word) -> Result<SymbolicPoint> {
    if w.is_empty() {
        return Err(Error::argument("periodic point needs a nonempty block"));
    }
    SymbolicPoint::eventually_periodic(Word::empty(), w.clone())
}

/// The point reading `w` first and then `x`; its `|w|`-shift is `x`.
pub fn concat_point(w: &Word, x: &SymbolicPoint) -> SymbolicPoint {
    match x {
        SymbolicPoint::Periodic(p) => {
            let mut pre = w.0.clone();
            pre.extend_from_slice(&p.preperiod);
            SymbolicPoint::Periodic(EventuallyPeriodic::canonical(pre, p.period.clone()))
        }
        SymbolicPoint::Stream(s) => {
            let mut v = w.0.clone();
            v.extend_from_slice(s.visible());
            SymbolicPoint::stream(Word(v))
        }
    }
}

/// All `m^n` words of length `n`, lexicographically ordered.
pub fn enumerate_words(alphabet: Alphabet, n: usize, limits: &Limits) -> Result<Vec<Word>> {
    let count = limits.ensure(
        || {
            format!(
                "enumerating words of length {n} over {} symbols",
                alphabet.size()
            )
        },
        alphabet.word_count(n),
    )?;
    let m = alphabet.size();
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = vec![1; n];
    loop {
        out.push(Word(cur.clone()));
        let Some(i) = cur.iter().rposition(|&s| s < m) else {
            break;
        };
        cur[i] += 1;
        cur[i + 1..].iter_mut().for_each(|s| *s = 1);
    }
    Ok(out)
}

/// How [`transitive_prefix_with`] lays out its blocks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrefixBackend {
    /// Every word of length `1..=k`, concatenated in lexicographic order.
    #[default]
    Lexicographic,
    /// A linearized de Bruijn sequence of order `k`.
    DeBruijn,
}

/// A word containing every word of length `<= k` as a contiguous block.
pub fn transitive_prefix(alphabet: Alphabet, k: usize, limits: &Limits) -> Result<Word> {
    transitive_prefix_with(alphabet, k, limits, PrefixBackend::Lexicographic)
}

pub fn transitive_prefix_with(
    alphabet: Alphabet,
    k: usize,
    limits: &Limits,
    backend: PrefixBackend,
) -> Result<Word> {
    if k == 0 {
        return Err(Error::argument("transitive prefix needs k >= 1"));
    }
    let what = || {
        format!(
            "transitive prefix of order {k} over {} symbols",
            alphabet.size()
        )
    };
    match backend {
        PrefixBackend::Lexicographic => {
            let total = (1..=k).try_fold(0u64, |acc, j| {
                acc.checked_add(alphabet.word_count(j)?.checked_mul(j as u64)?)
            });
            limits.ensure(what, total)?;
            let mut out = Vec::new();
            for j in 1..=k {
                for w in enumerate_words(alphabet, j, &Limits::with_cap(u64::MAX))? {
                    out.extend(w.0);
                }
            }
            Ok(Word(out))
        }
        PrefixBackend::DeBruijn => {
            let total = alphabet
                .word_count(k)
                .and_then(|c| c.checked_add(k as u64 - 1));
            limits.ensure(what, total)?;
            Ok(de_bruijn(alphabet.size(), k))
        }
    }
}

/// Linearized de Bruijn sequence B(m, k) over `1..=m`, built from Lyndon words (FKM).
fn de_bruijn(m: u32, k: usize) -> Word {
    fn visit(t: usize, p: usize, m: u32, k: usize, a: &mut [u32], out: &mut Vec<Symbol>) {
        if t > k {
            if k.is_multiple_of(p) {
                out.extend(a[1..=p].iter().map(|s| s + 1));
            }
            return;
        }
        a[t] = a[t - p];
        visit(t + 1, p, m, k, a, out);
        for j in a[t - p] + 1..m {
            a[t] = j;
            visit(t + 1, t, m, k, a, out);
        }
    }
    let mut a = vec![0; k + 1];
    let mut out = Vec::new();
    visit(1, 1, m, k, &mut a, &mut out);
    let wrap: Vec<_> = out[..k - 1].to_vec();
    out.extend(wrap);
    Word(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn ep(pre: &[u32], per: &[u32]) -> SymbolicPoint {
        SymbolicPoint::eventually_periodic(w(pre), w(per)).unwrap()
    }

    fn a(m: u32) -> Alphabet {
        Alphabet::new(m).unwrap()
    }

    #[test]
    fn alphabet_rejects_one_symbol() {
        assert!(Alphabet::new(1).is_err());
        assert!(Alphabet::new(0).is_err());
        assert_eq!(a(3).word_count(2), Some(9));
    }

    #[test]
    fn word_rejects_zero() {
        assert!(Word::new(vec![1, 0]).is_err());
        assert!(serde_json::from_str::<Word>("[1,0]").is_err());
        assert!(a(2).check_word(&w(&[1, 3])).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(ep(&[], &[1]).shift().unwrap(), ep(&[], &[1]));
        assert_eq!(ep(&[1], &[2]).shift().unwrap(), ep(&[], &[2]));
        assert_eq!(ep(&[], &[1, 2]).shift().unwrap(), ep(&[], &[2, 1]));
    }

    #[test]
    fn shift_n_examples() {
        let x = ep(&[1, 2, 1], &[2, 2, 1]);
        assert_eq!(x.shift_n(0).unwrap(), x);
        assert_eq!(ep(&[], &[1, 2, 3]).shift_n(3).unwrap(), ep(&[], &[1, 2, 3]));

        let mut iterated = x.clone();
        for _ in 0..5 {
            iterated = iterated.shift().unwrap();
        }
        let composed = x.shift_n(2).unwrap().shift_n(3).unwrap();
        assert_eq!(composed, iterated);
        assert_eq!(x.shift_n(5).unwrap(), iterated);
        // 1,2,1,2,2,1,2,2,1,... shifted by 5 is 1,2,2,1,2,2,...
        assert_eq!(iterated, ep(&[], &[1, 2, 2]));
    }

    #[test]
    fn cylinder_examples() {
        assert_eq!(ep(&[2], &[1]).cylinder_of(0).unwrap(), Word::empty());
        assert_eq!(ep(&[], &[1, 2]).cylinder_of(3).unwrap(), w(&[1, 2, 1]));
        let x = ep(&[], &[2, 1, 1]);
        for n in 0..8 {
            let lhs = x.shift().unwrap().cylinder_of(n).unwrap();
            assert_eq!(lhs, x.cylinder_of(n + 1).unwrap().tail());
        }
    }

    #[test]
    fn periodic_point_examples() {
        assert_eq!(
            periodic_point(&w(&[1])).unwrap().cylinder_of(4).unwrap(),
            w(&[1, 1, 1, 1])
        );
        assert_eq!(
            periodic_point(&w(&[1, 2])).unwrap().cylinder_of(4).unwrap(),
            w(&[1, 2, 1, 2])
        );
        assert_eq!(periodic_point(&w(&[1, 1])).unwrap(), ep(&[], &[1]));
        assert_eq!(
            periodic_point(&w(&[1, 1]))
                .unwrap()
                .as_periodic()
                .unwrap()
                .period(),
            &[1]
        );
        assert!(periodic_point(&Word::empty()).is_err());
    }

    #[test]
    fn canonical_form_is_minimal() {
        // 1,2,1,2,1,2,... written with a redundant preperiod
        let x = ep(&[1, 2, 1, 2], &[1, 2, 1, 2]);
        let p = x.as_periodic().unwrap();
        assert!(p.preperiod().is_empty());
        assert_eq!(p.period(), &[1, 2]);
        let y = ep(&[3, 1, 2], &[1, 2]);
        assert_eq!(y.as_periodic().unwrap().preperiod(), &[3]);
    }

    #[test]
    fn concat_examples() {
        let x = ep(&[], &[2]);
        assert_eq!(concat_point(&Word::empty(), &x), x);
        assert_eq!(concat_point(&w(&[1]), &x), ep(&[1], &[2]));
        let s = SymbolicPoint::stream(w(&[2, 2]));
        let c = concat_point(&w(&[1]), &s);
        assert_eq!(c.horizon(), Some(3));
        assert_eq!(c.shift().unwrap(), s);
    }

    #[test]
    fn stream_horizon_errors() {
        let s = SymbolicPoint::stream(w(&[1, 2, 2]));
        assert_eq!(s.symbol_at(3).unwrap(), 2);
        assert_eq!(
            s.symbol_at(4),
            Err(Error::Horizon {
                needed: 4,
                available: 3
            })
        );
        let t = s.shift_n(3).unwrap();
        assert_eq!(t.horizon(), Some(0));
        assert!(t.shift().is_err());
        assert!(s.cylinder_of(4).is_err());
        assert!(s.symbol_at(0).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_words(a(2), 1, &Limits::default()).unwrap(),
            vec![w(&[1]), w(&[2])]
        );
        assert_eq!(
            enumerate_words(a(2), 2, &Limits::default()).unwrap(),
            vec![w(&[1, 1]), w(&[1, 2]), w(&[2, 1]), w(&[2, 2])]
        );
        let nine = enumerate_words(a(3), 2, &Limits::default()).unwrap();
        assert_eq!(nine.len(), 9);
        assert_eq!(nine[0], w(&[1, 1]));
        assert_eq!(nine[8], w(&[3, 3]));
        assert_eq!(
            enumerate_words(a(2), 0, &Limits::default()).unwrap(),
            vec![Word::empty()]
        );
        assert!(matches!(
            enumerate_words(a(2), 13, &Limits::default()),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn transitive_prefix_examples() {
        let l = Limits::default();
        assert_eq!(transitive_prefix(a(2), 1, &l).unwrap(), w(&[1, 2]));
        assert_eq!(
            transitive_prefix(a(2), 2, &l).unwrap(),
            w(&[1, 2, 1, 1, 1, 2, 2, 1, 2, 2])
        );
        assert_eq!(transitive_prefix(a(3), 1, &l).unwrap(), w(&[1, 2, 3]));
        assert!(transitive_prefix(a(2), 0, &l).is_err());
        assert!(matches!(
            transitive_prefix(a(2), 10, &l),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn de_bruijn_backend_covers_all_blocks() {
        let l = Limits::default();
        for (m, k) in [(2, 1), (2, 3), (2, 5), (3, 3), (4, 2)] {
            let seq = transitive_prefix_with(a(m), k, &l, PrefixBackend::DeBruijn).unwrap();
            assert_eq!(seq.len() as u64, a(m).word_count(k).unwrap() + k as u64 - 1);
            for j in 1..=k {
                for word in enumerate_words(a(m), j, &l).unwrap() {
                    assert!(
                        seq.find_block(&word).is_some(),
                        "m={m} k={k} missing {word}"
                    );
                }
            }
        }
    }

    #[test]
    fn point_json_shape() {
        let x = ep(&[1], &[2]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"preperiod":[1],"period":[2]}"#);
        let back: SymbolicPoint = serde_json::from_str(r#"{"period":[1,2,1,2]}"#).unwrap();
        assert_eq!(back, ep(&[], &[1, 2]));
        assert!(serde_json::from_str::<SymbolicPoint>(r#"{"preperiod":[1],"period":[]}"#).is_err());
        let st = SymbolicPoint::stream(w(&[1, 2]));
        let js = serde_json::to_string(&st).unwrap();
        assert_eq!(js, r#"{"symbols":[1,2],"horizon":2}"#);
        assert_eq!(serde_json::from_str::<SymbolicPoint>(&js).unwrap(), st);
    }
}
