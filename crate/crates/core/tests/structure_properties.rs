use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use domain_chaos::structures::distance_enclosure;
use domain_chaos::verification::max_diameter_at;
use domain_chaos::{
    enumerate_words, periodic_point, rational::ratio, CantorStructure, ChaoticStructure,
    FiniteStateStructure, Interval, Limits, MAdicIntervalStructure, Rational, SymbolicPoint, Word,
};

fn pow(b: u64, n: usize) -> Rational {
    Rational::from_integer(BigInt::from(b).pow(n as u32))
}

/// Independent left endpoint: digits summed one by one.
fn left_endpoint(base: u64, digit: impl Fn(u32) -> u64, w: &Word) -> Rational {
    let mut acc = Rational::zero();
    let mut scale = Rational::one();
    for &s in w.symbols() {
        scale /= Rational::from_integer(BigInt::from(base));
        acc += scale.clone() * Rational::from_integer(BigInt::from(digit(s)));
    }
    acc
}

fn word(m: u32, min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=m, min..=max).prop_map(|v| Word::new(v).unwrap())
}

#[test]
fn madic_closed_form_diameters() {
    let l = Limits::default();
    for m in 2..=4u32 {
        let st = MAdicIntervalStructure::new(m).unwrap();
        for n in 1..=20 {
            let (d, _) = max_diameter_at(&st, n, &l).unwrap();
            assert_eq!(d, Rational::one() / pow(m as u64, n), "m={m} n={n}");
        }
    }
    let cantor = CantorStructure::new();
    for n in 1..=20 {
        let (d, _) = max_diameter_at(&cantor, n, &l).unwrap();
        assert_eq!(d, Rational::one() / pow(3, n));
    }
}

#[test]
fn madic_cylinders_tile_the_unit_interval() {
    let l = Limits::default();
    for m in 2..=3u32 {
        let st = MAdicIntervalStructure::new(m).unwrap();
        for n in 1..=5 {
            let mut cursor = Rational::zero();
            for w in enumerate_words(st.alphabet(), n, &l).unwrap() {
                let iv = st.interval(&w).unwrap();
                assert_eq!(iv.lo, cursor);
                assert_eq!(iv.lo, left_endpoint(m as u64, |s| (s - 1) as u64, &w));
                cursor = iv.hi;
            }
            assert_eq!(cursor, Rational::one());
        }
    }
}

#[test]
fn cantor_cylinders_are_nested_and_disjoint() {
    let l = Limits::default();
    let st = CantorStructure::new();
    for n in 1..=5 {
        let words = enumerate_words(st.alphabet(), n, &l).unwrap();
        let ivs: Vec<Interval> = words.iter().map(|w| st.interval(w).unwrap()).collect();
        for (w, iv) in words.iter().zip(&ivs) {
            assert_eq!(iv.lo, left_endpoint(3, |s| if s == 1 { 0 } else { 2 }, w));
            assert!(st.interval(&w.prefix(n - 1)).unwrap().contains_interval(iv));
        }
        for p in ivs.windows(2) {
            assert!(p[0].hi < p[1].lo);
        }
    }
}

#[test]
fn point_distance_bounded_by_common_cylinder_diameter() {
    // m = 2, n <= 6, periods up to 3: every pair of points sharing the word w
    let l = Limits::default();
    let st = MAdicIntervalStructure::new(2).unwrap();
    let a = st.alphabet();
    let tails: Vec<Word> = (1..=3)
        .flat_map(|p| enumerate_words(a, p, &l).unwrap())
        .collect();
    for n in 1..=6 {
        for w in enumerate_words(a, n, &l).unwrap() {
            let diam = st.cylinder_diameter(&w).unwrap();
            let pts: Vec<SymbolicPoint> = tails
                .iter()
                .map(|t| SymbolicPoint::eventually_periodic(w.clone(), t.clone()).unwrap())
                .collect();
            for x in &pts {
                for y in &pts {
                    assert!(st.point_distance(x, y).unwrap() <= diam);
                }
            }
        }
    }
}

#[test]
fn finite_state_rule_uses_first_symbol_only() {
    let st = FiniteStateStructure::new(vec![
        vec![ratio(0, 1), ratio(1, 2), ratio(1, 1)],
        vec![ratio(1, 2), ratio(0, 1), ratio(3, 4)],
        vec![ratio(1, 1), ratio(3, 4), ratio(0, 1)],
    ])
    .unwrap();
    let l = Limits::default();
    let a = st.alphabet();
    for x in enumerate_words(a, 3, &l).unwrap() {
        for y in enumerate_words(a, 3, &l).unwrap() {
            let px = periodic_point(&x).unwrap();
            let py = periodic_point(&y).unwrap();
            let expected = st.state_distance(x.symbols()[0], y.symbols()[0]).clone();
            assert_eq!(st.point_distance(&px, &py).unwrap(), expected);
            assert_eq!(st.cylinder_distance(&x, &y).unwrap(), expected);
        }
        assert!(st.cylinder_diameter(&x).unwrap().is_zero());
    }
    assert_eq!(st.cylinder_diameter(&Word::empty()).unwrap(), ratio(1, 1));
}

proptest! {
    #[test]
    fn cylinder_distance_is_a_lower_bound(
        w in word(3, 1, 4), v in word(3, 1, 4), tw in word(3, 1, 3), tv in word(3, 1, 3)
    ) {
        prop_assume!(w.len() == v.len());
        let st = MAdicIntervalStructure::new(3).unwrap();
        let x = SymbolicPoint::eventually_periodic(w.clone(), tw).unwrap();
        let y = SymbolicPoint::eventually_periodic(v.clone(), tv).unwrap();
        prop_assert!(st.point_distance(&x, &y).unwrap() >= st.cylinder_distance(&w, &v).unwrap());
    }

    #[test]
    fn enclosure_contains_exact_distance(
        pre_x in word(2, 0, 4), per_x in word(2, 1, 3),
        pre_y in word(2, 0, 4), per_y in word(2, 1, 3), depth in 1usize..12
    ) {
        let st = CantorStructure::new();
        let x = SymbolicPoint::eventually_periodic(pre_x, per_x).unwrap();
        let y = SymbolicPoint::eventually_periodic(pre_y, per_y).unwrap();
        let d = st.point_distance(&x, &y).unwrap();
        let e = distance_enclosure(&st, &x, &y, depth).unwrap();
        prop_assert!(e.contains(&d));
    }

    #[test]
    fn orbit_distances_follow_the_shift(
        pre_x in word(2, 0, 4), per_x in word(2, 1, 3),
        pre_y in word(2, 0, 4), per_y in word(2, 1, 3)
    ) {
        let st = MAdicIntervalStructure::new(2).unwrap();
        let x = SymbolicPoint::eventually_periodic(pre_x, per_x).unwrap();
        let y = SymbolicPoint::eventually_periodic(pre_y, per_y).unwrap();
        let ds = st.orbit_distances(&x, &y, 10).unwrap();
        for (t, d) in ds.iter().enumerate() {
            let expected = st.point_distance(&x.shift_n(t).unwrap(), &y.shift_n(t).unwrap()).unwrap();
            prop_assert_eq!(d.reduced(), expected);
        }
    }
}
