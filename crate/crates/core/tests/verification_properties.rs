use proptest::prelude::*;

use domain_chaos::symbolic::PrefixBackend;
use domain_chaos::verification::{
    check_separation, li_yorke_pair, max_diameter_at, periodic_approximation, poisson_return_check,
    search_separation, sensitivity_witness, transitive_witness_with, verify_devaney, DevaneyParams,
};
use domain_chaos::{
    periodic_point, rational::parse_rational, CantorStructure, ChaoticStructure,
    FiniteStateStructure, Limits, MAdicIntervalStructure, Rational, SymbolicPoint, Verdict, Word,
};

fn builtin_structures() -> Vec<Box<dyn ChaoticStructure>> {
    vec![
        Box::new(MAdicIntervalStructure::new(2).unwrap()),
        Box::new(MAdicIntervalStructure::new(3).unwrap()),
        Box::new(CantorStructure::new()),
    ]
}

fn eps_grid() -> Vec<Rational> {
    ["1/2", "1/8", "1/64"]
        .iter()
        .map(|s| parse_rational(s).unwrap())
        .collect()
}

fn point(m: u32) -> impl Strategy<Value = SymbolicPoint> {
    (
        prop::collection::vec(1..=m, 0..=5),
        prop::collection::vec(1..=m, 1..=4),
    )
        .prop_map(|(a, b)| {
            SymbolicPoint::eventually_periodic(Word::new(a).unwrap(), Word::new(b).unwrap())
                .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn periodic_approximation_on_the_grid(x in point(2)) {
        let l = Limits::default();
        for st in builtin_structures() {
            for eps in eps_grid() {
                let pa = periodic_approximation(st.as_ref(), &x, &eps, &l).unwrap();
                prop_assert_eq!(pa.report.verdict, Verdict::Pass);
                prop_assert_eq!(pa.point.shift_n(pa.depth).unwrap(), pa.point.clone());
                prop_assert!(st.point_distance(&x, &pa.point).unwrap() < eps);
            }
        }
    }

    #[test]
    fn sensitivity_inequalities(x in point(2)) {
        let l = Limits::default();
        for st in builtin_structures() {
            let cert = search_separation(st.as_ref(), 4, &l).unwrap().1.unwrap();
            for eps in eps_grid() {
                let s = sensitivity_witness(st.as_ref(), &x, &eps, &cert, &l).unwrap();
                prop_assert_eq!(s.report.verdict, Verdict::Pass);
                prop_assert!(st.point_distance(&x, &s.partner).unwrap() < eps);
                let far = st
                    .point_distance(&x.shift_n(s.time).unwrap(), &s.partner.shift_n(s.time).unwrap())
                    .unwrap();
                prop_assert!(far >= cert.epsilon0);
            }
        }
    }

    #[test]
    fn poisson_returns_on_periodic_points(
        per in prop::collection::vec(1u32..=3, 1..=5), depth in 1usize..6
    ) {
        let w = Word::new(per).unwrap();
        let x = periodic_point(&w).unwrap();
        let r = poisson_return_check(&x, depth, w.len()).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Pass);
    }
}

#[test]
fn li_yorke_agreement_minima_are_non_increasing() {
    let l = Limits::default();
    for st in builtin_structures() {
        for degree in 2..=3 {
            let cert = check_separation(st.as_ref(), degree, &l)
                .unwrap()
                .certificate
                .unwrap();
            let pair = li_yorke_pair(st.as_ref(), &cert, 2000, &l).unwrap();
            assert_eq!(pair.report.verdict, Verdict::Pass);
            let minima: Vec<Rational> = pair.report.evidence["agreement_block_minima"]
                .as_array()
                .unwrap()
                .iter()
                .map(|b| parse_rational(b["min_distance"].as_str().unwrap()).unwrap())
                .collect();
            assert!(minima.len() >= 3);
            assert!(
                minima.windows(2).all(|p| p[1] <= p[0]),
                "{} {minima:?}",
                st.kind()
            );
            let longest = pair.report.evidence["longest_agreement_block"]
                .as_u64()
                .unwrap() as usize;
            let (dl, _) = max_diameter_at(st.as_ref(), longest, &l).unwrap();
            assert!(minima.last().unwrap() <= &dl);
        }
    }
}

#[test]
fn de_bruijn_backend_agrees_with_lexicographic() {
    let l = Limits::default();
    for st in builtin_structures() {
        for k in 1..=4 {
            let a =
                transitive_witness_with(st.as_ref(), k, &l, PrefixBackend::Lexicographic).unwrap();
            let b = transitive_witness_with(st.as_ref(), k, &l, PrefixBackend::DeBruijn).unwrap();
            assert_eq!(a.report.verdict, Verdict::Pass);
            assert_eq!(b.report.verdict, Verdict::Pass);
            assert_eq!(
                a.schedule.keys().collect::<Vec<_>>(),
                b.schedule.keys().collect::<Vec<_>>()
            );
            assert!(b.prefix.len() <= a.prefix.len());
        }
    }
}

#[test]
fn separation_search_agrees_with_direct_check() {
    let l = Limits::default();
    let st = FiniteStateStructure::unit(3).unwrap();
    let (reports, cert) = search_separation(&st, 3, &l).unwrap();
    assert_eq!(reports.len(), 1);
    let cert = cert.unwrap();
    assert_eq!(
        cert,
        check_separation(&st, 1, &l).unwrap().certificate.unwrap()
    );
    assert!(cert.verify(&st, &l).unwrap());
}

#[test]
fn devaney_passes_on_every_builtin_structure() {
    let l = Limits::default();
    let mut structures = builtin_structures();
    structures.push(Box::new(FiniteStateStructure::unit(2).unwrap()));
    for st in structures {
        let r = verify_devaney(st.as_ref(), &DevaneyParams::default(), &l).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", st.kind());
    }
}
