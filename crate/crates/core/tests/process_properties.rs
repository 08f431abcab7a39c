use std::path::PathBuf;

use proptest::prelude::*;
use serde_json::{json, Value};

use domain_chaos::process::{
    builtin_process, compare_shift_with_tail, empirical_frequencies, load_process,
    realization_to_point, step_shift_equivalence, FiniteStateProcess, BUILTIN_NAMES, DEFAULT_SEED,
    RNG_ALGORITHM,
};
use domain_chaos::rational::ratio;
use domain_chaos::{FiniteStateStructure, SymbolicPoint, Verdict, Word};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares against a recorded golden file, recording it on first computation.
fn check_golden(name: &str, current: &Value) {
    let path = golden(name);
    match std::fs::read_to_string(&path) {
        Ok(text) => {
            let recorded: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(&recorded, current, "{name} differs from the recorded value");
        }
        Err(_) => {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, serde_json::to_string_pretty(current).unwrap() + "\n").unwrap();
        }
    }
}

fn count(symbols: &[u32], s: u32) -> usize {
    symbols.iter().filter(|&&x| x == s).count()
}

#[test]
fn seed_zero_reference_output() {
    let coin = builtin_process("coin").unwrap().with_seed(0);
    let die = builtin_process("die").unwrap().with_seed(0);
    let current = json!({
        "rng": RNG_ALGORITHM,
        "coin": coin.sample_realization(32).unwrap().symbols,
        "die": die.sample_realization(32).unwrap().symbols,
    });
    check_golden("seed0_reference.json", &current);
}

#[test]
fn frequency_sanity_for_builtins() {
    const N: usize = 100_000;
    let mut recorded = serde_json::Map::new();
    for name in BUILTIN_NAMES {
        let proc = builtin_process(name).unwrap();
        assert_eq!(proc.seed(), DEFAULT_SEED);
        let r = proc.sample_realization(N).unwrap();
        let p = proc.states();
        let mut freqs = Vec::new();
        for s in 1..=p as u32 {
            // independent count and bound in floating point
            let hat = count(r.symbols.symbols(), s) as f64 / N as f64;
            let truth = 1.0 / p as f64;
            let bound = 4.0 * (hat * (1.0 - hat) / N as f64).sqrt();
            assert!(
                (hat - truth).abs() <= bound,
                "{name} state {s}: {hat} vs {truth} (bound {bound})"
            );
            freqs.push(hat);
        }
        let exact = empirical_frequencies(&r, p).unwrap();
        for (s, f) in exact.iter().enumerate() {
            assert_eq!(
                *f,
                ratio(count(r.symbols.symbols(), s as u32 + 1) as i64, N as i64)
            );
        }
        recorded.insert(
            name.to_string(),
            json!({"seed": DEFAULT_SEED, "n": N, "frequencies": freqs}),
        );
    }
    check_golden("builtin_frequencies_n100000.json", &Value::Object(recorded));
}

#[test]
fn rare_symbol_frequency() {
    let proc = FiniteStateProcess::new(
        "skewed",
        vec![ratio(999, 1000), ratio(1, 1000)],
        FiniteStateStructure::unit(2).unwrap(),
        DEFAULT_SEED,
    )
    .unwrap();
    let r = proc.sample_realization(10_000).unwrap();
    let rare = count(r.symbols.symbols(), 2);
    // mean 10, standard deviation ~3.2
    assert!((1..=25).contains(&rare), "rare count {rare}");
}

#[test]
fn shift_equivalence_for_seed_seven() {
    let coin = builtin_process("coin").unwrap().with_seed(7);
    assert_eq!(
        step_shift_equivalence(&coin, 100).unwrap().verdict,
        Verdict::Pass
    );
}

#[test]
fn shift_equivalence_detects_a_wrong_tail() {
    let r = builtin_process("coin")
        .unwrap()
        .sample_realization(50)
        .unwrap();
    let x = realization_to_point(&r).unwrap();
    let wrong = SymbolicPoint::stream(Word::new(vec![1; 49]).unwrap());
    let report = compare_shift_with_tail(&x, &wrong).unwrap();
    assert_ne!(report.verdict, Verdict::Pass);
}

#[test]
fn sampling_is_thread_independent() {
    let reference: Vec<_> = BUILTIN_NAMES
        .iter()
        .map(|n| {
            builtin_process(n)
                .unwrap()
                .sample_realization(5_000)
                .unwrap()
        })
        .collect();
    let handles: Vec<_> = BUILTIN_NAMES
        .iter()
        .map(|n| {
            let n = n.to_string();
            std::thread::spawn(move || {
                builtin_process(&n)
                    .unwrap()
                    .sample_realization(5_000)
                    .unwrap()
            })
        })
        .collect();
    for (h, r) in handles.into_iter().zip(reference) {
        assert_eq!(h.join().unwrap(), r);
    }
}

#[test]
fn config_round_trip() {
    let cfg = json!({
        "type": "finite_state_process",
        "probabilities": ["1/3", "2/3"],
        "distances": [[0, 1], [1, 0]],
        "seed": 9
    });
    let proc = load_process(&cfg).unwrap();
    assert_eq!(proc.seed(), 9);
    let r = proc.sample_realization(20).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["n"], 20);
    assert_eq!(v["rng"], RNG_ALGORITHM);
    assert!(load_process(&json!({"type": "finite_state_process", "probabilities": ["1/2", "1/3"], "distances": [[0, 1], [1, 0]]})).is_err());
    assert!(load_process(&json!({"type": "finite_state_process", "probabilities": ["1", "0"], "distances": [[0, 1], [1, 0]]})).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reproducible_and_prefix_coherent(seed in any::<u64>(), n in 1usize..400, k in 0usize..200, which in 0usize..5) {
        let proc = builtin_process(BUILTIN_NAMES[which]).unwrap().with_seed(seed);
        let a = proc.sample_realization(n).unwrap();
        let b = proc.sample_realization(n).unwrap();
        prop_assert_eq!(&a, &b);
        let longer = proc.sample_realization(n + k).unwrap();
        prop_assert_eq!(&longer.symbols.symbols()[..n], a.symbols.symbols());
    }

    #[test]
    fn shift_equivalence_holds(seed in any::<u64>(), n in 2usize..300) {
        let proc = builtin_process("tetra").unwrap().with_seed(seed);
        prop_assert_eq!(step_shift_equivalence(&proc, n).unwrap().verdict, Verdict::Pass);
    }
}
