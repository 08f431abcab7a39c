// Seeded sampling for every builtin process, and a custom process from JSON.

use num_traits::ToPrimitive;

use domain_chaos::process::{builtin_process, empirical_frequencies, load_process, BUILTIN_NAMES};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in BUILTIN_NAMES {
        let proc = builtin_process(name)?;
        let r = proc.sample_realization(20_000)?;
        let freqs: Vec<String> = empirical_frequencies(&r, proc.states())?
            .iter()
            .map(|f| format!("{:.4}", f.to_f64().unwrap_or(f64::NAN)))
            .collect();
        println!("{name:>9} ({} states): {}", proc.states(), freqs.join(" "));
    }

    let skewed = load_process(&serde_json::json!({
        "type": "finite_state_process",
        "name": "weather",
        "probabilities": ["0.7", "0.2", "0.1"],
        "distances": [[0, "1/2", 1], ["1/2", 0, "1/2"], [1, "1/2", 0]],
        "seed": 2024
    }))?;
    let a = skewed.sample_realization(30)?;
    let b = skewed.sample_realization(30)?;
    assert_eq!(a, b);
    println!("weather: {}", a.symbols);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
