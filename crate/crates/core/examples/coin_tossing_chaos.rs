// Coin tossing as a chaotic system: realizations are symbolic points and each
// toss is one shift.

use domain_chaos::process::{
    builtin_process, realization_to_point, step_shift_equivalence, verify_process_chaos,
};
use domain_chaos::Limits;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let coin = builtin_process("coin")?;
    let r = coin.sample_realization(16)?;
    println!("coin, seed {}: {}", r.seed, r.symbols);
    let x = realization_to_point(&r)?;
    println!("after one toss: {}", x.shift()?.cylinder_of(15)?);

    let eq = step_shift_equivalence(&coin, 1000)?;
    println!("shift equivalence: {:?}", eq.verdict);

    let report = verify_process_chaos(&coin, 3, 10_000, &Limits::default())?;
    println!("process chaos (k = 3, n = 10000): {:?}", report.verdict);
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
