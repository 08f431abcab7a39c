// Recurrence: least return times to shrinking cylinders around a point.

use domain_chaos::verification::{poisson_return_check, transitive_witness};
use domain_chaos::{concat_point, periodic_point, Limits, MAdicIntervalStructure, Verdict, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();
    let p = periodic_point(&Word::new(vec![1, 2, 2])?)?;
    let r = poisson_return_check(&p, 6, 3)?;
    println!("periodic point: {:?}, returns {}", r.verdict, r.evidence);

    // the transitive orbit revisits the cylinders around its own start
    let st = MAdicIntervalStructure::new(2)?;
    let tw = transitive_witness(&st, 3, &limits)?;
    let r = poisson_return_check(&tw.point, 2, 40)?;
    println!("transitive orbit: {:?}", r.verdict);

    // 2, 2, 1, 1, 1, ... never comes back to the cylinder [2]; a finite horizon
    // can only report this as inconclusive
    let q = concat_point(
        &Word::new(vec![2, 2])?,
        &periodic_point(&Word::new(vec![1])?)?,
    );
    let r = poisson_return_check(&q, 3, 40)?;
    println!("2, 2, 1, 1, ...: {:?}", r.verdict);
    assert_eq!(r.verdict, Verdict::Inconclusive);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
