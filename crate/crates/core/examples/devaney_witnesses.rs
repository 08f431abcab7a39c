// The three Devaney ingredients as explicit witnesses, then the composite check.

use domain_chaos::rational::ratio;
use domain_chaos::verification::{
    periodic_approximation, search_separation, sensitivity_witness, transitive_witness,
    verify_devaney, DevaneyParams,
};
use domain_chaos::{Limits, MAdicIntervalStructure, SymbolicPoint, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();
    let st = MAdicIntervalStructure::new(2)?;
    let x =
        SymbolicPoint::eventually_periodic(Word::new(vec![2, 1, 1])?, Word::new(vec![2, 1, 2])?)?;
    let eps = ratio(1, 20);

    let pa = periodic_approximation(&st, &x, &eps, &limits)?;
    println!(
        "periodic approximation at depth {}: {} ({:?})",
        pa.depth,
        serde_json::to_string(&pa.point)?,
        pa.report.verdict
    );

    let tw = transitive_witness(&st, 3, &limits)?;
    println!(
        "transitive prefix {} visits {} cylinders ({:?})",
        tw.prefix,
        tw.schedule.len(),
        tw.report.verdict
    );

    let (_, cert) = search_separation(&st, 4, &limits)?;
    let cert = cert.ok_or("no separation certificate")?;
    let sw = sensitivity_witness(&st, &x, &eps, &cert, &limits)?;
    println!(
        "sensitivity partner {} separates at time {} ({:?})",
        serde_json::to_string(&sw.partner)?,
        sw.time,
        sw.report.verdict
    );

    let report = verify_devaney(&st, &DevaneyParams::default(), &limits)?;
    println!("devaney verdict: {:?}", report.verdict);
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
