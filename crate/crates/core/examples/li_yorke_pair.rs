// A Li-Yorke pair: orbits that come arbitrarily close yet keep separating.

use num_traits::ToPrimitive;

use domain_chaos::rational::parse_rational;
use domain_chaos::verification::{check_separation, li_yorke_pair};
use domain_chaos::{CantorStructure, Limits};

// exact distances run to hundreds of digits; show them as decimals
fn approx(v: &serde_json::Value) -> f64 {
    v.as_str()
        .and_then(|s| parse_rational(s).ok())
        .and_then(|r| r.to_f64())
        .unwrap_or(f64::NAN)
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();
    let st = CantorStructure::new();
    let cert = check_separation(&st, 1, &limits)?
        .certificate
        .ok_or("Cantor cylinders of depth 1 should separate")?;
    let pair = li_yorke_pair(&st, &cert, 500, &limits)?;
    let ev = &pair.report.evidence;
    println!("x starts {}", pair.x.cylinder_of(24)?);
    println!("y starts {}", pair.y.cylinder_of(24)?);
    println!(
        "min distance {:.3e} at time {}",
        approx(&ev["min_distance"]),
        ev["min_time"]
    );
    println!(
        "max distance {:.3e} at time {}",
        approx(&ev["max_distance"]),
        ev["max_time"]
    );
    for block in ev["agreement_block_minima"]
        .as_array()
        .into_iter()
        .flatten()
    {
        println!(
            "  agreement block at {}: min {:.3e}",
            block["start"],
            approx(&block["min_distance"])
        );
    }
    assert!(pair.report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
