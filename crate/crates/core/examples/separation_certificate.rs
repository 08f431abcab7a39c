// Searching for the smallest separating degree and replaying its certificate.

use domain_chaos::verification::search_separation;
use domain_chaos::{ChaoticStructure, FiniteStateStructure, Limits, MAdicIntervalStructure};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();
    let structures: Vec<Box<dyn ChaoticStructure>> = vec![
        Box::new(MAdicIntervalStructure::new(2)?),
        Box::new(MAdicIntervalStructure::new(4)?),
        Box::new(FiniteStateStructure::unit(3)?),
    ];
    for st in &structures {
        let (reports, cert) = search_separation(st.as_ref(), 4, &limits)?;
        let cert = cert.ok_or("no separating degree up to 4")?;
        println!(
            "{}: degrees tried {}, certified degree {} with epsilon0 = {}",
            serde_json::to_string(&st.describe())?,
            reports.len(),
            cert.degree,
            cert.epsilon0
        );
        for (w, v) in cert.witness_map.iter().take(4) {
            println!("  {w} -> {v}");
        }
        assert!(cert.verify(st.as_ref(), &limits)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
