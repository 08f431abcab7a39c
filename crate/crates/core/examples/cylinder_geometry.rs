// Cylinder intervals and exact distances in the m-adic and Cantor structures.

use domain_chaos::structures::distance_enclosure;
use domain_chaos::verification::max_diameter_at;
use domain_chaos::{
    CantorStructure, ChaoticStructure, Limits, MAdicIntervalStructure, SymbolicPoint, Word,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();
    let madic = MAdicIntervalStructure::new(3)?;
    let cantor = CantorStructure::new();
    let w = Word::new(vec![2, 1, 3])?;
    println!("3-adic F_{w} = {}", madic.interval(&w)?);
    let v = Word::new(vec![2, 1])?;
    println!("Cantor F_{v} = {}", cantor.interval(&v)?);

    for depth in [1, 4, 12] {
        let (d, method) = max_diameter_at(&cantor, depth, &limits)?;
        println!("Cantor D_{depth} = {d} ({method:?})");
    }

    let x = SymbolicPoint::eventually_periodic(Word::empty(), Word::new(vec![1, 2])?)?;
    let y = SymbolicPoint::eventually_periodic(Word::new(vec![1])?, Word::new(vec![2])?)?;
    let d = cantor.point_distance(&x, &y)?;
    let e = distance_enclosure(&cantor, &x, &y, 6)?;
    println!("d(x, y) = {d}, depth-6 enclosure {e}");
    assert!(e.contains(&d));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
