// Eventually periodic points, the shift map, and cylinders.

use domain_chaos::{
    concat_point, periodic_point, transitive_prefix, Alphabet, Limits, SymbolicPoint, Word,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x =
        SymbolicPoint::eventually_periodic(Word::new(vec![2, 1])?, Word::new(vec![1, 2, 1, 2])?)?;
    println!("x = {}", serde_json::to_string(&x)?);
    println!("first 8 symbols: {}", x.cylinder_of(8)?);
    for n in 0..4 {
        println!("shift^{n} x = {}", serde_json::to_string(&x.shift_n(n)?)?);
    }

    let p = periodic_point(&Word::new(vec![1, 2])?)?;
    assert_eq!(p.shift_n(2)?, p);
    let y = concat_point(&Word::new(vec![2, 2, 2])?, &p);
    assert!(y.in_cylinder(&Word::new(vec![2, 2])?)?);
    assert_eq!(y.shift_n(3)?, p);

    let prefix = transitive_prefix(Alphabet::new(2)?, 3, &Limits::default())?;
    println!(
        "order-3 transitive prefix ({} symbols): {prefix}",
        prefix.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
