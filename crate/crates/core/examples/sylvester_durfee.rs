// Expands both sides of Sylvester's identity and splits the right side by
// Durfee square.
//
//     cargo run --example sylvester_durfee

use franklin::qseries::{durfee_terms, sylvester_sides};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (order, z_degree) = (12, 5);
    let (lhs, rhs) = sylvester_sides(order, z_degree);
    println!("prod (1 + z q^n) = {lhs}");
    if lhs != rhs {
        return Err("Sylvester's identity failed".into());
    }
    for d in 1..=2 {
        let (one, two) = durfee_terms(d, order, z_degree)?;
        println!("d = {d}, no part equal to d above the square: {one}");
        println!("d = {d}, part d directly above the square: {two}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
