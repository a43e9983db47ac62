// Lists the fixed points for m = 1 grouped by part count, and checks the
// signed tally against the product.
//
//     cargo run --example fixed_points

use std::collections::BTreeMap;

use franklin::involution::enumerate_fixed_points;
use franklin::qseries::{euler_product, rhs_fixed_points};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (m, max_size) = (1, 40);
    let mut by_parts: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for fp in enumerate_fixed_points(m, max_size) {
        by_parts
            .entry(fp.partition.len())
            .or_default()
            .push(format!("({}) {}", fp.partition, fp.weight));
    }
    for (n, list) in &by_parts {
        println!("n = {n}: {}", list.join(", "));
    }
    if rhs_fixed_points(m, max_size) != euler_product(m, max_size) {
        return Err("fixed-point generating function disagrees with the product".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
