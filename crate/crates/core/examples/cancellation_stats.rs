// Counts partitions of 250 into parts > 10 and how many of them the
// involution leaves fixed.
//
//     cargo run --release --example cancellation_stats

use franklin::involution::cancellation_stats;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let table = cancellation_stats(10, 250);
    let s = table.at(250).ok_or("size out of range")?;
    println!("partitions of 250 into distinct parts > 10: {}", s.partitions);
    println!("fixed points: {} ({} positive, {} negative)", s.fixed, s.fixed_positive, s.fixed_negative);
    println!("unexplained cancellation: {}", s.residual);
    println!("coefficient of q^250: {}", s.product_coefficient);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
