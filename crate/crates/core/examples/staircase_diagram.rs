// Classifies the cells of (14,11,9,8,6) for m = 3 and draws its staircase.
//
//     cargo run --example staircase_diagram

use franklin::partition::parse_partition;
use franklin::staircase::{render_ferrers, staircase};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = parse_partition("14,11,9,8,6")?;
    let m = 3;
    print!("{}", render_ferrers(&lambda, m, false)?);
    println!();
    print!("{}", render_ferrers(&lambda, m, true)?);
    let s = staircase(&lambda, m)?;
    println!(
        "\ns_{m} = {}, {} stairs, landings in rows {:?}",
        s.len(),
        s.stair_count(),
        s.landing_rows()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
