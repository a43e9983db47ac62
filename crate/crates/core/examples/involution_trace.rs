// Applies the involution for m = 1 to a handful of partitions and maps
// each image back again.
//
//     cargo run --example involution_trace

use franklin::partition::parse_partition;
use franklin::involution::involute;
use franklin::staircase::render_ferrers;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m = 1;
    for text in ["10,8,7,5,4", "11,10,8,5", "9,8,7,5,4", "11,10,9,7", "9,7,6,5", "10,9,7,6"] {
        let lambda = parse_partition(text)?;
        let forward = involute(&lambda, m)?;
        let back = involute(&forward.image, m)?;
        println!("({lambda}) --{}--> ({})", forward.case, forward.image);
        print!("{}", render_ferrers(&lambda, m, true)?);
        if back.image != lambda {
            return Err(format!("({lambda}) does not return to itself").into());
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
