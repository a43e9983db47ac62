// Runs every identity check with small parameters.
//
//     cargo run --example verify_identities

use franklin::verify::{run_suite, Suite, SuiteParams};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let params = SuiteParams {
        m: 2,
        order: 80,
        max_size: 25,
    };
    let reports = run_suite(Suite::All, params);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        return Err("a check failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
