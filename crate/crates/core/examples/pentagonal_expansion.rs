// Expands ∏_{n>m} (1 - q^n) three ways and shows they agree.
//
//     cargo run --example pentagonal_expansion

use franklin::partition::count_distinct_signed;
use franklin::qseries::{euler_product, rhs_general, QSeries};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let order = 30;
    for m in 0..=3 {
        let product = euler_product(m, order);
        let closed = rhs_general(m, order);
        let counted = QSeries::from_coeffs(count_distinct_signed(m, order).signed_sum);
        println!("m = {m}: {product}");
        if product != closed || product != counted {
            return Err(format!("routes disagree for m = {m}").into());
        }
    }
    println!("product, closed form and signed counts agree to order {order}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
