//! Prints the exact bound coefficients C_1..C_K and their numeric values.
//!
//!     cargo run --example coefficients -- 7

use critline::optimal_coeffs::{run_pipeline_with, PipelineOptions, MAX_REFERENCE_ORDER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k: usize = match std::env::args().nth(1) {
        Some(arg) => arg.parse()?,
        None => MAX_REFERENCE_ORDER,
    };
    let opts = PipelineOptions {
        allow_extrapolated: k > MAX_REFERENCE_ORDER,
        ..Default::default()
    };
    let result = run_pipeline_with(k, opts)?;
    print!("{}", result.to_text());
    println!();
    for (i, v) in result.numeric()?.iter().enumerate() {
        println!("C_{} ~ {:.15} (+/- {:.1e})", i + 1, v.value, v.error);
    }
    Ok(())
}
