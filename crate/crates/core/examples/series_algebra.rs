//! Exact truncated power series over ℚ[L^{±1}, ζ(3), ζ(5), …]: parsing,
//! reciprocal, logarithm and compositional inverse.
//!
//!     cargo run --example series_algebra

use critline::series_algebra::pari::parse_series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_series("z - z^2 + 2*L*z^3 + Z3*z^4 + O(z^7)", 6)?;
    println!("a            = {a}");
    let inv = a.revert()?;
    println!("revert(a)    = {inv}");
    println!("a(revert(a)) = {}", a.compose(&inv)?);
    println!("1/a          = {}", a.recip()?);
    let unit = parse_series("4 + L*z - Z3/L*z^2 + O(z^6)", 5)?;
    println!("log({unit}) = {}", unit.ln()?);
    let catalan = parse_series("z - z^2 + O(z^11)", 10)?.revert()?;
    println!("revert(z - z^2) = {catalan}");
    Ok(())
}
