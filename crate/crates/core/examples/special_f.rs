//! Tabulates F(u) by quadrature, closed form and power series, next to the
//! bound 2u/(1 − u²).
//!
//!     cargo run --example special_f

use critline::special_f::{f_eval, f_prime, f_upper_bound, series_terms, FMethod};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>5} {:>20} {:>20} {:>20} {:>6} {:>12}", "u", "quadrature", "closed form", "series", "terms", "2u/(1-u^2)");
    for i in 1..=19 {
        let u = 0.05 * i as f64;
        let q = f_eval(u, FMethod::Quadrature)?;
        let c = f_eval(u, FMethod::ClosedForm)?;
        let s = f_eval(u, FMethod::Series { terms: None })?;
        println!(
            "{u:>5.2} {q:>20.15} {c:>20.15} {s:>20.15} {:>6} {:>12.6}",
            series_terms(u),
            f_upper_bound(u)
        );
    }
    println!();
    for u in [0.0, 0.25, 0.5] {
        println!("F'({u}) = {:.15}", f_prime(u)?);
    }
    Ok(())
}
