//! ζ on and near the critical line, with the Euler–Maclaurin remainder bound.
//!
//!     cargo run --example zeta_oracle -- 1000

use critline::zeta_oracle::{log_abs_zeta_crit, zeta_em, zeta_logderiv, zeta_real, EvalRequest};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: f64 = std::env::args().nth(1).map_or(Ok(1000.0), |a| a.parse())?;
    for sigma in [0.5, 0.75, 1.0, 1.5] {
        let e = zeta_em(&EvalRequest::new(Complex64::new(sigma, t)))?;
        println!(
            "zeta({sigma} + {t}i) = {:.15} (N = {}, remainder <= {:.1e})",
            e.value, e.terms, e.remainder_bound
        );
    }
    println!("log|zeta(1/2 + {t}i)| = {:.15}", log_abs_zeta_crit(t, None)?);
    println!("zeta'/zeta(1 + {t}i) = {:.15}", zeta_logderiv(Complex64::new(1.0, t))?);
    for n in [2.0, 3.0, 5.0] {
        println!("zeta({n}) = {:.17}", zeta_real(n)?);
    }
    Ok(())
}
