//! Compares the bound with log|ζ(½ + it)| at log-spaced heights, x = log² t,
//! and prints the bound curves for a few very large t.
//!
//!     cargo run --example bound_scan -- 1e3 1e5 20

use critline::bound_engine::{default_x, g_min, log_spaced, scan, Curve, CurvePolicy, ScanPoint};
use critline::zeros_table::{load_zeros, resolve_zeros_path};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (lo, hi, n) = match args[..] {
        [lo, hi, n] => (lo, hi, n as usize),
        _ => (1e3, 1e5, 20),
    };
    let zeros = resolve_zeros_path(None).map(|p| load_zeros(&p)).transpose()?;

    println!("{:>14} {:>9} {:>11} {:>11} {:>11} {:>9}", "t", "x", "log|zeta|", "dirichlet", "arch", "margin");
    for point in scan(&log_spaced(lo, hi, n), default_x, zeros.as_ref())? {
        match point {
            ScanPoint::Report(r) => println!(
                "{:>14.3} {:>9.2} {:>11.5} {:>11.5} {:>11.5} {:>9.4}",
                r.t, r.x, r.oracle_log_abs_zeta, r.dirichlet_term, r.archimedean_term, r.margin
            ),
            ScanPoint::Skipped { t } => println!("{t:>14.3} skipped (near a zero)"),
        }
    }

    let g = g_min();
    println!("\nshift minimizing g: c = {:.12}, g = {:.12}", g.c_star, g.g_star);
    let curves = [
        ("exact", Curve::new(CurvePolicy::Exact, 3)?),
        ("shifted", Curve::new(CurvePolicy::Shifted(g.c_star), 3)?),
        ("optimal", Curve::new(CurvePolicy::Optimal, 7)?),
    ];
    println!("\n{:>10} {:>14} {:>14} {:>14}", "log10 t", "exact", "shifted", "optimal");
    for e in [10.0, 100.0, 1000.0, 1e6] {
        let log_t = e * 10f64.ln();
        let vals: Vec<f64> = curves.iter().map(|(_, c)| c.at_log_t(log_t)).collect::<Result<_, _>>()?;
        println!("{e:>10} {:>14.6e} {:>14.6e} {:>14.6e}", vals[0], vals[1], vals[2]);
    }
    Ok(())
}
