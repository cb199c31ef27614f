//! The bandlimited majorant and minorant of the Poisson kernel: a few
//! pointwise values, the L1 distances, and the Fourier transforms checked
//! by quadrature.
//!
//!     cargo run --example extremal_kernel -- 0.5 1

use critline::extremal_poisson::{
    eval_m_real, ft_m, ft_numeric, l1_dist, l1_numeric, poisson_h, KernelParams, Sign,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let beta: f64 = args.next().map_or(Ok(0.5), |a| a.parse())?;
    let delta: f64 = args.next().map_or(Ok(1.0), |a| a.parse())?;
    let p = KernelParams::new(beta, delta)?;
    println!("beta = {beta}, delta = {delta}, x = e^(2 pi delta) = {:.6e}\n", p.x());

    println!("{:>6} {:>14} {:>14} {:>14}", "x", "m-", "h", "m+");
    for x in [0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0] {
        println!(
            "{x:>6} {:>14.10} {:>14.10} {:>14.10}",
            eval_m_real(Sign::Minorant, &p, x),
            poisson_h(&p, x),
            eval_m_real(Sign::Majorant, &p, x)
        );
    }
    println!();
    for s in Sign::BOTH {
        let q = l1_numeric(s, &p);
        println!("L1 {}: closed {:.12e}, quadrature {:.12e}", s.symbol(), l1_dist(s, &p), q.value);
        for xi in [0.0, delta / 2.0, delta, 1.5 * delta] {
            println!(
                "  FT at {xi:<5}: closed {:>16.12}, quadrature {:>16.12}",
                ft_m(s, &p, xi),
                ft_numeric(s, &p, xi).value
            );
        }
    }
    Ok(())
}
