//! Evaluates both sides of the explicit formula with the extremal kernels as
//! test functions, using a zero table.
//!
//!     CRITLINE_ZEROS=zeros.txt cargo run --example explicit_formula -- 100 0.5 1
//!
//! Without `CRITLINE_ZEROS` the bundled table is used.

use critline::explicit_formula::{gw_check, partial_fraction_residual};
use critline::extremal_poisson::{KernelParams, Sign};
use critline::zeros_table::{load_zeros, resolve_zeros_path};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (t, beta, delta) = match args[..] {
        [t, b, d] => (t, b, d),
        [] => (100.0, 0.5, 1.0),
        _ => return Err("expected: t beta delta".into()),
    };
    let path = resolve_zeros_path(None).ok_or("no zero table")?;
    let zeros = load_zeros(&path)?;
    println!("{} ordinates up to {:.3} from {}", zeros.len(), zeros.max_height(), path.display());

    let p = KernelParams::new(beta, delta)?;
    for s in Sign::BOTH {
        let c = gw_check(s, &p, t, &zeros)?;
        let b = c.prime_side;
        println!("\nsign {}", s.symbol());
        println!("  zero side         {:.12} (tail <= {:.1e})", c.zero_side.sum, c.zero_side.tail_bound);
        println!("  boundary          {:.12}", b.boundary_term);
        println!("  log pi term       {:.12}", -b.ft_zero_term);
        println!("  archimedean       {:.12} (+/- {:.1e})", b.archimedean_term, b.archimedean_error);
        println!("  primes            {:.12} (sinh form {:.12})", -b.prime_term, -b.prime_term_sinh);
        println!("  prime side        {:.12}", b.rhs_total);
        println!("  difference        {:.2e}", c.discrepancy());
    }

    let r = partial_fraction_residual(beta.min(1.0), t, &zeros)?;
    println!("\nRe zeta'/zeta partial fractions at beta = {}: residual {:.3e}", beta.min(1.0), r.sum);
    Ok(())
}
