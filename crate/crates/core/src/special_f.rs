//! The weight function
//!
//! ```text
//! F(u) = ∫₀^∞ sinh(2uy)/cosh²(y) dy
//!      = πu/sin(πu) − u(ψ((u+1)/2) − ψ(u/2)) + 1
//!      = 2u log 2 + 2 Σ_{k≥1} (1 − 4^{−k}) ζ(2k+1) u^{2k+1},
//! ```
//!
//! evaluated by each of the three representations.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::numerics::{integrate, CompensatedSum};
use crate::zeta_oracle::{self, ZetaError};

/// Largest admissible argument of [`f_eval`]; F has poles at ±1.
pub const U_MAX: f64 = 0.99;

const SERIES_TAIL: f64 = 1e-12;
const QUADRATURE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecialFError {
    #[error("argument {value} outside [0, {max}]")]
    Domain { value: f64, max: f64 },
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FMethod {
    Quadrature,
    ClosedForm,
    /// Power series with a fixed number of odd-zeta terms, or with the count
    /// chosen so the tail is below 1e−12 when `terms` is `None`.
    Series { terms: Option<usize> },
}

impl FMethod {
    pub const ALL: [FMethod; 3] = [
        FMethod::Quadrature,
        FMethod::ClosedForm,
        FMethod::Series { terms: None },
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FMethod::Quadrature => "quadrature",
            FMethod::ClosedForm => "closed-form",
            FMethod::Series { .. } => "series",
        }
    }
}

fn check_domain(u: f64, max: f64) -> Result<(), SpecialFError> {
    if (0.0..=max).contains(&u) {
        Ok(())
    } else {
        Err(SpecialFError::Domain { value: u, max })
    }
}

/// F(u) for `0 ≤ u ≤ 0.99`.
pub fn f_eval(u: f64, method: FMethod) -> Result<f64, SpecialFError> {
    check_domain(u, U_MAX)?;
    if u == 0.0 {
        return Ok(0.0);
    }
    match method {
        FMethod::Quadrature => Ok(f_quadrature(u)),
        FMethod::ClosedForm => f_closed_form(u),
        FMethod::Series { terms } => {
            let k = terms.unwrap_or_else(|| series_terms(u));
            Ok(f_series(u, k))
        }
    }
}

/// Upper bound `2u/(1 − u²)`.
pub fn f_upper_bound(u: f64) -> f64 {
    2.0 * u / (1.0 - u * u)
}

fn f_quadrature(u: f64) -> f64 {
    // sinh(2uy)/cosh²y rewritten with decaying exponentials only.
    let a = 2.0 * (1.0 - u);
    let b = 2.0 * (1.0 + u);
    let integrand = |y: f64| {
        let q = (-2.0 * y).exp();
        2.0 * ((-a * y).exp() - (-b * y).exp()) / ((1.0 + q) * (1.0 + q))
    };
    let cut = 30.0_f64.max(10.0 / (1.0 - u));
    let body = integrate(integrand, 0.0, cut, QUADRATURE_TOL);
    body.value + quadrature_tail(a, b, cut)
}

/// ∫_Y^∞ of the integrand, from (1 + q)^{−2} = Σ_j (−1)^j (j+1) q^j.
fn quadrature_tail(a: f64, b: f64, cut: f64) -> f64 {
    let mut tail = CompensatedSum::new();
    for j in 0..4 {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let jj = 2.0 * j as f64;
        let term = ((-(a + jj) * cut).exp() / (a + jj) - (-(b + jj) * cut).exp() / (b + jj))
            * 2.0
            * (j + 1) as f64;
        tail.add(sign * term);
    }
    tail.value()
}

fn f_closed_form(u: f64) -> Result<f64, SpecialFError> {
    let psi = |x: f64| zeta_oracle::digamma(Complex64::new(x, 0.0)).map(|z| z.re);
    let pu = PI * u;
    Ok(pu / pu.sin() - u * (psi((u + 1.0) / 2.0)? - psi(u / 2.0)?) + 1.0)
}

/// Number of odd-zeta terms for which `2ζ(3)u^{2K+3}/(1 − u²) ≤ 1e−12`.
pub fn series_terms(u: f64) -> usize {
    if u == 0.0 {
        return 0;
    }
    let zeta3 = 1.202_056_903_159_594_3;
    let mut k = 0usize;
    while 2.0 * zeta3 * u.powi(2 * k as i32 + 3) / (1.0 - u * u) > SERIES_TAIL {
        k += 1;
    }
    k
}

fn f_series(u: f64, terms: usize) -> f64 {
    let zetas = zeta_oracle::odd_zeta_values(terms + 1);
    let u2 = u * u;
    let mut sum = CompensatedSum::new();
    sum.add(2.0 * LN_2 * u);
    let mut power = u;
    let mut quarter = 1.0;
    for z in zetas.iter().skip(1).take(terms) {
        power *= u2;
        quarter *= 0.25;
        sum.add(2.0 * (1.0 - quarter) * z * power);
    }
    sum.value()
}

/// F′(u) for `0 ≤ u ≤ ½` from the differentiated series.
pub fn f_prime(u: f64) -> Result<f64, SpecialFError> {
    check_domain(u, 0.5)?;
    let zeta3 = 1.202_056_903_159_594_3;
    let u2 = u * u;
    let mut sum = CompensatedSum::new();
    sum.add(2.0 * LN_2);
    if u == 0.0 {
        return Ok(sum.value());
    }
    let mut k = 1usize;
    let mut power = 1.0;
    let mut quarter = 1.0;
    loop {
        power *= u2;
        quarter *= 0.25;
        let odd = (2 * k + 1) as f64;
        let z = zeta_oracle::zeta_real(odd)?;
        sum.add(2.0 * (1.0 - quarter) * odd * z * power);
        // Remaining terms are dominated by 2ζ(3)(2j+1)u^{2j}, whose
        // successive ratios are at most u²(2k+5)/(2k+3) < 1.
        let next = 2.0 * zeta3 * (odd + 2.0) * power * u2;
        let ratio = u2 * (odd + 4.0) / (odd + 2.0);
        if next / (1.0 - ratio) <= SERIES_TAIL {
            return Ok(sum.value());
        }
        k += 1;
    }
}

/// Dirichlet weight `F(log(x/n)/log x)/log x` for `1 ≤ n ≤ x`.
pub fn weight(n: f64, x: f64) -> Result<f64, SpecialFError> {
    let lx = x.ln();
    let u = (x / n).ln() / lx;
    Ok(f_eval(u.max(0.0), FMethod::ClosedForm)? / lx)
}

/// The two upper bounds `1/log n − 1/log(x²/n)` and
/// `min(1/log n, 2 log(x/n)/log² n)` for the weight at `2 ≤ n ≤ x`.
pub fn weight_bounds(n: f64, x: f64) -> (f64, f64) {
    let ln = n.ln();
    let first = 1.0 / ln - 1.0 / (x * x / n).ln();
    let second = (1.0 / ln).min(2.0 * (x / n).ln() / (ln * ln));
    (first, second)
}
