//! The conditional bound
//!
//! ```text
//! log|ζ(½+it)| ≤ Re Σ_{n≤x} Λ(n) n^{−½−it} F(log(x/n)/log x)/log x
//!                + log 2 · log t/log x + O(√x log x/t + 1)
//! ```
//!
//! its auxiliary identities, and the bound curves obtained by choosing `x`
//! as a function of `t`.

use std::f64::consts::LN_2;

use rayon::prelude::*;

use crate::numerics::{bisect, integrate, CompensatedSum};
use crate::optimal_coeffs::{self, CoeffError, MAX_REFERENCE_ORDER};
use crate::prime_arith::{lambda_sieve, LambdaTable, PrimeError};
use crate::special_f::{self, SpecialFError};
use crate::zeros_table::ZeroTable;
use crate::zeta_oracle::{self, ZetaError};

/// Scan points closer than this to a tabulated ordinate are skipped.
pub const MIN_ZERO_DISTANCE: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundError {
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Prime(#[from] PrimeError),
    #[error(transparent)]
    SpecialF(#[from] SpecialFError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// One evaluation of the bound against the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub t: f64,
    pub x: f64,
    pub dirichlet_term: f64,
    /// `log 2 · log t / log x`.
    pub archimedean_term: f64,
    /// `√x log x / t + 1`; reported, never added to the margin.
    pub error_scale: f64,
    pub oracle_log_abs_zeta: f64,
    /// `rhs_main − oracle_log_abs_zeta`.
    pub margin: f64,
}

impl BoundReport {
    pub fn rhs_main(&self) -> f64 {
        self.dirichlet_term + self.archimedean_term
    }

    /// The error term is at least as large as the main archimedean growth.
    pub fn low_confidence(&self) -> bool {
        self.error_scale > self.t.ln()
    }
}

/// `F(log(x/n)/log x)/log x` for every `n ≤ x`, indexed by `n`.
fn weights(table: &LambdaTable, x: f64) -> Result<Vec<(u64, f64, f64)>, BoundError> {
    table
        .prime_powers(x.floor() as u64)
        .map(|(n, l)| Ok((n, l, special_f::weight(n as f64, x)?)))
        .collect()
}

fn require_table(table: &LambdaTable, x: f64) -> Result<(), BoundError> {
    if x >= 2.0 && table.limit() < x.floor() as u64 {
        return Err(BoundError::Domain(format!(
            "sieve reaches {}, need {}",
            table.limit(),
            x.floor()
        )));
    }
    Ok(())
}

/// `Re Σ_{n≤x} Λ(n) n^{−½−it} F(log(x/n)/log x)/log x`.
pub fn dirichlet_term(table: &LambdaTable, t: f64, x: f64) -> Result<f64, BoundError> {
    if x < 2.0 {
        return Ok(0.0);
    }
    require_table(table, x)?;
    Ok(weights(table, x)?
        .into_iter()
        .map(|(n, l, w)| {
            let ln = (n as f64).ln();
            l / (n as f64).sqrt() * (t * ln).cos() * w
        })
        .collect::<CompensatedSum>()
        .value())
}

/// `Σ_{n≤x} Λ(n) n^{−½} F(log(x/n)/log x)/log x`, the trivial bound on
/// [`dirichlet_term`].
pub fn dirichlet_abs_bound(table: &LambdaTable, x: f64) -> Result<f64, BoundError> {
    if x < 2.0 {
        return Ok(0.0);
    }
    require_table(table, x)?;
    Ok(weights(table, x)?
        .into_iter()
        .map(|(n, l, w)| l / (n as f64).sqrt() * w)
        .collect::<CompensatedSum>()
        .value())
}

/// `Σ_{n≤x} Λ(n) n^{−½} min(1/log n, 2 log(x/n)/log² n)`.
pub fn dirichlet_simple_bound(table: &LambdaTable, x: f64) -> f64 {
    table
        .prime_powers(x.floor() as u64)
        .map(|(n, l)| l / (n as f64).sqrt() * special_f::weight_bounds(n as f64, x).1)
        .collect::<CompensatedSum>()
        .value()
}

/// Fills a [`BoundReport`] with a caller-supplied sieve.
pub fn theorem1_rhs_with(
    table: &LambdaTable,
    t: f64,
    x: f64,
    zeros: Option<&ZeroTable>,
) -> Result<BoundReport, BoundError> {
    if t < 10.0 || x < 2.0 {
        return Err(BoundError::Domain(format!("need t >= 10 and x >= 2, got t = {t}, x = {x}")));
    }
    let dirichlet = dirichlet_term(table, t, x)?;
    let archimedean = LN_2 * t.ln() / x.ln();
    let oracle = zeta_oracle::log_abs_zeta_crit(t, zeros)?;
    Ok(BoundReport {
        t,
        x,
        dirichlet_term: dirichlet,
        archimedean_term: archimedean,
        error_scale: x.sqrt() * x.ln() / t + 1.0,
        oracle_log_abs_zeta: oracle,
        margin: dirichlet + archimedean - oracle,
    })
}

pub fn theorem1_rhs(t: f64, x: f64, zeros: Option<&ZeroTable>) -> Result<BoundReport, BoundError> {
    let table = lambda_sieve((x.floor() as u64).max(2))?;
    theorem1_rhs_with(&table, t, x, zeros)
}

/// The default choice `x = log² t`.
pub fn default_x(t: f64) -> f64 {
    t.ln().powi(2)
}

/// Outcome of one scan point.
#[derive(Debug, Clone, PartialEq)]
pub enum ScanPoint {
    Report(BoundReport),
    /// Within [`MIN_ZERO_DISTANCE`] of a tabulated ordinate.
    Skipped { t: f64 },
}

/// Evaluates the bound at each `t` with `x = x_of(t)`, in parallel; the
/// result keeps the input order.
pub fn scan<X>(ts: &[f64], x_of: X, zeros: Option<&ZeroTable>) -> Result<Vec<ScanPoint>, BoundError>
where
    X: Fn(f64) -> f64 + Sync,
{
    let xmax = ts.iter().map(|&t| x_of(t)).fold(2.0, f64::max);
    let table = lambda_sieve(xmax.floor() as u64)?;
    ts.par_iter()
        .map(|&t| {
            if let Some(z) = zeros {
                if z.distance_to_nearest(t) < MIN_ZERO_DISTANCE {
                    return Ok(ScanPoint::Skipped { t });
                }
            }
            theorem1_rhs_with(&table, t, x_of(t), zeros).map(ScanPoint::Report)
        })
        .collect()
}

/// `n` points from `lo` to `hi` spaced evenly in `log t`.
pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n < 2 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| match i {
            0 => lo,
            i if i == n - 1 => hi,
            i => (a + (b - a) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

/// `W_0(n; x) = ∫₀¹ 2x^u/(x^u + 1)² · sinh(u log(x/n)) du`.
pub fn w0_weight(n: u64, x: f64) -> Result<f64, BoundError> {
    let nf = n as f64;
    if n < 2 || nf > x {
        return Err(BoundError::Domain(format!("need 2 <= n <= x, got n = {n}, x = {x}")));
    }
    let lx = x.ln();
    let lr = (x / nf).ln();
    // 2x^u/(x^u + 1)² = 2x^{−u}/(1 + x^{−u})², stable for large u log x.
    let f = |u: f64| {
        let q = (-u * lx).exp();
        2.0 * q / ((1.0 + q) * (1.0 + q)) * (u * lr).sinh()
    };
    Ok(integrate(f, 0.0, 1.0, 1e-12).value)
}

/// Residual of `∫₀^∞ du/(x^u + 1) = log 2/log x`, and the `[0, 1]` part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArchimedeanCheck {
    pub residual: f64,
    pub unit_interval: f64,
    pub full: f64,
}

pub fn archimedean_identity_check(x: f64) -> Result<ArchimedeanCheck, BoundError> {
    if x < 2.0 {
        return Err(BoundError::Domain(format!("need x >= 2, got {x}")));
    }
    let lx = x.ln();
    let f = |u: f64| {
        let q = (-u * lx).exp();
        q / (1.0 + q)
    };
    let cut = 40.0 / lx;
    let body = integrate(f, 0.0, cut, 1e-13).value;
    // ∫_U^∞ du/(x^u + 1) = log(1 + x^{−U})/log x
    let tail = (-cut * lx).exp().ln_1p() / lx;
    let full = body + tail;
    let unit_interval = integrate(f, 0.0, 1.0, 1e-13).value;
    Ok(ArchimedeanCheck {
        residual: full - LN_2 / lx,
        unit_interval,
        full,
    })
}

/// `∫₀^∞ u^{2k} x^{−u/2} du` by quadrature against `2^{2k+1}(2k)!/(log x)^{2k+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaMoment {
    pub quadrature: f64,
    pub closed: f64,
    /// `∫₀^{1/2}` of the same integrand.
    pub half: f64,
}

pub fn gamma_moment_check(k: u32, x: f64) -> Result<GammaMoment, BoundError> {
    if x <= 1.0 {
        return Err(BoundError::Domain(format!("need x > 1, got {x}")));
    }
    let a = 0.5 * x.ln();
    let p = 2 * k as i32;
    let f = |u: f64| u.powi(p) * (-a * u).exp();
    let fact: f64 = (1..=2 * k).map(f64::from).product();
    let closed = 2f64.powi(p + 1) * fact / (2.0 * a).powi(p + 1);
    // Beyond U = (2k + 60)/a the integrand is below e^{−60}·U^{2k} and decays
    // at least like e^{−a(u−U)/2}.
    let cut = (f64::from(2 * k) + 60.0) / a;
    let tol = 1e-13 * closed.max(1.0);
    let body = integrate(f, 0.0, cut, tol).value;
    let half = integrate(f, 0.0, 0.5, tol).value;
    Ok(GammaMoment {
        quadrature: body,
        closed,
        half,
    })
}

/// How `x` is tied to `t` in the bound curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvePolicy {
    /// `√x = log t`.
    Exact,
    /// `log x = 2 log log t − 2c`.
    Shifted(f64),
    /// The stationary choice; coefficients `C_1 … C_K`.
    Optimal,
}

/// A bound curve divided by `log t`, as a polynomial in `w = 1/log log t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub policy: CurvePolicy,
    /// `coeffs[j]` multiplies `w^{j+1}`.
    pub coeffs: Vec<f64>,
}

impl Curve {
    /// Truncates the exact-choice sum at `Σ_{k≤K}`, and the optimal curve at `C_K`.
    /// The shifted curve has three terms regardless of `k`.
    pub fn new(policy: CurvePolicy, k: usize) -> Result<Curve, BoundError> {
        let coeffs = match policy {
            CurvePolicy::Exact => {
                let zetas = zeta_oracle::odd_zeta_values(k + 1);
                let mut coeffs = vec![0.0; 2 * k + 2];
                coeffs[0] = 0.5 * LN_2;
                coeffs[1] = 2.0 * LN_2;
                let mut fact = 1.0;
                for j in 1..=k {
                    fact *= (2 * j) as f64 * (2 * j + 1) as f64;
                    let quarter = 0.25f64.powi(j as i32);
                    coeffs[2 * j + 1] += 2.0 * (1.0 - quarter) * fact * zetas[j];
                }
                coeffs
            }
            CurvePolicy::Shifted(c) => {
                let e = (-c).exp();
                vec![
                    0.5 * LN_2,
                    0.5 * c * LN_2 + 2.0 * e * LN_2,
                    0.25 * c * c * LN_2 + 4.0 * c * e * LN_2,
                ]
            }
            CurvePolicy::Optimal => {
                if k > MAX_REFERENCE_ORDER {
                    return Err(CoeffError::OrderTooLarge(k).into());
                }
                let numeric = optimal_coeffs::run_pipeline(k)?
                    .numeric()
                    .map_err(CoeffError::from)?;
                numeric.iter().map(|c| c.value).collect()
            }
        };
        Ok(Curve { policy, coeffs })
    }

    pub fn in_w(&self, w: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| (acc + c) * w)
    }

    /// The curve at height `t`; needs `log log t > 0`.
    pub fn at(&self, t: f64) -> Result<f64, BoundError> {
        let ll = t.ln().ln();
        if !(ll > 0.0) {
            return Err(BoundError::Domain(format!("log log t must be positive, t = {t}")));
        }
        Ok(t.ln() * self.in_w(1.0 / ll))
    }

    /// `log t · in_w(w)` for `t` given only through `log t`, for heights
    /// far beyond `f64`.
    pub fn at_log_t(&self, log_t: f64) -> Result<f64, BoundError> {
        let ll = log_t.ln();
        if !(ll > 0.0) {
            return Err(BoundError::Domain(format!("log log t must be positive, log t = {log_t}")));
        }
        Ok(log_t * self.in_w(1.0 / ll))
    }
}

/// The bound curve at height `t`, truncated at order `k`.
pub fn theorem2_curve(t: f64, policy: CurvePolicy, k: usize) -> Result<f64, BoundError> {
    Curve::new(policy, k)?.at(t)
}

/// `g(c) = (c log 2)/2 + 2e^{−c} log 2`.
pub fn g(c: f64) -> f64 {
    0.5 * c * LN_2 + 2.0 * (-c).exp() * LN_2
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GMin {
    pub c_star: f64,
    pub g_star: f64,
}

/// Minimizer of [`g`] on `[0, 10]`, from the sign change of `g′`.
pub fn g_min() -> GMin {
    let dg = |c: f64| 0.5 * LN_2 - 2.0 * (-c).exp() * LN_2;
    let c_star = bisect(dg, 0.0, 10.0, 1e-15).expect("g' changes sign on [0, 10]");
    GMin {
        c_star,
        g_star: g(c_star),
    }
}
