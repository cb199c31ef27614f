//! Numerical checks of the explicit formula applied to `m^±(t − ·)`, the
//! partial-fraction expansion of `Re ζ′/ζ` and the resulting bracket for
//! `−Re ζ′/ζ(½ + β + it)`.
//!
//! Zero sums run over both `γ` and `−γ` of every tabulated ordinate.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::extremal_poisson::{eval_m, eval_m_real, ft_m, poisson_h, KernelParams, Sign};
use crate::numerics::{integrate_panels, CompensatedSum, Quadrature};
use crate::prime_arith::{lambda_sieve, LambdaTable, PrimeError};
use crate::zeros_table::ZeroTable;
use crate::zeta_oracle::{self, ZetaError};

/// Below this β the bracket divides by `x^β − 1 ≈ 0`.
pub const MIN_BETA: f64 = 1e-3;

const ARCH_WINDOW: f64 = 1e4;
const ARCH_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExplicitError {
    #[error("zero table reaches {available}, need at least {required}")]
    InsufficientHeight { required: f64, available: f64 },
    #[error("beta = {0} is too small for the bracket (need beta >= {MIN_BETA})")]
    DegenerateBeta(f64),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Prime(#[from] PrimeError),
}

/// A truncated zero sum and a bound on the omitted part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSum {
    pub sum: f64,
    pub tail_bound: f64,
}

/// Terms of the prime side; `rhs_total = boundary − ft_zero + archimedean − prime`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GwBreakdown {
    pub boundary_term: f64,
    pub ft_zero_term: f64,
    pub archimedean_term: f64,
    pub archimedean_error: f64,
    /// Prime term from the Fourier-transform form.
    pub prime_term: f64,
    /// Prime term from the sinh form.
    pub prime_term_sinh: f64,
    pub rhs_total: f64,
}

/// Both sides of the explicit formula at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GwCheck {
    pub zero_side: ZeroSum,
    pub prime_side: GwBreakdown,
}

impl GwCheck {
    pub fn discrepancy(&self) -> f64 {
        (self.zero_side.sum - self.prime_side.rhs_total).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub left_main: f64,
    pub middle: f64,
    pub right_main: f64,
    /// `Re Σ_{n≤x} Λ(n) n^{−½−it} sinh(β log(x/n))`.
    pub sinh_sum: f64,
}

fn require_height(t: f64, zeros: &ZeroTable) -> Result<(), ExplicitError> {
    let required = 10.0 * t;
    if zeros.max_height() < required {
        return Err(ExplicitError::InsufficientHeight {
            required,
            available: zeros.max_height(),
        });
    }
    Ok(())
}

/// Bound on `Σ_{|γ|>H} f(t − γ)` for `0 ≤ f ≤ K·h_β`, using the zero density
/// `(1/2π) log(u/2π)` with a safety factor 2.
fn zero_tail_bound(beta: f64, envelope: f64, t: f64, height: f64) -> f64 {
    // Both γ > H and γ < −H contribute at most K·h_β(γ − t) each; with
    // a = H − t ≥ t, log((v + t)/2π) ≤ log(v/π) and h_β(v) ≤ β/v², so
    // ∫_a^∞ h_β(v)·log(v/π)/(2π) dv ≤ β(log(a/π) + 1)/(2πa).
    let a = height - t;
    2.0 * 2.0 * envelope * beta * ((a / PI).ln() + 1.0) / (2.0 * PI * a)
}

/// `Σ_γ m^±(t − γ)` over the table.
pub fn gw_zero_side(
    sign: Sign,
    p: &KernelParams,
    t: f64,
    zeros: &ZeroTable,
) -> Result<ZeroSum, ExplicitError> {
    require_height(t, zeros)?;
    let sum: CompensatedSum = zeros
        .gammas()
        .iter()
        .map(|&g| eval_m_real(sign, p, t - g) + eval_m_real(sign, p, t + g))
        .collect();
    // m^± ≤ h_β·(e^{2c} + e^{−2c} + 2)/(e^c ∓ e^{−c})² = h_β·cosh²c/den.
    let c = PI * p.beta() * p.delta();
    let envelope = match sign {
        Sign::Majorant => (c.cosh() / c.sinh()).powi(2),
        Sign::Minorant => 1.0,
    };
    Ok(ZeroSum {
        sum: sum.value(),
        tail_bound: zero_tail_bound(p.beta(), envelope, t, zeros.max_height()),
    })
}

/// `Re Σ_{n≤x} Λ(n) n^{−½−it} sinh(β log(x/n))`.
pub fn dirichlet_sinh_sum(table: &LambdaTable, t: f64, x: f64, beta: f64) -> f64 {
    table
        .prime_powers(x.floor() as u64)
        .map(|(n, l)| {
            let ln = (n as f64).ln();
            l / (n as f64).sqrt() * (t * ln).cos() * (beta * (x.ln() - ln)).sinh()
        })
        .collect::<CompensatedSum>()
        .value()
}

/// `(1/π) Σ_{n≥2} Λ(n)/√n · m̂^±(log n/2π) cos(t log n)`.
pub fn prime_term_fourier(sign: Sign, p: &KernelParams, t: f64, table: &LambdaTable) -> f64 {
    table
        .prime_powers(p.x().floor() as u64)
        .map(|(n, l)| {
            let ln = (n as f64).ln();
            l / (n as f64).sqrt() * ft_m(sign, p, ln / (2.0 * PI)) * (t * ln).cos()
        })
        .collect::<CompensatedSum>()
        .value()
        / PI
}

/// `(2x^β/(x^β ∓ 1)²)·Re Σ_{n≤x} Λ(n) n^{−½−it} sinh(β log(x/n))`.
pub fn prime_term_sinh(sign: Sign, p: &KernelParams, t: f64, table: &LambdaTable) -> f64 {
    let x = p.x();
    let xb = x.powf(p.beta());
    let den = match sign {
        Sign::Majorant => xb - 1.0,
        Sign::Minorant => xb + 1.0,
    };
    2.0 * xb / (den * den) * dirichlet_sinh_sum(table, t, x, p.beta())
}

/// `(1/2π) ∫ m^±(t − y) Re ψ(¼ + iy/2) dy`.
pub fn archimedean_term(sign: Sign, p: &KernelParams, t: f64) -> Result<Quadrature, ZetaError> {
    let window = ARCH_WINDOW.max(10.0 * t);
    let re_psi = |y: f64| {
        zeta_oracle::digamma(Complex64::new(0.25, 0.5 * y))
            .map(|z| z.re)
            .unwrap_or(f64::NAN)
    };
    // v = t − y
    let f = |v: f64| eval_m_real(sign, p, v) * re_psi(t - v);
    let panel = 0.25 / p.delta().max(1.0);
    let body = integrate_panels(f, -window, window, panel, ARCH_TOL);
    if !body.value.is_finite() {
        return Err(ZetaError::OutOfDomain("digamma failed inside the window".into()));
    }
    // Beyond the window m(v) = h(v)(α − γ cos 2πΔv) and
    // Re ψ(¼ + iy/2) = log(|y|/2) + O(y⁻²). Pairing ±v, the non-oscillating
    // part integrates to 2αβ(log(W/2) + 1)/W up to O(β³/W³ + βt²/W³).
    let c = PI * p.beta() * p.delta();
    let den = match sign {
        Sign::Majorant => c.sinh().powi(2),
        Sign::Minorant => c.cosh().powi(2),
    };
    let gamma = 0.5 / den;
    let alpha = match sign {
        Sign::Majorant => 1.0 + gamma,
        Sign::Minorant => 1.0 - gamma,
    };
    let b = p.beta();
    let tail = 2.0 * alpha * b * ((window / 2.0).ln() + 1.0) / window;
    let oscillating = 2.0 * gamma * poisson_h(p, window) * (2.0 * window).ln() / (PI * p.delta());
    let neglected = b * (b * b + t * t) / window.powi(3);
    Ok(Quadrature {
        value: (body.value + tail) / (2.0 * PI),
        error: (body.error + oscillating + neglected) / (2.0 * PI),
    })
}

/// All terms of the prime side.
pub fn gw_prime_side(sign: Sign, p: &KernelParams, t: f64) -> Result<GwBreakdown, ExplicitError> {
    if t < 10.0 {
        return Err(ExplicitError::OutOfRange(format!("t = {t} < 10")));
    }
    let table = lambda_sieve((p.x().floor() as u64).max(2))?;
    let half = Complex64::new(0.0, 0.5);
    let boundary_term = (eval_m(sign, p, t + half) + eval_m(sign, p, t - half)).re;
    let ft_zero_term = ft_m(sign, p, 0.0) * PI.ln() / (2.0 * PI);
    let arch = archimedean_term(sign, p, t)?;
    let prime_term = prime_term_fourier(sign, p, t, &table);
    let prime_term_sinh = prime_term_sinh(sign, p, t, &table);
    Ok(GwBreakdown {
        boundary_term,
        ft_zero_term,
        archimedean_term: arch.value,
        archimedean_error: arch.error,
        prime_term,
        prime_term_sinh,
        rhs_total: boundary_term - ft_zero_term + arch.value - prime_term,
    })
}

pub fn gw_check(
    sign: Sign,
    p: &KernelParams,
    t: f64,
    zeros: &ZeroTable,
) -> Result<GwCheck, ExplicitError> {
    Ok(GwCheck {
        zero_side: gw_zero_side(sign, p, t, zeros)?,
        prime_side: gw_prime_side(sign, p, t)?,
    })
}

/// `Re ζ′/ζ(½ + β + it) + ½ log(t/2π) − Σ_γ h_β(t − γ)`, with the bound on
/// the omitted part of the zero sum.
pub fn partial_fraction_residual(
    beta: f64,
    t: f64,
    zeros: &ZeroTable,
) -> Result<ZeroSum, ExplicitError> {
    if !(beta > 0.0 && beta <= 1.0) || t < 10.0 {
        return Err(ExplicitError::OutOfRange(format!("beta = {beta}, t = {t}")));
    }
    require_height(t, zeros)?;
    let logderiv = zeta_oracle::zeta_logderiv(Complex64::new(0.5 + beta, t))?;
    let h = |x: f64| beta / (beta * beta + x * x);
    let zero_sum: CompensatedSum = zeros
        .gammas()
        .iter()
        .map(|&g| h(t - g) + h(t + g))
        .collect();
    Ok(ZeroSum {
        sum: logderiv.re + 0.5 * (t / (2.0 * PI)).ln() - zero_sum.value(),
        tail_bound: zero_tail_bound(beta, 1.0, t, zeros.max_height()),
    })
}

/// Main terms of the two-sided bound for `−Re ζ′/ζ(½ + β + it)` and the
/// oracle value between them. The unquantified error terms are not included.
pub fn lemma3_bracket(t: f64, x: f64, beta: f64) -> Result<Bracket, ExplicitError> {
    if beta < MIN_BETA {
        return Err(ExplicitError::DegenerateBeta(beta));
    }
    if beta > 1.0 || t < 10.0 || x < 2.0 {
        return Err(ExplicitError::OutOfRange(format!("t = {t}, x = {x}, beta = {beta}")));
    }
    let table = lambda_sieve(x.floor() as u64)?;
    lemma3_bracket_with(t, x, beta, &table)
}

/// As [`lemma3_bracket`] with a caller-supplied sieve reaching `x`.
pub fn lemma3_bracket_with(
    t: f64,
    x: f64,
    beta: f64,
    table: &LambdaTable,
) -> Result<Bracket, ExplicitError> {
    if beta < MIN_BETA {
        return Err(ExplicitError::DegenerateBeta(beta));
    }
    let s = dirichlet_sinh_sum(table, t, x, beta);
    let xb = x.powf(beta);
    let lt = t.ln();
    let left_main = -lt / (xb - 1.0) + 2.0 * xb / (xb - 1.0).powi(2) * s;
    let right_main = lt / (xb + 1.0) + 2.0 * xb / (xb + 1.0).powi(2) * s;
    let middle = -zeta_oracle::zeta_logderiv(Complex64::new(0.5 + beta, t))?.re;
    Ok(Bracket {
        left_main,
        middle,
        right_main,
        sinh_sum: s,
    })
}
