//! Ground-truth evaluation of ζ(s), ζ′/ζ(s), log|ζ(½+it)| and the digamma
//! function. Nothing here depends on the bound machinery.
//!
//! ζ is computed by Euler–Maclaurin summation
//!
//! ```text
//! ζ(s) = Σ_{n<M} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2
//!        + Σ_{j=1}^{J} B_{2j}/(2j)! · s(s+1)…(s+2j-2) · M^{-s-2j+1} + R_J
//! ```
//!
//! with `M ≥ max(2|t|, 10)` and `J` chosen so that the first omitted term is
//! below a tenth of the target. The remainder satisfies
//! `|R_J| ≤ |s+2J+1| / (σ+2J+1) · |T_{J+1}|`, which is checked at runtime.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::numerics::ComplexSum;
use crate::zeros_table::ZeroTable;

/// Largest |Im s| the oracle accepts.
pub const MAX_HEIGHT: f64 = 1.0e6;
/// Default absolute error target.
pub const DEFAULT_TARGET: f64 = 1.0e-12;
/// Distance from a zero ordinate below which log|ζ| is refused.
pub const NEAR_ZERO_RADIUS: f64 = 1.0e-4;

const MAX_CORRECTIONS: usize = 60;
const CHUNK: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ZetaError {
    #[error("s = 1 is the pole of zeta")]
    PoleAtOne,
    #[error("s = {0} lies outside the supported window (Re s >= 0, |Im s| <= 1e6)")]
    WindowExceeded(Complex64),
    #[error("too close to a zero of zeta near s = {0}")]
    NearZeroOfZeta(Complex64),
    #[error("digamma has a pole at the non-positive integer {0}")]
    PoleAtNonpositiveInteger(i64),
    #[error("Euler-Maclaurin remainder {bound:e} exceeds the target {target:e}")]
    RemainderTooLarge { bound: f64, target: f64 },
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
}

/// A single evaluation request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalRequest {
    pub s: Complex64,
    /// Absolute error target.
    pub target: f64,
}

impl EvalRequest {
    pub fn new(s: Complex64) -> Self {
        Self {
            s,
            target: DEFAULT_TARGET,
        }
    }

    pub fn with_target(mut self, target: f64) -> Self {
        self.target = target;
        self
    }

    fn validate(&self) -> Result<(), ZetaError> {
        if self.s == Complex64::new(1.0, 0.0) {
            return Err(ZetaError::PoleAtOne);
        }
        if !(self.s.re >= 0.0) || self.s.im.abs() > MAX_HEIGHT || !self.s.im.is_finite() {
            return Err(ZetaError::WindowExceeded(self.s));
        }
        Ok(())
    }
}

/// Result of an Euler–Maclaurin evaluation of ζ and ζ′.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEval {
    pub value: Complex64,
    pub derivative: Complex64,
    /// Bound on the Euler–Maclaurin remainder of `value`.
    pub remainder_bound: f64,
    /// Number of terms `M` of the direct sum (n < M).
    pub terms: usize,
    /// Number of Bernoulli corrections `J`.
    pub corrections: usize,
}

/// B_{2j} / (2j)! for j = 0, 1, …, MAX_CORRECTIONS + 1.
fn bernoulli_ratios() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = 2 * (MAX_CORRECTIONS + 2);
        // B_m = -1/(m+1) Σ_{k<m} C(m+1, k) B_k
        let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
        b.push(BigRational::from_integer(1.into()));
        for m in 1..=n {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::from(1); // C(m+1, 0)
            for (k, bk) in b.iter().enumerate() {
                acc += bk * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let mut fact = BigInt::from(1);
        let mut out = Vec::new();
        for (m, bm) in b.iter().enumerate() {
            if m > 0 {
                fact *= BigInt::from(m);
            }
            if m % 2 == 0 {
                let r = bm / BigRational::from_integer(fact.clone());
                out.push(r.to_f64().unwrap_or(0.0));
            }
        }
        out
    })
}

fn direct_sum(s: Complex64, m: usize) -> (Complex64, Complex64) {
    let chunk_sum = |lo: usize, hi: usize| {
        let mut val = ComplexSum::new();
        let mut der = ComplexSum::new();
        for n in lo..hi {
            let ln = (n as f64).ln();
            let term = (-s * ln).exp();
            val.add(term);
            der.add(-term * ln);
        }
        (val.value(), der.value())
    };
    if m <= CHUNK {
        return chunk_sum(1, m);
    }
    let bounds: Vec<(usize, usize)> = (1..m)
        .step_by(CHUNK)
        .map(|lo| (lo, (lo + CHUNK).min(m)))
        .collect();
    let parts: Vec<(Complex64, Complex64)> =
        bounds.par_iter().map(|&(lo, hi)| chunk_sum(lo, hi)).collect();
    let mut val = ComplexSum::new();
    let mut der = ComplexSum::new();
    for (v, d) in parts {
        val.add(v);
        der.add(d);
    }
    (val.value(), der.value())
}

/// Euler–Maclaurin evaluation with an explicit number of direct terms.
pub fn zeta_em_with_terms(req: &EvalRequest, m: usize) -> Result<ZetaEval, ZetaError> {
    req.validate()?;
    let s = req.s;
    let m = m.max(2);
    let mf = m as f64;
    let ln_m = mf.ln();
    let (mut value, mut derivative) = direct_sum(s, m);

    let m_pow = (-s * ln_m).exp(); // M^{-s}
    let m1 = m_pow * mf; // M^{1-s}
    value += m1 / (s - 1.0) + m_pow * 0.5;
    derivative += -m1 * ln_m / (s - 1.0) - m1 / ((s - 1.0) * (s - 1.0)) - m_pow * ln_m * 0.5;

    let ratios = bernoulli_ratios();
    // prod = s(s+1)…(s+2j-2), dprod its s-derivative; scale = M^{-s-2j+1}
    let mut prod = s;
    let mut dprod = Complex64::new(1.0, 0.0);
    let mut scale = m_pow / mf;
    let target = req.target / 10.0;
    let mut corrections = 0;
    let mut remainder_bound = f64::INFINITY;
    for j in 1..=MAX_CORRECTIONS + 1 {
        if j > 1 {
            for k in [2 * j - 3, 2 * j - 2] {
                let f = s + k as f64;
                dprod = dprod * f + prod;
                prod *= f;
            }
            scale /= mf * mf;
        }
        let term = prod * scale * ratios[j];
        let dterm = (dprod - prod * ln_m) * scale * ratios[j];
        if term.norm() <= target && dterm.norm() <= target {
            let j_omitted = (2 * j - 1) as f64; // 2J + 1 with J = j - 1
            remainder_bound = (s + j_omitted).norm() / (s.re + j_omitted) * term.norm();
            break;
        }
        if j == MAX_CORRECTIONS + 1 {
            break;
        }
        value += term;
        derivative += dterm;
        corrections = j;
    }
    if !(remainder_bound <= req.target) {
        return Err(ZetaError::RemainderTooLarge {
            bound: remainder_bound,
            target: req.target,
        });
    }
    Ok(ZetaEval {
        value,
        derivative,
        remainder_bound,
        terms: m,
        corrections,
    })
}

/// Number of direct terms used by default: `max(⌈2|t|⌉, 10)`.
pub fn default_terms(s: Complex64) -> usize {
    ((2.0 * s.im.abs()).ceil() as usize).max(10)
}

/// Euler–Maclaurin evaluation; doubles `M` until the remainder bound meets
/// the target.
pub fn zeta_em(req: &EvalRequest) -> Result<ZetaEval, ZetaError> {
    let mut m = default_terms(req.s);
    loop {
        match zeta_em_with_terms(req, m) {
            Err(ZetaError::RemainderTooLarge { .. }) if m < 1 << 24 => m *= 2,
            other => return other,
        }
    }
}

/// ζ(s) to the default target.
pub fn zeta(s: Complex64) -> Result<Complex64, ZetaError> {
    zeta_em(&EvalRequest::new(s)).map(|e| e.value)
}

/// ζ(σ) for real σ > 1.
pub fn zeta_real(sigma: f64) -> Result<f64, ZetaError> {
    if !(sigma > 1.0) {
        return Err(ZetaError::OutOfDomain(format!("zeta_real needs sigma > 1, got {sigma}")));
    }
    if sigma > 60.0 {
        // 1 + 2^-σ + 3^-σ + …, the remaining terms are below 4^-σ·(σ-1)^-1·4
        return Ok(1.0 + 2f64.powf(-sigma) + 3f64.powf(-sigma) + 4f64.powf(-sigma));
    }
    // Full double precision: these values feed exact-coefficient evaluation.
    let req = EvalRequest::new(Complex64::new(sigma, 0.0)).with_target(1e-17);
    zeta_em(&req).map(|e| e.value.re)
}

/// ζ(2k+1) for k = 0..count (index 0 holds ζ(1) := NaN), cached.
pub fn odd_zeta_values(count: usize) -> Vec<f64> {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    const CACHED: usize = 4096;
    let cached = CACHE.get_or_init(|| {
        (0..CACHED)
            .map(|k| {
                if k == 0 {
                    f64::NAN
                } else {
                    zeta_real((2 * k + 1) as f64).expect("odd argument above 1")
                }
            })
            .collect()
    });
    if count <= CACHED {
        cached[..count].to_vec()
    } else {
        let mut out = cached.clone();
        out.extend((CACHED..count).map(|k| zeta_real((2 * k + 1) as f64).unwrap()));
        out
    }
}

/// ζ′/ζ(s). Refuses points where |ζ(s)| ≤ 1e−8.
pub fn zeta_logderiv(s: Complex64) -> Result<Complex64, ZetaError> {
    let e = zeta_em(&EvalRequest::new(s))?;
    if e.value.norm() <= 1e-8 {
        return Err(ZetaError::NearZeroOfZeta(s));
    }
    Ok(e.derivative / e.value)
}

/// log|ζ(½ + it)| for t ≥ 10.
///
/// Refused (`NearZeroOfZeta`) when `t` is within [`NEAR_ZERO_RADIUS`] of an
/// ordinate of `zeros`, or when the Newton distance |ζ/ζ′| is below that
/// radius.
pub fn log_abs_zeta_crit(t: f64, zeros: Option<&ZeroTable>) -> Result<f64, ZetaError> {
    if !(t >= 10.0) {
        return Err(ZetaError::OutOfDomain(format!("need t >= 10, got {t}")));
    }
    let s = Complex64::new(0.5, t);
    if let Some(table) = zeros {
        if table.distance_to_nearest(t) < NEAR_ZERO_RADIUS {
            return Err(ZetaError::NearZeroOfZeta(s));
        }
    }
    let e = zeta_em(&EvalRequest::new(s))?;
    let newton = e.value.norm() / e.derivative.norm();
    if newton < NEAR_ZERO_RADIUS {
        return Err(ZetaError::NearZeroOfZeta(s));
    }
    Ok(e.value.norm().ln())
}

/// Digamma ψ(z) = Γ′/Γ(z): upward recurrence to Re z ≥ 10, then the
/// asymptotic series `ln w − 1/(2w) − Σ B_{2k}/(2k w^{2k})`.
pub fn digamma(z: Complex64) -> Result<Complex64, ZetaError> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(ZetaError::PoleAtNonpositiveInteger(z.re as i64));
    }
    let mut shift = ComplexSum::new();
    let mut w = z;
    while w.re < 10.0 {
        shift.add(-w.inv());
        w += 1.0;
    }
    let ratios = bernoulli_ratios();
    let inv2 = (w * w).inv();
    let mut pow = inv2;
    let mut series = w.ln() - 0.5 * w.inv();
    let mut fact = 2.0; // (2k)!
    for k in 1..=12 {
        if k > 1 {
            fact *= ((2 * k - 1) * (2 * k)) as f64;
        }
        // B_{2k} = ratios[k]·(2k)!
        series -= pow * (ratios[k] * fact / (2 * k) as f64);
        pow *= inv2;
    }
    Ok(series + shift.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let z = zeta(Complex64::new(2.0, 0.0)).unwrap();
        assert!((z.re - PI * PI / 6.0).abs() <= 1e-12);
        assert!(z.im.abs() <= 1e-15);
    }

    #[test]
    fn zeta_three_against_brute_force() {
        // Independent route: direct summation to N plus the integral tail and
        // the first two Euler-Maclaurin boundary terms.
        let n = 100_000u64;
        let mut s = crate::numerics::CompensatedSum::new();
        for k in (1..=n).rev() {
            s.add((k as f64).powi(-3));
        }
        let nf = n as f64;
        let brute = s.value() + 1.0 / (2.0 * nf * nf) - 1.0 / (2.0 * nf.powi(3)) + 1.0 / (4.0 * nf.powi(4));
        let z3 = zeta_real(3.0).unwrap();
        assert!((z3 - brute).abs() < 1e-13, "{z3} vs {brute}");
        assert!((z3 - 1.202_056_903_159_594_2).abs() < 1e-15, "{z3:e}");
    }

    #[test]
    fn pole_and_window() {
        assert_eq!(zeta(Complex64::new(1.0, 0.0)), Err(ZetaError::PoleAtOne));
        assert!(matches!(zeta(Complex64::new(0.5, 2e6)), Err(ZetaError::WindowExceeded(_))));
        assert!(matches!(zeta(Complex64::new(-1.0, 0.0)), Err(ZetaError::WindowExceeded(_))));
    }

    #[test]
    fn zeta_at_zero_is_minus_half() {
        let z = zeta(Complex64::new(0.0, 0.0)).unwrap();
        assert!((z.re + 0.5).abs() < 1e-12);
    }

    #[test]
    fn first_zero_is_small() {
        let z = zeta(Complex64::new(0.5, 14.134_725_141_734_693)).unwrap();
        assert!(z.norm() <= 1e-6, "{}", z.norm());
    }

    #[test]
    fn conjugate_symmetry() {
        for t in [10.0, 37.5, 123.456] {
            let a = zeta(Complex64::new(0.5, t)).unwrap();
            let b = zeta(Complex64::new(0.5, -t)).unwrap();
            assert_eq!(a.norm(), b.norm());
        }
    }

    #[test]
    fn remainder_bound_is_reported() {
        let e = zeta_em(&EvalRequest::new(Complex64::new(0.5, 100.0))).unwrap();
        assert!(e.remainder_bound <= DEFAULT_TARGET);
        assert_eq!(e.terms, 200);
    }

    #[test]
    fn logderiv_at_two_matches_known_constant() {
        // ζ'(2) = -0.93754825431584375370…, ζ(2) = π²/6
        let ld = zeta_logderiv(Complex64::new(2.0, 0.0)).unwrap();
        let expected = -0.937_548_254_315_843_8 / (PI * PI / 6.0);
        assert!((ld.re - expected).abs() < 1e-12);
    }

    #[test]
    fn logderiv_off_zero_is_finite() {
        let ld = zeta_logderiv(Complex64::new(1.0, 100.0)).unwrap();
        assert!(ld.re.is_finite());
    }

    #[test]
    fn log_abs_zeta_guards() {
        assert!(log_abs_zeta_crit(10.0, None).unwrap().is_finite());
        assert!(matches!(
            log_abs_zeta_crit(14.1347, None),
            Err(ZetaError::NearZeroOfZeta(_))
        ));
        assert!(matches!(log_abs_zeta_crit(5.0, None), Err(ZetaError::OutOfDomain(_))));
    }

    #[test]
    fn digamma_at_one_is_minus_euler_gamma() {
        let psi = digamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!((psi.re + EULER_GAMMA).abs() < 1e-13);
    }

    #[test]
    fn digamma_euler_gamma_via_independent_series() {
        // γ = Σ_{k≥1} (1/k − ln(1 + 1/k)), accelerated by the tail ~ 1/(2N).
        let n = 1_000_000;
        let mut s = crate::numerics::CompensatedSum::new();
        for k in 1..=n {
            let kf = k as f64;
            s.add(1.0 / kf - (1.0 / kf).ln_1p());
        }
        let nf = n as f64;
        let gamma = s.value() + 1.0 / (2.0 * nf) - 1.0 / (6.0 * nf * nf);
        let psi = digamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!((psi.re + gamma).abs() < 1e-12);
    }

    #[test]
    fn digamma_reflection_gives_pi() {
        let a = digamma(Complex64::new(0.75, 0.0)).unwrap();
        let b = digamma(Complex64::new(0.25, 0.0)).unwrap();
        assert!((a.re - b.re - PI).abs() <= 1e-12);
    }

    #[test]
    fn digamma_recurrence() {
        for z in [
            Complex64::new(0.3, 0.7),
            Complex64::new(-2.5, 1.0),
            Complex64::new(0.25, 5000.0),
            Complex64::new(12.0, -3.0),
        ] {
            let lhs = digamma(z + 1.0).unwrap() - digamma(z).unwrap() - z.inv();
            assert!(lhs.norm() <= 1e-12, "{z}: {lhs}");
        }
        assert_eq!(
            digamma(Complex64::new(-3.0, 0.0)),
            Err(ZetaError::PoleAtNonpositiveInteger(-3))
        );
    }
}
