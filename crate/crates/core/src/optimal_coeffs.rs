//! Exact lower-order coefficients `C_k` of the optimal bound.
//!
//! With `w = 1/log log t` and `z = 1/log x`, the bound is
//! `B(w, z) = Lz·e^{1/w} + e^{1/2z} Σ a_m z^{m+1}`. Solving `∂B/∂z = 0` for
//! `z` as a power series in `w` and substituting back gives
//! `B_opt(w) = e^{1/w} Σ_k C_k w^k`.

use std::f64::consts::LN_2;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::series_algebra::{
    ConstantEnv, ExactCoefficient, NumericValue, SeriesError, Symbol, TruncatedSeries,
    DEFAULT_ORDER,
};
use crate::zeta_oracle;

/// Largest order with a published reference value.
pub const MAX_REFERENCE_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {0} exceeds {MAX_REFERENCE_ORDER}; enable extrapolation to go further")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

/// `a_0 = 0`, `a_1 = 8L`, `a_m = 8(2^{m−1} − 1)·m!·ζ(m)` for odd `m > 1`, and
/// `a_m = 0` for even `m`.
pub fn a_coeff(m: u32) -> ExactCoefficient {
    match m {
        0 => ExactCoefficient::zero(),
        1 => ExactCoefficient::log2().scale(&BigRational::from_integer(8.into())),
        _ if m % 2 == 0 => ExactCoefficient::zero(),
        _ => {
            let q = BigInt::from(8) * ((BigInt::one() << (m - 1)) - 1) * factorial(m);
            ExactCoefficient::zeta(m).scale(&BigRational::from_integer(q))
        }
    }
}

/// `b_m = (a_{m+1}/2 − (m+1)·a_m) / L`.
pub fn b_coeff(m: u32) -> ExactCoefficient {
    let half = ExactCoefficient::from_ratio(1, 2);
    let next = &a_coeff(m + 1) * &half;
    let here = &a_coeff(m) * &ExactCoefficient::from_integer(i64::from(m) + 1);
    &(&next - &here) * &ExactCoefficient::log2_pow(-1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PipelineOptions {
    /// Working truncation order in `z`; raised to `K + 3` when smaller.
    pub series_order: Option<i32>,
    /// Permit `K > 7`. Such coefficients have no reference value.
    pub allow_extrapolated: bool,
}

/// Everything the pipeline computed on the way to the coefficients.
#[derive(Debug, Clone)]
pub struct PipelineResult {
    pub order: usize,
    pub series_order: i32,
    /// `a_0 … a_{N+3}`.
    pub a: Vec<ExactCoefficient>,
    /// `b_0 … b_{N+2}`.
    pub b: Vec<ExactCoefficient>,
    /// `1/w` as a Laurent series in `z`.
    pub w1: TruncatedSeries,
    /// `z` as a power series in `w`.
    pub z: TruncatedSeries,
    /// `B_opt(w)·e^{−1/w}` as a power series in `w`.
    pub b_opt: TruncatedSeries,
    /// `C_1 … C_K`.
    pub c: Vec<ExactCoefficient>,
    pub extrapolated: bool,
}

pub fn run_pipeline(k: usize) -> Result<PipelineResult, CoeffError> {
    run_pipeline_with(k, PipelineOptions::default())
}

pub fn run_pipeline_with(k: usize, opts: PipelineOptions) -> Result<PipelineResult, CoeffError> {
    if k == 0 {
        return Err(CoeffError::ZeroOrder);
    }
    if k > MAX_REFERENCE_ORDER && !opts.allow_extrapolated {
        return Err(CoeffError::OrderTooLarge(k));
    }
    let n = opts.series_order.unwrap_or(DEFAULT_ORDER).max(k as i32 + 3);
    let a: Vec<_> = (0..=(n + 3) as u32).map(a_coeff).collect();
    let b: Vec<_> = (0..=(n + 2) as u32).map(b_coeff).collect();
    let b0_inv = b[0].inverse().ok_or(SeriesError::NonInvertibleLeadingCoefficient)?;

    // 1/w = 1/(2z) + log b_0 + log(1 + Σ (b_m/b_0) z^m), log b_0 = 2L.
    let inner = TruncatedSeries::from_terms(
        std::iter::once((0, ExactCoefficient::one()))
            .chain((1..=n).map(|m| (m, &b[m as usize] * &b0_inv))),
        n,
    );
    let laurent = TruncatedSeries::from_terms(
        [
            (-1, ExactCoefficient::from_ratio(1, 2)),
            (0, ExactCoefficient::log2().scale(&BigRational::from_integer(2.into()))),
        ],
        n,
    );
    let w1 = &laurent + &inner.ln()?;
    let z = w1.recip()?.revert_lagrange()?;

    let top = z.order();
    let a_outer = TruncatedSeries::from_terms(
        (1..top).map(|m| (m + 1, a[m as usize].clone())),
        top,
    );
    let b_outer = TruncatedSeries::from_terms((0..=top).map(|m| (m, b[m as usize].clone())), top);
    let linear = z.scale(&ExactCoefficient::log2());
    let ratio = &a_outer.compose(&z)? * &b_outer.compose(&z)?.recip()?;
    let b_opt = (&linear + &ratio).truncate(top);

    let c = (1..=k as i32)
        .map(|j| b_opt.coeff(j).expect("series order exceeds K").clone())
        .collect();
    Ok(PipelineResult {
        order: k,
        series_order: n,
        a,
        b,
        w1,
        z,
        b_opt,
        c,
        extrapolated: k > MAX_REFERENCE_ORDER,
    })
}

impl PipelineResult {
    /// `C_k`, 1-based.
    pub fn coefficient(&self, k: usize) -> &ExactCoefficient {
        &self.c[k - 1]
    }

    /// `1/w − 1/(2z(w)) − log b_0`; exponentiating gives `Σ b_m z^m`.
    fn log_sum_b(&self) -> Result<TruncatedSeries, SeriesError> {
        let n = self.z.order() - 1;
        let inv_w = TruncatedSeries::monomial(ExactCoefficient::one(), -1, n);
        let inv_2z = self
            .z
            .recip()?
            .scale(&ExactCoefficient::from_ratio(1, 2));
        let log_b0 = TruncatedSeries::constant(
            ExactCoefficient::log2().scale(&BigRational::from_integer(2.into())),
            n,
        );
        Ok(&(&inv_w - &inv_2z) - &log_b0)
    }

    /// `e^{−1/2z}·∂B/∂z` along `z = z(w)`, computed from the `a_m` directly:
    /// `L·e^{1/w − 1/2z} + Σ ((m+1)a_m − a_{m+1}/2) z^m`. Zero to the
    /// returned order exactly when the stationarity condition holds.
    pub fn stationarity_residual(&self) -> Result<TruncatedSeries, SeriesError> {
        let exp_part = self
            .log_sum_b()?
            .exp()?
            .scale(&(&self.b[0] * &ExactCoefficient::log2()));
        let order = exp_part.order();
        let deriv = TruncatedSeries::from_terms(
            (0..=order).map(|m| {
                let mu = m as usize;
                let c = &(&self.a[mu] * &ExactCoefficient::from_integer(i64::from(m) + 1))
                    - &(&self.a[mu + 1] * &ExactCoefficient::from_ratio(1, 2));
                (m, c)
            }),
            order,
        );
        Ok(&exp_part + &deriv.compose(&self.z)?)
    }

    /// `(1/w1)∘z − w`, which vanishes when `z` inverts `1/w1`.
    pub fn inversion_residual(&self) -> Result<TruncatedSeries, SeriesError> {
        let composed = self.w1.recip()?.compose(&self.z)?;
        let order = composed.order();
        Ok(&composed - &TruncatedSeries::variable(order))
    }

    /// Numeric values of `C_1 … C_K` with propagated rounding error.
    pub fn numeric(&self) -> Result<Vec<NumericValue>, SeriesError> {
        let env = constant_env(self.c.iter().flat_map(ExactCoefficient::zeta_symbols));
        self.c.iter().map(|c| c.eval(&env)).collect()
    }

    /// Text listing in the Pari-like syntax accepted by
    /// [`crate::series_algebra::pari`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# L = log 2, Zn = zeta(n); B_opt(w) = exp(1/w) * sum C_k w^k");
        if self.extrapolated {
            let _ = writeln!(out, "# extrapolated: orders above {MAX_REFERENCE_ORDER} have no reference values");
        }
        let _ = writeln!(out, "w1 = {}", self.w1.truncate(3));
        let _ = writeln!(out, "Z = {}", self.z.truncate(4));
        for (i, c) in self.c.iter().enumerate() {
            let _ = writeln!(out, "C_{} = {}", i + 1, c);
        }
        out
    }
}

/// Binds `L = log 2` and the requested odd zeta values.
pub fn constant_env<I: IntoIterator<Item = u32>>(zetas: I) -> ConstantEnv {
    let mut env = ConstantEnv::new().bind(Symbol::Log2, LN_2, f64::EPSILON);
    for n in zetas {
        let value = zeta_oracle::zeta_real(f64::from(n)).expect("zeta at an integer above 1");
        env = env.bind(Symbol::Zeta(n), value, 4.0 * f64::EPSILON);
    }
    env
}
