//! Extremal majorant and minorant of exponential type `2πΔ` for the Poisson
//! kernel `h_β(x) = β/(β² + x²)`.
//!
//! With `c = πβΔ`,
//!
//! ```text
//! m⁺(z) = h_β(z)·(sinh²c + sin²(πΔz)) / sinh²c
//! m⁻(z) = h_β(z)·(sinh²c + sin²(πΔz)) / cosh²c
//! ```
//!
//! Both are entire: the zeros of the numerator cancel the poles at `±iβ`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::numerics::{integrate_panels, Quadrature};

/// Radius around `±iβ` inside which the de-singularized form is used.
pub const SINGULARITY_RADIUS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Majorant,
    Minorant,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Majorant, Sign::Minorant];

    pub fn symbol(self) -> char {
        match self {
            Sign::Majorant => '+',
            Sign::Minorant => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("kernel parameters need beta > 0 and delta > 0 (got beta = {beta}, delta = {delta})")]
pub struct InvalidParams {
    pub beta: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    beta: f64,
    delta: f64,
}

impl KernelParams {
    pub fn new(beta: f64, delta: f64) -> Result<Self, InvalidParams> {
        if beta > 0.0 && delta > 0.0 && beta.is_finite() && delta.is_finite() {
            Ok(Self { beta, delta })
        } else {
            Err(InvalidParams { beta, delta })
        }
    }

    /// Parameters with `Δ = log x / 2π`.
    pub fn from_x(beta: f64, x: f64) -> Result<Self, InvalidParams> {
        Self::new(beta, x.ln() / (2.0 * PI))
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `x = e^{2πΔ}`.
    pub fn x(&self) -> f64 {
        (2.0 * PI * self.delta).exp()
    }

    fn c(&self) -> f64 {
        PI * self.beta * self.delta
    }

    /// `sinh²c` for the majorant, `cosh²c` for the minorant.
    fn denominator(&self, sign: Sign) -> f64 {
        match sign {
            Sign::Majorant => self.c().sinh().powi(2),
            Sign::Minorant => self.c().cosh().powi(2),
        }
    }

    /// `m(x) = h(x)·(α − γ cos 2πΔx)` on the real line.
    fn cosine_form(&self, sign: Sign) -> (f64, f64) {
        let gamma = 0.5 / self.denominator(sign);
        match sign {
            Sign::Majorant => (1.0 + gamma, gamma),
            Sign::Minorant => (1.0 - gamma, gamma),
        }
    }
}

pub fn poisson_h(p: &KernelParams, x: f64) -> f64 {
    p.beta / (p.beta * p.beta + x * x)
}

pub fn poisson_h_complex(p: &KernelParams, z: Complex64) -> Complex64 {
    p.beta / (p.beta * p.beta + z * z)
}

/// `m^±(z)` for complex `z`.
pub fn eval_m(sign: Sign, p: &KernelParams, z: Complex64) -> Complex64 {
    let k = PI * p.delta;
    let den = p.denominator(sign);
    for pole in [Complex64::new(0.0, p.beta), Complex64::new(0.0, -p.beta)] {
        let eps = z - pole;
        if eps.norm() < SINGULARITY_RADIUS {
            // S(z) = sinh²c + sin²(πΔz) vanishes at the pole:
            // β·S(z)/((z − z₀)(z + z₀)) ≈ β(S′(z₀) + S″(z₀)ε/2)/(z + z₀).
            let s1 = k * (2.0 * k * pole).sin();
            let s2 = 2.0 * k * k * (2.0 * k * pole).cos();
            return p.beta * (s1 + s2 * eps * 0.5) / (z + pole) / den;
        }
    }
    let s = p.c().sinh().powi(2) + (k * z).sin().powi(2);
    poisson_h_complex(p, z) * s / den
}

/// `m^±(x)` for real `x`.
pub fn eval_m_real(sign: Sign, p: &KernelParams, x: f64) -> f64 {
    let s = (PI * p.delta * x).sin();
    let h = poisson_h(p, x);
    match sign {
        Sign::Majorant => h * (1.0 + s * s / p.denominator(sign)),
        // sinh²c + sin² = cosh²c − cos², written to avoid cancellation.
        Sign::Minorant => {
            let cs = (PI * p.delta * x).cos();
            h * (1.0 - cs * cs / p.denominator(sign))
        }
    }
}

/// Fourier transform `∫ m(x) e^{−2πixξ} dx`, supported on `[−Δ, Δ]`.
pub fn ft_m(sign: Sign, p: &KernelParams, xi: f64) -> f64 {
    let gap = p.delta - xi.abs();
    if gap <= 0.0 {
        return 0.0;
    }
    2.0 * PI * (2.0 * PI * p.beta * gap).sinh() / (4.0 * p.denominator(sign))
}

/// `‖m^± − h_β‖₁ = 2πe^{−2πβΔ}/(1 ∓ e^{−2πβΔ})`.
pub fn l1_dist(sign: Sign, p: &KernelParams) -> f64 {
    let q = (-2.0 * PI * p.beta * p.delta).exp();
    match sign {
        Sign::Majorant => 2.0 * PI * q / (1.0 - q),
        Sign::Minorant => 2.0 * PI * q / (1.0 + q),
    }
}

/// Truncation point used by the numeric transforms.
pub fn truncation_point(p: &KernelParams) -> f64 {
    1e3_f64.max(1e3 * p.delta)
}

/// `∫_T^∞ h(x) cos(2πνx) dx` and a bound on the error of the returned value.
///
/// For `ν = 0` the integral is exact; otherwise two integrations by parts
/// leave a remainder of at most `|h′(T)|/(2πν)²`.
fn tail_cosine(p: &KernelParams, nu: f64, t: f64) -> (f64, f64) {
    let b = p.beta;
    if nu.abs() < 1e-12 {
        return (PI / 2.0 - (t / b).atan(), 0.0);
    }
    let a = 2.0 * PI * nu.abs();
    let h = b / (b * b + t * t);
    let dh = -2.0 * b * t / (b * b + t * t).powi(2);
    let value = -h * (a * t).sin() / a - dh * (a * t).cos() / (a * a);
    (value, dh.abs() / (a * a))
}

/// `∫_{−∞}^{∞} h(x)·Σ w_j cos(2πν_j x) dx` where the integrand is supplied
/// as `f` on `[0, T]` and its cosine components give the analytic tail.
fn even_integral<F: Fn(f64) -> f64>(
    p: &KernelParams,
    f: F,
    components: &[(f64, f64)],
    max_freq: f64,
) -> Quadrature {
    let t = truncation_point(p);
    let panel = 0.25 / max_freq.max(p.delta).max(1.0);
    let body = integrate_panels(f, 0.0, t, panel, 1e-10);
    let mut tail = 0.0;
    let mut tail_err = 0.0;
    for &(w, nu) in components {
        let (v, e) = tail_cosine(p, nu, t);
        tail += w * v;
        tail_err += w.abs() * e;
    }
    Quadrature {
        value: 2.0 * (body.value + tail),
        error: 2.0 * (body.error + tail_err),
    }
}

/// Fourier transform of `m^±` at `ξ` by quadrature with an analytic tail.
pub fn ft_numeric(sign: Sign, p: &KernelParams, xi: f64) -> Quadrature {
    let (alpha, gamma) = p.cosine_form(sign);
    let components = [
        (alpha, xi),
        (-gamma / 2.0, p.delta + xi),
        (-gamma / 2.0, p.delta - xi),
    ];
    even_integral(
        p,
        |x| eval_m_real(sign, p, x) * (2.0 * PI * xi * x).cos(),
        &components,
        p.delta + xi.abs(),
    )
}

/// `∫ |m^± − h|` by quadrature with an analytic tail.
pub fn l1_numeric(sign: Sign, p: &KernelParams) -> Quadrature {
    let (alpha, gamma) = p.cosine_form(sign);
    // m − h = h·((α − 1) − γ cos 2πΔx) keeps a fixed sign.
    let flip = match sign {
        Sign::Majorant => 1.0,
        Sign::Minorant => -1.0,
    };
    let components = [(flip * (alpha - 1.0), 0.0), (-flip * gamma, p.delta)];
    even_integral(
        p,
        |x| flip * (eval_m_real(sign, p, x) - poisson_h(p, x)),
        &components,
        p.delta,
    )
}

/// Smallest `C` with `m^+(x) ≤ C/(β(1 + x²))` over the given points.
pub fn fitted_decay_constant(p: &KernelParams, xs: &[f64]) -> f64 {
    xs.iter()
        .map(|&x| eval_m_real(Sign::Majorant, p, x) * p.beta * (1.0 + x * x))
        .fold(0.0, f64::max)
}
