//! Floating-point building blocks shared by the numerical modules:
//! compensated summation, adaptive Gauss–Kronrod quadrature and a
//! bracketing root finder.

use num_complex::Complex64;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of complex values (independent real and imaginary parts).
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Compensated sum of an iterator of reals.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<CompensatedSum>().value()
}

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK tables).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One Gauss–Kronrod 7/15 step on `[a, b]`: (Kronrod estimate, |K − G|).
pub fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Result of a quadrature: value and a (conservative) error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

impl Quadrature {
    pub fn add(self, other: Quadrature) -> Quadrature {
        Quadrature {
            value: self.value + other.value,
            error: self.error + other.error,
        }
    }
}

const MAX_DEPTH: u32 = 60;

/// Adaptive bisection with the Gauss–Kronrod 15 rule.
///
/// The tolerance is split between the two halves at each subdivision, so the
/// accumulated `|K − G|` estimate stays below `abs_tol` unless the depth
/// limit is reached.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Quadrature {
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    adapt(&f, a, b, abs_tol, 0, &mut acc, &mut err);
    Quadrature {
        value: acc.value(),
        error: err,
    }
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    acc: &mut CompensatedSum,
    err: &mut f64,
) {
    let (value, estimate) = gauss_kronrod_15(f, a, b);
    // Below ~1e-15 relative the Gauss/Kronrod difference is rounding noise.
    let floor = 50.0 * f64::EPSILON * value.abs();
    if estimate <= tol.max(floor) || depth >= MAX_DEPTH {
        acc.add(value);
        *err += estimate;
        return;
    }
    let mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1, acc, err);
    adapt(f, mid, b, 0.5 * tol, depth + 1, acc, err);
}

/// Splits `[a, b]` into panels no wider than `panel` and integrates each
/// adaptively; the tolerance is shared evenly across panels. Intended for
/// oscillatory integrands whose period is known.
pub fn integrate_panels<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    panel: f64,
    abs_tol: f64,
) -> Quadrature {
    let n = (((b - a) / panel).ceil() as usize).max(1);
    let width = (b - a) / n as f64;
    let tol = abs_tol / n as f64;
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    for i in 0..n {
        let lo = a + width * i as f64;
        let hi = if i + 1 == n { b } else { lo + width };
        adapt(&f, lo, hi, tol, 0, &mut acc, &mut err);
    }
    Quadrature {
        value: acc.value(),
        error: err,
    }
}

/// Bisection on a sign change of `f` in `[lo, hi]`, to `tol` in the argument.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(lo);
    }
    if f_hi == 0.0 {
        return Some(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid == lo || mid == hi {
            return Some(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut values = vec![1.0e16];
        values.extend(std::iter::repeat(1.0).take(1000));
        values.push(-1.0e16);
        assert_eq!(compensated_sum(values), 1000.0);
    }

    #[test]
    fn gk15_is_exact_for_low_degree_polynomials() {
        let (v, _) = gauss_kronrod_15(&|x: f64| x.powi(20) - 3.0 * x.powi(7) + 1.0, 0.0, 1.0);
        assert!((v - (1.0 / 21.0 - 3.0 / 8.0 + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn adaptive_integration_of_peaked_function() {
        // ∫_{-1}^{1} 1/(x² + 1e-4) dx = 2·100·atan(100)
        let q = integrate(|x| 1.0 / (x * x + 1e-4), -1.0, 1.0, 1e-10);
        let exact = 200.0 * 100.0_f64.atan();
        assert!((q.value - exact).abs() < 1e-9, "{} vs {}", q.value, exact);
    }

    #[test]
    fn panels_handle_oscillation() {
        // ∫_0^{100} cos(2πx)² dx = 50
        let q = integrate_panels(|x| (2.0 * PI * x).cos().powi(2), 0.0, 100.0, 0.5, 1e-12);
        assert!((q.value - 50.0).abs() < 1e-11);
    }

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-15).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
        assert!(bisect(|x| x * x + 1.0, 0.0, 2.0, 1e-15).is_none());
    }
}
