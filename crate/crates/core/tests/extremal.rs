use std::f64::consts::PI;

use critline::extremal_poisson::*;
use critline::numerics::integrate;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid_params() -> Vec<KernelParams> {
    let mut out = Vec::new();
    for beta in [0.1, 0.5, 1.0] {
        for delta in [1.0, 2.0] {
            out.push(KernelParams::new(beta, delta).unwrap());
        }
    }
    out
}

#[test]
fn poisson_kernel_integrates_to_pi() {
    let p = KernelParams::new(1.0, 1.0).unwrap();
    let cut = 1e4;
    let body = integrate(|x| poisson_h(&p, x), 0.0, cut, 1e-12);
    let tail = PI / 2.0 - cut.atan();
    assert!((2.0 * (body.value + tail) - PI).abs() < 1e-8);
}

#[test]
fn sandwich_holds_on_grid() {
    for p in grid_params() {
        for i in 0..10_000 {
            let x = -50.0 + 100.0 * i as f64 / 9_999.0;
            let lo = eval_m_real(Sign::Minorant, &p, x);
            let h = poisson_h(&p, x);
            let hi = eval_m_real(Sign::Majorant, &p, x);
            assert!(lo >= 0.0 && lo <= h && h <= hi, "{p:?} x={x}: {lo} {h} {hi}");
        }
    }
}

#[test]
fn minorant_is_nonnegative_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p = KernelParams::new(0.5, 1.0).unwrap();
    for _ in 0..10_000 {
        let x: f64 = rng.gen_range(-1e3..1e3);
        assert!(eval_m_real(Sign::Minorant, &p, x) >= 0.0);
    }
}

#[test]
fn evenness() {
    for p in grid_params() {
        for s in Sign::BOTH {
            for x in [0.3, 1.7, 12.5] {
                assert_eq!(eval_m_real(s, &p, x), eval_m_real(s, &p, -x));
                assert_eq!(ft_m(s, &p, x * 0.1), ft_m(s, &p, -x * 0.1));
            }
        }
    }
}

#[test]
fn numeric_transform_matches_closed_form() {
    for (beta, delta) in [(1.0, 1.0), (0.5, 2.0)] {
        let p = KernelParams::new(beta, delta).unwrap();
        for s in Sign::BOTH {
            for xi in [0.0, delta / 2.0, delta, 1.5 * delta] {
                let q = ft_numeric(s, &p, xi);
                let exact = ft_m(s, &p, xi);
                assert!(
                    (q.value - exact).abs() <= 1e-6,
                    "{s:?} beta={beta} delta={delta} xi={xi}: {} vs {exact} (err {})",
                    q.value,
                    q.error
                );
            }
        }
    }
}

#[test]
fn numeric_l1_matches_closed_form() {
    for p in grid_params() {
        for s in Sign::BOTH {
            let q = l1_numeric(s, &p);
            let exact = l1_dist(s, &p);
            assert!((q.value - exact).abs() <= 1e-6 * exact, "{p:?} {s:?}: {} vs {exact}", q.value);
        }
    }
}

#[test]
fn l1_decreases_and_majorant_is_larger() {
    let mut prev = f64::INFINITY;
    for delta in [1.0, 2.0, 4.0, 8.0] {
        let p = KernelParams::new(1.0, delta).unwrap();
        let v = l1_dist(Sign::Majorant, &p);
        assert!(v < prev);
        prev = v;
    }
    for p in grid_params() {
        assert!(l1_dist(Sign::Majorant, &p) > l1_dist(Sign::Minorant, &p));
    }
}

#[test]
fn fitted_decay_constant_is_moderate() {
    let xs: Vec<f64> = (0..20_000).map(|i| i as f64 * 0.05).collect();
    for p in grid_params() {
        let c = fitted_decay_constant(&p, &xs);
        assert!(c <= 100.0, "{p:?}: fitted C = {c}");
    }
}

#[test]
fn shifted_evaluation_is_finite_and_small() {
    let p = KernelParams::new(1.0, 1.0).unwrap();
    for t in [100.0, 1000.0] {
        for shift in [0.5, -0.5] {
            let m = eval_m(Sign::Majorant, &p, Complex64::new(t, shift));
            assert!(m.is_finite());
            // |sin(πΔ(t ± i/2))|² ≤ cosh²(πΔ/2), so |m| ≲ h(t)·(1 + cosh²(π/2)/sinh²π).
            let bound = 1.01 / (t * t - 1.0) * (1.0 + (PI / 2.0).cosh().powi(2) / PI.sinh().powi(2));
            assert!(m.norm() <= bound, "t={t}: {m}");
        }
    }
}
