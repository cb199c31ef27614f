use std::f64::consts::{E, LN_2};

use critline::bound_engine::*;
use critline::prime_arith::lambda_sieve;
use critline::special_f;

#[test]
fn dirichlet_term_is_bounded_by_both_majorants() {
    let table = lambda_sieve(20_000).unwrap();
    for x in [2.5, 47.7, 1000.0, 20_000.0] {
        let abs = dirichlet_abs_bound(&table, x).unwrap();
        let simple = dirichlet_simple_bound(&table, x);
        assert!(abs <= simple + 1e-12, "x = {x}: {abs} > {simple}");
        for t in [10.0, 123.4, 1e3, 5e4] {
            let d = dirichlet_term(&table, t, x).unwrap();
            assert!(d.abs() <= abs + 1e-12, "t = {t}, x = {x}");
        }
    }
}

#[test]
fn dirichlet_term_is_deterministic() {
    let x = 1000f64.ln().powi(2);
    let table = lambda_sieve(100).unwrap();
    let a = dirichlet_term(&table, 1000.0, x).unwrap();
    let b = dirichlet_term(&lambda_sieve(50).unwrap(), 1000.0, x).unwrap();
    assert!((a - b).abs() <= 1e-10);
}

#[test]
fn dirichlet_term_needs_a_long_enough_sieve() {
    let table = lambda_sieve(10).unwrap();
    assert!(matches!(dirichlet_term(&table, 100.0, 20.0), Err(BoundError::Domain(_))));
}

#[test]
fn archimedean_term_at_default_x() {
    for t in [1e3, 1e5] {
        let r = theorem1_rhs(t, default_x(t), None).unwrap();
        let expect = LN_2 * t.ln() / (2.0 * t.ln().ln());
        assert!((r.archimedean_term - expect).abs() < 1e-14);
        assert_eq!(r.rhs_main(), r.dirichlet_term + r.archimedean_term);
        assert_eq!(r.margin, r.rhs_main() - r.oracle_log_abs_zeta);
        assert!(!r.low_confidence());
    }
}

#[test]
fn large_x_at_small_t_is_low_confidence() {
    let r = theorem1_rhs(10.0, 1e6, None).unwrap();
    assert!(r.low_confidence());
    assert!(r.error_scale > 1e3);
}

#[test]
fn rejects_small_arguments() {
    assert!(theorem1_rhs(9.0, 100.0, None).is_err());
    assert!(theorem1_rhs(100.0, 1.5, None).is_err());
}

#[test]
fn w0_weight_approximates_the_f_weight() {
    for x in [100.0, 1e4] {
        for n in [2u64, 3, 5, 10, 37, 99] {
            let w0 = w0_weight(n, x).unwrap();
            let w = special_f::weight(n as f64, x).unwrap();
            let nf = n as f64;
            assert!(w0 > 0.0);
            assert!((w0 - w).abs() <= 2.0 / (nf * nf.ln()), "n = {n}, x = {x}: {w0} vs {w}");
        }
    }
    assert_eq!(w0_weight(100, 100.0).unwrap(), 0.0);
}

#[test]
fn archimedean_identity() {
    for x in [2.0, 10.0, 1e6] {
        let c = archimedean_identity_check(x).unwrap();
        assert!(c.residual.abs() <= 1e-10, "x = {x}: {}", c.residual);
        assert!(c.unit_interval <= c.full);
    }
    assert!((archimedean_identity_check(2.0).unwrap().full - 1.0).abs() <= 1e-10);
}

#[test]
fn gamma_moments() {
    let m = gamma_moment_check(0, E * E).unwrap();
    assert!((m.closed - 1.0).abs() < 1e-15);
    for (k, x) in [(0, E * E), (1, 10.0), (3, 100.0), (2, 1e4)] {
        let m = gamma_moment_check(k, x).unwrap();
        assert!((m.quadrature - m.closed).abs() <= 1e-10, "k = {k}, x = {x}");
        assert!(m.half <= m.quadrature);
    }
}

#[test]
fn optimal_curve_starts_with_stated_coefficients() {
    let c = Curve::new(CurvePolicy::Optimal, 3).unwrap();
    let stated = [LN_2 / 2.0, LN_2 / 2.0 + LN_2 * LN_2, 2.0 * LN_2.powi(2) + 2.0 * LN_2.powi(3)];
    for (a, b) in c.coeffs.iter().zip(stated) {
        assert!((a - b).abs() < 1e-15);
    }
    assert!(matches!(Curve::new(CurvePolicy::Optimal, 8), Err(BoundError::Coeff(_))));
}

#[test]
fn shifted_curve_second_coefficient_at_optimum() {
    let c = Curve::new(CurvePolicy::Shifted(2.0 * LN_2), 0).unwrap();
    assert!((c.coeffs[1] - (LN_2 / 2.0 + LN_2 * LN_2)).abs() < 1e-15);
    assert_eq!(c.coeffs[0], LN_2 / 2.0);
}

#[test]
fn optimal_lies_below_exact_choice() {
    let exact = Curve::new(CurvePolicy::Exact, 3).unwrap();
    let optimal = Curve::new(CurvePolicy::Optimal, 3).unwrap();
    for i in 1..=500 {
        let w = 0.05 * i as f64 / 500.0;
        assert!(optimal.in_w(w) <= exact.in_w(w), "w = {w}");
    }
    // t = 10^1000, given through log t.
    let log_t = 1000.0 * 10f64.ln();
    for k in 3..=7 {
        let o = Curve::new(CurvePolicy::Optimal, k).unwrap().at_log_t(log_t).unwrap();
        let e = Curve::new(CurvePolicy::Exact, k).unwrap().at_log_t(log_t).unwrap();
        assert!(o <= e, "K = {k}: {o} > {e}");
    }
}

#[test]
fn exact_curve_matches_the_closed_sum() {
    let t: f64 = 1e30;
    let ll = t.ln().ln();
    let z3 = 1.202_056_903_159_594_2;
    let expect = LN_2 / 2.0 * t.ln() / ll + 2.0 * LN_2 * t.ln() / ll.powi(2) + 2.0 * t.ln() * 0.75 * 6.0 * z3 / ll.powi(4);
    let got = theorem2_curve(t, CurvePolicy::Exact, 1).unwrap();
    assert!((got - expect).abs() < 1e-12 * expect);
    assert!(matches!(theorem2_curve(2.0, CurvePolicy::Exact, 1), Err(BoundError::Domain(_))));
}

#[test]
fn g_minimum_is_stationary() {
    let m = g_min();
    assert!((m.c_star - 2.0 * LN_2).abs() <= 1e-8);
    assert!((m.g_star - (LN_2 / 2.0 + LN_2 * LN_2)).abs() <= 1e-12);
    assert!((m.g_star - 0.827_026_6).abs() < 1e-7);
    let h = 1e-5;
    let slope = (g(m.c_star + h) - g(m.c_star - h)) / (2.0 * h);
    assert!(slope.abs() <= 1e-10);
    assert!((g(0.0) - 2.0 * LN_2).abs() < 1e-15 && g(0.0) > m.g_star);
}

#[test]
fn scan_keeps_input_order() {
    let ts = log_spaced(1e3, 3e3, 6);
    let pts = scan(&ts, default_x, None).unwrap();
    let got: Vec<f64> = pts
        .iter()
        .map(|p| match p {
            ScanPoint::Report(r) => r.t,
            ScanPoint::Skipped { t } => *t,
        })
        .collect();
    assert_eq!(got, ts);
}
