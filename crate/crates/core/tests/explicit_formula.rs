mod common;

use critline::explicit_formula::*;
use critline::extremal_poisson::{KernelParams, Sign};
use critline::prime_arith::lambda_sieve;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn explicit_formula_balances() {
    for (t, beta, delta) in [(50.0, 1.0, 1.0), (100.0, 0.5, 1.0), (200.0, 0.5, 0.8)] {
        let p = KernelParams::new(beta, delta).unwrap();
        for s in Sign::BOTH {
            let c = gw_check(s, &p, t, common::table()).unwrap();
            assert!(
                c.discrepancy() <= c.zero_side.tail_bound + 1e-3,
                "t = {t}, beta = {beta}, delta = {delta}, {s:?}: {} vs {}",
                c.zero_side.sum,
                c.prime_side.rhs_total
            );
        }
    }
}

#[test]
fn zero_side_ordering_and_tail() {
    let p = KernelParams::new(0.5, 1.0).unwrap();
    let plus = gw_zero_side(Sign::Majorant, &p, 100.0, common::table()).unwrap();
    let minus = gw_zero_side(Sign::Minorant, &p, 100.0, common::table()).unwrap();
    assert!(minus.sum <= plus.sum);
    assert!(plus.tail_bound < 1e-2 && minus.tail_bound < 1e-2);
}

#[test]
fn zero_side_grows_with_table_height() {
    let p = KernelParams::new(0.5, 1.0).unwrap();
    let mut prev = f64::NEG_INFINITY;
    for h in [1000.0, 2000.0, 5000.0, 10_000.0] {
        let t = common::table().truncated(h).unwrap();
        let s = gw_zero_side(Sign::Majorant, &p, 100.0, &t).unwrap().sum;
        assert!(s >= prev);
        prev = s;
    }
}

#[test]
fn insufficient_height_is_reported() {
    let p = KernelParams::new(0.5, 1.0).unwrap();
    let short = common::table().truncated(500.0).unwrap();
    assert!(matches!(
        gw_zero_side(Sign::Majorant, &p, 100.0, &short),
        Err(ExplicitError::InsufficientHeight { .. })
    ));
}

#[test]
fn prime_term_forms_agree_on_random_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let table = lambda_sieve(100_000).unwrap();
    for _ in 0..100 {
        let beta: f64 = rng.gen_range(0.1..1.0);
        let delta: f64 = rng.gen_range(0.2..2.0);
        let t: f64 = rng.gen_range(10.0..1e4);
        let p = KernelParams::new(beta, delta).unwrap();
        for s in Sign::BOTH {
            let a = prime_term_fourier(s, &p, t, &table);
            let b = prime_term_sinh(s, &p, t, &table);
            assert!((a - b).abs() <= 1e-9, "beta = {beta}, delta = {delta}, t = {t}: {a} vs {b}");
        }
    }
}

#[test]
fn partial_fraction_residuals() {
    for (beta, t) in [(1.0, 100.0), (0.25, 500.0), (0.5, 1000.0)] {
        let r = partial_fraction_residual(beta, t, common::table()).unwrap();
        assert!(r.sum.abs() <= 10.0 / t + r.tail_bound, "beta = {beta}, t = {t}: {}", r.sum);
    }
}

#[test]
fn bracket_at_reference_point() {
    let (t, x, beta) = (1000.0, 50.0, 0.5);
    let b = lemma3_bracket(t, x, beta).unwrap();
    let slack = 5.0 + 5.0 * x.sqrt() * x.ln() / t;
    assert!(b.left_main - slack <= b.middle && b.middle <= b.right_main + slack, "{b:?}");
}
