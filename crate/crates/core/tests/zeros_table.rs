mod common;

use critline::zeros_table::*;
use critline::zeta_oracle;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn bundled_table_shape() {
    let t = common::table();
    assert!(t.max_height() >= 1e4);
    assert!((t.gammas()[0] - 14.134_725).abs() < 1e-6);
    assert!(t.gammas().windows(2).all(|w| w[1] > w[0]));
    assert!(t.low_precision_lines().is_empty());
}

#[test]
fn counts_agree_with_riemann_von_mangoldt() {
    let t = common::table();
    assert_eq!(t.zero_count_check(100.0).unwrap().counted, 29);
    assert_eq!(t.zero_count_check(14.0).unwrap().counted, 0);
    for h in [100.0, 1e3, 1e4] {
        let c = t.zero_count_check(h).unwrap();
        assert!(c.discrepancy() <= 2.0 * h.ln(), "{c:?}");
    }
    assert!(matches!(t.zero_count_check(1e5), Err(ZeroTableError::HeightExceeded { .. })));
}

#[test]
fn gaps_are_sane() {
    let (_, gap) = common::table().largest_gap_above(50.0).unwrap();
    assert!(gap > 0.0 && gap < 10.0);
}

#[test]
fn ordinates_are_zeros() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let worst = common::table().spot_check(Some(50), &mut rng).unwrap();
    assert!(worst <= 1e-5, "{worst}");
    let z = zeta_oracle::zeta(Complex64::new(0.5, common::table().gammas()[0])).unwrap();
    assert!(z.norm() <= 1e-6);
}

#[test]
fn distance_to_nearest() {
    let t = common::table();
    let g = t.gammas()[10];
    assert!(t.distance_to_nearest(g + 0.001) < 0.0011);
    assert!(t.distance_to_nearest(g) == 0.0);
}
