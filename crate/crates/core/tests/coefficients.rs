use critline::optimal_coeffs::{run_pipeline, PipelineResult};
use critline::series_algebra::pari::{parse_coefficient, parse_series};
use critline::series_algebra::ExactCoefficient;

fn pc(s: &str) -> ExactCoefficient {
    parse_coefficient(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn k7() -> PipelineResult {
    run_pipeline(7).unwrap()
}

#[test]
fn w1_and_z_match_reference_output() {
    let r = k7();
    let w1 = parse_series(
        "1/2/z + 2*L - 4*z + (-8 + 18*Z3/L)*z^2 + (-64/3 - 72*Z3/L)*z^3 + O(z^4)",
        10,
    )
    .unwrap();
    assert!(r.w1.agrees_to(&w1, 3), "{}", r.w1);
    let z = parse_series(
        "1/2*z + L*z^2 + (2*L^2 - 1)*z^3 + (4*L^3 - 6*L - 1 + 9/4*Z3/L)*z^4 + O(z^5)",
        10,
    )
    .unwrap();
    assert!(r.z.agrees_to(&z, 4), "{}", r.z);
}

#[test]
fn coefficients_match_reference_output() {
    let r = k7();
    let expected = [
        "L/2",
        "L^2 + L/2",
        "2*L^3 + 2*L^2",
        "4*L^4 + 6*L^3 - L + 9/4*Z3",
        "8*L^5 + 16*L^4 - 8*L^2 - 4/3*L + (18*L + 9/2)*Z3",
        "16*L^6 + 40*L^5 - 40*L^3 - 40/3*L^2 + 4/3*L + (90*L^2+45*L-9)*Z3 - 81/16*Z3^2/L + 225/4*Z5",
        "32*L^7 + 96*L^6 - 160*L^4 - 80*L^3 + 16*L^2 + 34/5*L + 45*(8*L^3 + 6*L^2 - 12/5*L - 1)*Z3 - 81/4*(3-1/L)*Z3^2 + (675*L + 225/2)*Z5",
    ];
    for (k, e) in expected.iter().enumerate() {
        assert_eq!(r.coefficient(k + 1), &pc(e), "C{}", k + 1);
    }
}

#[test]
fn factored_forms_agree() {
    let r = k7();
    assert_eq!(r.coefficient(4), &pc("-L + 6*L^3 + 4*L^4 + 9*Z3/4"));
    assert_eq!(r.coefficient(5), &pc("-4*L/3 - 8*L^2 + 16*L^4 + 8*L^5 + 9*Z3/2 + 18*Z3*L"));
    assert_eq!(
        r.coefficient(6),
        &pc("4*L/3 - 40*L^2/3 - 40*L^3 + 40*L^5 + 16*L^6 + (-9 + 45*L + 90*L^2 - 81*Z3/(16*L))*Z3 + 225*Z5/4")
    );
}

#[test]
fn first_two_match_general_closed_form() {
    // C1 = (L + a0/b0)/2, C2 = (a1/b0 − a0 b1/b0²)/4 + (log b0/2)(L + a0/b0).
    let r = k7();
    let l = ExactCoefficient::log2();
    let inv_b0 = r.b[0].inverse().unwrap();
    let lead = &l + &(&r.a[0] * &inv_b0);
    let c1 = &lead * &ExactCoefficient::from_ratio(1, 2);
    let log_b0 = &l * &ExactCoefficient::from_integer(2);
    let c2 = &(&(&(&r.a[1] * &inv_b0) - &(&(&r.a[0] * &r.b[1]) * &(&inv_b0 * &inv_b0)))
        * &ExactCoefficient::from_ratio(1, 4))
        + &(&(&log_b0 * &ExactCoefficient::from_ratio(1, 2)) * &lead);
    assert_eq!(r.coefficient(1), &c1);
    assert_eq!(r.coefficient(2), &c2);
}

#[test]
fn stationarity_and_inversion_hold() {
    let r = k7();
    let s = r.stationarity_residual().unwrap();
    assert!(s.is_zero() && s.order() >= 7, "{s}");
    let i = r.inversion_residual().unwrap();
    assert!(i.is_zero() && i.order() >= 8, "{i}");
}

#[test]
fn leading_coefficients_are_positive() {
    let vals = k7().numeric().unwrap();
    let l = std::f64::consts::LN_2;
    assert!((vals[0].value - l / 2.0).abs() < 1e-15);
    assert!((vals[1].value - (l / 2.0 + l * l)).abs() < 1e-15);
    assert!((vals[2].value - (2.0 * l * l + 2.0 * l * l * l)).abs() < 1e-15);
    for v in &vals[..3] {
        assert!(v.value.is_finite() && v.value > 0.0);
    }
}

#[test]
fn golden_file_is_current() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/coeffs_K7.txt");
    let stored = std::fs::read_to_string(path).expect("golden file present");
    assert_eq!(stored, k7().to_text());
}

#[test]
fn listing_round_trips_through_the_parser() {
    let r = k7();
    for line in r.to_text().lines().filter(|l| l.starts_with('C')) {
        let (name, expr) = line.split_once(" = ").unwrap();
        let k: usize = name[2..].parse().unwrap();
        assert_eq!(&pc(expr), r.coefficient(k), "{line}");
    }
}
