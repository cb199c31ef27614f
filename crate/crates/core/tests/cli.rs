use std::process::{Command, Output};

use critline::series_algebra::pari::parse_coefficient;

fn critline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critline"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coeffs_prints_the_first_two() {
    let o = critline(&["coeffs", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# critline "));
    let get = |name: &str| {
        let line = text.lines().find(|l| l.starts_with(name)).unwrap();
        parse_coefficient(line.split_once(" = ").unwrap().1).unwrap()
    };
    assert_eq!(get("C_1 ="), parse_coefficient("L/2").unwrap());
    assert_eq!(get("C_2 ="), parse_coefficient("L^2 + L/2").unwrap());
}

#[test]
fn coeffs_numeric_column_and_order_limit() {
    let o = critline(&["coeffs", "--order", "3", "--numeric"]);
    let text = stdout(&o);
    let c1: f64 = text
        .lines()
        .find(|l| l.starts_with("C_1 ~"))
        .and_then(|l| l.split_whitespace().nth(2))
        .unwrap()
        .parse()
        .unwrap();
    assert!((c1 - std::f64::consts::LN_2 / 2.0).abs() < 1e-15);

    let o = critline(&["coeffs", "--order", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
}

#[test]
fn special_f_at_one_half() {
    let o = critline(&["special-f", "--u", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().find(|l| l.starts_with("0.5")).unwrap();
    let vals: Vec<f64> = row.split_whitespace().skip(1).map(|v| v.parse().unwrap()).collect();
    assert_eq!(vals.len(), 3);
    for v in vals {
        assert!((v - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let o = critline(&["bound", "--t", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--t"));
    assert_eq!(critline(&["coeffs", "--bogus"]).status.code(), Some(2));
    assert_eq!(critline(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(critline(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["bound", "--t", "1000"];
    let a = critline(&args);
    let b = critline(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let p = path.to_str().unwrap();
    let o = critline(&[
        "scan", "--t-min", "1e3", "--t-max", "2e3", "--points", "4", "--x-policy", "logsq", "--out", p,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(
        lines.next(),
        Some("t,x,log_abs_zeta,dirichlet_term,arch_term,rhs_main,margin,error_scale")
    );
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty() && rows.len() <= 4);
    let mut prev = 0.0;
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), 8);
        for c in &cells {
            let v: f64 = c.parse().unwrap();
            assert_eq!(&format!("{v:.16e}"), c);
        }
        let t: f64 = cells[0].parse().unwrap();
        assert!(t > prev);
        prev = t;
        let (d, a, rhs): (f64, f64, f64) =
            (cells[3].parse().unwrap(), cells[4].parse().unwrap(), cells[5].parse().unwrap());
        assert_eq!(d + a, rhs);
    }
}

#[test]
fn verify_ef_passes_at_the_reference_point() {
    let o = critline(&["verify-ef", "--t", "100", "--beta", "0.5", "--delta", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).matches(" ok").count(), 2);
}

#[test]
fn missing_zero_file_is_a_computation_error() {
    let o = critline(&["verify-ef", "--t", "100", "--beta", "0.5", "--delta", "1", "--zeros", "/nonexistent/zeros.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/zeros.txt"));
}

#[test]
fn extremal_checks_pass() {
    let o = critline(&["extremal", "--beta", "0.5", "--delta", "1", "--grid", "1000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("sandwich on 1000 points: ok"));
}

#[test]
fn selftest_subset() {
    let o = critline(&["selftest", "--only", "1", "2", "11"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("[PASS]").count(), 3);
}
