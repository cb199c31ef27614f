//! The acceptance suite: eleven end-to-end checks, shared by the `selftest`
//! subcommand and the `acceptance` integration test.

use std::f64::consts::{LN_2, PI};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bound_engine::{self, ScanPoint};
use crate::explicit_formula::{self, lemma3_bracket_with};
use crate::extremal_poisson::{self as ep, KernelParams, Sign};
use crate::optimal_coeffs::run_pipeline;
use crate::prime_arith::{lambda_sieve, LambdaTable};
use crate::series_algebra::pari::{parse_coefficient, parse_series};
use crate::series_algebra::{ExactCoefficient, TruncatedSeries};
use crate::special_f::{self, FMethod};
use crate::zeros_table::ZeroTable;
use crate::zeta_oracle;

/// Printed reference output of the coefficient script: `w1`, `Z`, then `C_1 … C_7`.
pub const REFERENCE_W1: &str =
    "1/2/z + 2*L - 4*z + (-8 + 18*Z3/L)*z^2 + (-64/3 - 72*Z3/L)*z^3 + O(z^4)";
pub const REFERENCE_Z: &str =
    "1/2*z + L*z^2 + (2*L^2 - 1)*z^3 + (4*L^3 - 6*L - 1 + 9/4*Z3/L)*z^4 + O(z^5)";
pub const REFERENCE_C: [&str; 7] = [
    "L/2",
    "L^2 + L/2",
    "2*L^3 + 2*L^2",
    "4*L^4 + 6*L^3 - L + 9/4*Z3",
    "8*L^5 + 16*L^4 - 8*L^2 - 4/3*L + (18*L + 9/2)*Z3",
    "16*L^6 + 40*L^5 - 40*L^3 - 40/3*L^2  + 4/3*L+ (90*L^2+45*L-9)*Z3 - 81/16*Z3^2/L + 225/4*Z5",
    "32*L^7 + 96*L^6 - 160*L^4 - 80*L^3 + 16*L^2 + 34/5*L + 45*(8*L^3 + 6*L^2 - 12/5*L - 1)*Z3 - 81/4*(3-1/L)*Z3^2 + (675*L + 225/2)*Z5",
];

/// The same constants written in their conventional factored forms.
pub const STATED_C: [&str; 6] = [
    "L/2",
    "L/2 + L^2",
    "2*L^2 + 2*L^3",
    "-L + 6*L^3 + 4*L^4 + 9*Z3/4",
    "-4*L/3 - 8*L^2 + 16*L^4 + 8*L^5 + 9*Z3/2 + 18*Z3*L",
    "4*L/3 - 40*L^2/3 - 40*L^3 + 40*L^5 + 16*L^6 + (-9 + 45*L + 90*L^2 - 81*Z3/(16*L))*Z3 + 225*Z5/4",
];

pub const CRITERIA: [&str; 11] = [
    "symbolic golden match",
    "stated coefficients",
    "F consistency",
    "extremal kernel",
    "explicit formula",
    "partial-fraction residual",
    "log-derivative bracket",
    "empirical bound margins",
    "prime-sum estimate",
    "zeta oracle",
    "series algebra properties",
];

/// Result of one criterion.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    /// The scan CSV for criterion 8.
    pub artifact: Option<String>,
}

impl Outcome {
    /// One summary line, `[PASS] 3 F consistency (0.41 s): …`.
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({:.2} s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = Result<(String, Option<String>), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(start: Instant, limit: f64) -> Result<(), String> {
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < limit, || format!("took {secs:.2} s, limit {limit} s"))
}

fn need_table(zeros: Option<&ZeroTable>, height: f64) -> Result<&ZeroTable, String> {
    let z = zeros.ok_or("no zero table loaded")?;
    ensure(z.max_height() >= height, || {
        format!("zero table reaches {}, need {height}", z.max_height())
    })?;
    Ok(z)
}

fn pc(s: &str) -> Result<ExactCoefficient, String> {
    parse_coefficient(s).map_err(|e| format!("{s}: {e}"))
}

/// Runs criterion `id` (1-based).
pub fn run(id: usize, zeros: Option<&ZeroTable>) -> Outcome {
    let start = Instant::now();
    let result = match id {
        1 => golden_match(),
        2 => stated_coefficients(),
        3 => f_consistency(),
        4 => extremal_kernel(),
        5 => explicit_formula_check(zeros),
        6 => partial_fraction(zeros),
        7 => bracket(),
        8 => margins(zeros),
        9 => prime_sum(),
        10 => oracle(zeros),
        11 => series_properties(),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail, artifact) = match result {
        Ok((d, a)) => (true, d, a),
        Err(d) => (false, d, None),
    };
    Outcome {
        id,
        title: CRITERIA.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        elapsed: start.elapsed(),
        artifact,
    }
}

pub fn run_all(zeros: Option<&ZeroTable>) -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(|id| run(id, zeros)).collect()
}

fn golden_match() -> Check {
    let start = Instant::now();
    let r = run_pipeline(7).map_err(|e| e.to_string())?;
    within_time(start, 1.0)?;
    let w1 = parse_series(REFERENCE_W1, 10).map_err(|e| e.to_string())?;
    ensure(r.w1.agrees_to(&w1, 3), || format!("w1 = {}", r.w1.truncate(3)))?;
    let z = parse_series(REFERENCE_Z, 10).map_err(|e| e.to_string())?;
    ensure(r.z.agrees_to(&z, 4), || format!("Z = {}", r.z.truncate(4)))?;
    for (k, s) in REFERENCE_C.iter().enumerate() {
        let c = r.coefficient(k + 1);
        ensure(c == &pc(s)?, || format!("C_{} = {c}", k + 1))?;
    }
    Ok(("w1, Z and C_1..C_7 identical".into(), None))
}

fn stated_coefficients() -> Check {
    let r = run_pipeline(6).map_err(|e| e.to_string())?;
    for (k, s) in STATED_C.iter().enumerate() {
        let c = r.coefficient(k + 1);
        ensure(c == &pc(s)?, || format!("C_{} = {c}, stated {s}", k + 1))?;
    }
    Ok(("C_1..C_6 identical".into(), None))
}

fn f_consistency() -> Check {
    let start = Instant::now();
    let mut worst_spread: f64 = 0.0;
    for i in 1..=19 {
        let u = 0.05 * i as f64;
        let vals = FMethod::ALL
            .iter()
            .map(|&m| special_f::f_eval(u, m))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let (lo, hi) = vals
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        worst_spread = worst_spread.max(hi - lo);
        ensure(hi - lo <= 1e-9, || format!("methods disagree at u = {u}: {vals:?}"))?;
        ensure(hi <= special_f::f_upper_bound(u), || format!("F({u}) = {hi} above 2u/(1-u^2)"))?;
    }
    for m in FMethod::ALL {
        let v = special_f::f_eval(0.5, m).map_err(|e| e.to_string())?;
        ensure((v - 1.0).abs() <= 1e-12, || format!("F(1/2) = {v} by {}", m.name()))?;
    }
    for x in [100.0, 1e4] {
        for n in 2..=(x as u64) {
            let nf = n as f64;
            let w = special_f::weight(nf, x).map_err(|e| e.to_string())?;
            let (first, second) = special_f::weight_bounds(nf, x);
            // Rounding slack only; at n = x all three vanish.
            let slack = 1e-12;
            ensure(w >= -slack && w <= first + slack && first <= second + slack, || {
                format!("bounds fail at x = {x}, n = {n}: {w} {first} {second}")
            })?;
        }
    }
    within_time(start, 10.0)?;
    Ok((format!("max method spread {worst_spread:.1e}"), None))
}

fn extremal_kernel() -> Check {
    let start = Instant::now();
    let mut worst_l1: f64 = 0.0;
    let mut worst_ft: f64 = 0.0;
    for beta in [0.1, 0.5, 1.0] {
        for delta in [1.0, 2.0] {
            let p = KernelParams::new(beta, delta).map_err(|e| e.to_string())?;
            for i in 0..10_000 {
                let x = -50.0 + 100.0 * i as f64 / 9_999.0;
                let lo = ep::eval_m_real(Sign::Minorant, &p, x);
                let h = ep::poisson_h(&p, x);
                let hi = ep::eval_m_real(Sign::Majorant, &p, x);
                ensure(lo <= h && h <= hi, || {
                    format!("sandwich fails at beta = {beta}, delta = {delta}, x = {x}")
                })?;
            }
            for s in Sign::BOTH {
                let exact = ep::l1_dist(s, &p);
                let rel = (ep::l1_numeric(s, &p).value - exact).abs() / exact;
                worst_l1 = worst_l1.max(rel);
                ensure(rel <= 1e-6, || format!("L1 {s:?} beta = {beta}, delta = {delta}: rel {rel:.1e}"))?;
                for xi in [0.0, delta / 2.0, delta] {
                    let err = (ep::ft_numeric(s, &p, xi).value - ep::ft_m(s, &p, xi)).abs();
                    worst_ft = worst_ft.max(err);
                    ensure(err <= 1e-6, || {
                        format!("FT {s:?} beta = {beta}, delta = {delta}, xi = {xi}: {err:.1e}")
                    })?;
                }
                let outside = ep::ft_numeric(s, &p, 1.5 * delta).value.abs();
                ensure(outside <= 1e-6, || {
                    format!("FT {s:?} beta = {beta}, delta = {delta} at 1.5 delta: {outside:.1e}")
                })?;
            }
        }
    }
    within_time(start, 60.0)?;
    Ok((format!("L1 rel {worst_l1:.1e}, FT abs {worst_ft:.1e}"), None))
}

fn explicit_formula_check(zeros: Option<&ZeroTable>) -> Check {
    let start = Instant::now();
    let table = need_table(zeros, 1e4)?;
    let mut out = String::new();
    for (t, beta, delta) in [(50.0, 1.0, 1.0), (100.0, 0.5, 1.0)] {
        let p = KernelParams::new(beta, delta).map_err(|e| e.to_string())?;
        for s in Sign::BOTH {
            let check = explicit_formula::gw_check(s, &p, t, table).map_err(|e| e.to_string())?;
            let gap = check.discrepancy();
            let allowed = check.zero_side.tail_bound + 1e-3;
            ensure(gap <= allowed, || {
                format!("t = {t}, beta = {beta}, {s:?}: |zeros - primes| = {gap:.3e} > {allowed:.3e}")
            })?;
            let forms = (check.prime_side.prime_term - check.prime_side.prime_term_sinh).abs();
            ensure(forms <= 1e-9, || format!("prime forms differ by {forms:.1e}"))?;
            let _ = write!(out, "{}{:.1e} ", s.symbol(), gap);
        }
    }
    within_time(start, 300.0)?;
    Ok((format!("discrepancies {}", out.trim_end()), None))
}

fn partial_fraction(zeros: Option<&ZeroTable>) -> Check {
    let table = need_table(zeros, 1e4)?;
    let mut out = String::new();
    for (beta, t) in [(1.0, 100.0), (0.25, 500.0), (0.5, 1000.0)] {
        let r = explicit_formula::partial_fraction_residual(beta, t, table).map_err(|e| e.to_string())?;
        let allowed = 10.0 / t + r.tail_bound;
        ensure(r.sum.abs() <= allowed, || {
            format!("beta = {beta}, t = {t}: residual {:.3e} > {allowed:.3e}", r.sum)
        })?;
        let _ = write!(out, "{:.1e} ", r.sum);
    }
    Ok((format!("residuals {}", out.trim_end()), None))
}

fn bracket() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_231_102);
    let t_max: f64 = 1e5;
    let sieve: LambdaTable = lambda_sieve((4.0 * t_max.ln().powi(2)).ceil() as u64).map_err(|e| e.to_string())?;
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..20 {
        let t: f64 = rng.gen_range(1e3..t_max);
        let x: f64 = rng.gen_range(10.0..4.0 * t.ln().powi(2));
        let beta: f64 = rng.gen_range(0.1..1.0);
        let b = lemma3_bracket_with(t, x, beta, &sieve).map_err(|e| e.to_string())?;
        let slack = 5.0 + 5.0 * x.sqrt() * x.ln() / t;
        let excess = (b.left_main - slack - b.middle).max(b.middle - b.right_main - slack);
        worst = worst.max(excess + slack);
        ensure(excess <= 0.0, || {
            format!("t = {t}, x = {x}, beta = {beta}: {} <= {} <= {} fails", b.left_main, b.middle, b.right_main)
        })?;
    }
    Ok((format!("worst main-term violation {worst:.3} (negative: none)"), None))
}

/// CSV header of a bound scan.
pub const SCAN_HEADER: &str = "t,x,log_abs_zeta,dirichlet_term,arch_term,rhs_main,margin,error_scale";

/// Writes reports as CSV with 17 significant digits.
pub fn scan_csv(points: &[ScanPoint]) -> String {
    let mut out = String::from(SCAN_HEADER);
    out.push('\n');
    for p in points {
        if let ScanPoint::Report(r) = p {
            let row = [
                r.t,
                r.x,
                r.oracle_log_abs_zeta,
                r.dirichlet_term,
                r.archimedean_term,
                r.rhs_main(),
                r.margin,
                r.error_scale,
            ];
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}

fn margins(zeros: Option<&ZeroTable>) -> Check {
    let ts = bound_engine::log_spaced(1e3, 1e6, 50);
    let points = bound_engine::scan(&ts, bound_engine::default_x, zeros).map_err(|e| e.to_string())?;
    let mut margins: Vec<f64> = points
        .iter()
        .filter_map(|p| match p {
            ScanPoint::Report(r) => Some(r.margin),
            ScanPoint::Skipped { .. } => None,
        })
        .collect();
    ensure(!margins.is_empty(), || "every point was skipped".into())?;
    margins.sort_by(f64::total_cmp);
    let min = margins[0];
    let n = margins.len();
    let median = if n % 2 == 1 {
        margins[n / 2]
    } else {
        0.5 * (margins[n / 2 - 1] + margins[n / 2])
    };
    ensure(min >= -2.0, || format!("minimum margin {min:.3}"))?;
    ensure(median > 0.0, || format!("median margin {median:.3}"))?;
    Ok((
        format!("{n} points, min margin {min:.3}, median {median:.3}"),
        Some(scan_csv(&points)),
    ))
}

fn prime_sum() -> Check {
    let table = lambda_sieve(1_000_000).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for x in [1e4f64, 1e5, 1e6] {
        let v = table.weighted_psi(x as u64);
        let gap = (v - 2.0 * x.sqrt()).abs();
        let allowed = 2.0 * x.ln().powi(3);
        ensure(gap <= allowed, || format!("x = {x}: |{v} - 2 sqrt x| = {gap:.1} > {allowed:.1}"))?;
        let _ = write!(out, "{gap:.1}/{allowed:.0} ");
    }
    Ok((format!("gap/allowed {}", out.trim_end()), None))
}

fn oracle(zeros: Option<&ZeroTable>) -> Check {
    let z2 = zeta_oracle::zeta_real(2.0).map_err(|e| e.to_string())?;
    let e2 = (z2 - PI * PI / 6.0).abs();
    ensure(e2 <= 1e-12, || format!("zeta(2) off by {e2:.1e}"))?;
    let table = need_table(zeros, 1e4)?;
    let g1 = table.gammas()[0];
    let at_zero = zeta_oracle::zeta(Complex64::new(0.5, g1)).map_err(|e| e.to_string())?.norm();
    ensure(at_zero <= 1e-6, || format!("|zeta(1/2 + i {g1})| = {at_zero:.1e}"))?;
    let mut out = String::new();
    for h in [100.0, 1e3, 1e4] {
        let c = table.zero_count_check(h).map_err(|e| e.to_string())?;
        let allowed = 2.0 * h.ln();
        ensure(c.discrepancy() <= allowed, || {
            format!("N({h}) = {} vs {:.2}", c.counted, c.predicted)
        })?;
        let _ = write!(out, "N({h}) = {} ", c.counted);
    }
    Ok((format!("zeta(2) err {e2:.1e}, |zeta(rho_1)| {at_zero:.1e}, {}", out.trim_end()), None))
}

fn random_series(rng: &mut ChaCha8Rng, order: i32) -> TruncatedSeries {
    let terms = (1..=order).map(|k| {
        let mut num: i64 = rng.gen_range(-9..=9);
        if k == 1 && num == 0 {
            num = 1;
        }
        (k, ExactCoefficient::from_ratio(num, rng.gen_range(1..=5)))
    });
    TruncatedSeries::from_terms(terms, order)
}

fn series_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let order = 12;
    for i in 0..200 {
        let a = random_series(&mut rng, order);
        let b = a.revert().map_err(|e| e.to_string())?;
        let round = a.compose(&b).map_err(|e| e.to_string())?;
        ensure(round.agrees_to(&TruncatedSeries::variable(order), order), || {
            format!("draw {i}: a(revert(a)) = {round}")
        })?;
        let unit = &a.shift(-1) + &TruncatedSeries::one(order - 1);
        let back = unit.recip().and_then(|r| r.recip()).map_err(|e| e.to_string())?;
        ensure(back.agrees_to(&unit, order - 1), || format!("draw {i}: recip(recip(a)) = {back}"))?;
    }
    let g = bound_engine::g_min();
    let dc = (g.c_star - 2.0 * LN_2).abs();
    ensure(dc <= 1e-8, || format!("c_star = {}", g.c_star))?;
    let mut worst: f64 = 0.0;
    for x in [2.0, 10.0, 1e6] {
        let r = bound_engine::archimedean_identity_check(x).map_err(|e| e.to_string())?;
        worst = worst.max(r.residual.abs());
        ensure(r.residual.abs() <= 1e-10, || format!("archimedean residual {:.1e} at x = {x}", r.residual))?;
    }
    for (k, x) in [(0, std::f64::consts::E.powi(2)), (1, 10.0), (3, 100.0)] {
        let m = bound_engine::gamma_moment_check(k, x).map_err(|e| e.to_string())?;
        let r = (m.quadrature - m.closed).abs();
        worst = worst.max(r);
        ensure(r <= 1e-10, || format!("gamma moment k = {k}, x = {x}: {r:.1e}"))?;
        ensure(m.half <= m.quadrature, || format!("half-range moment exceeds full at k = {k}"))?;
    }
    Ok((format!("200 round-trips exact, c_star err {dc:.1e}, residuals {worst:.1e}"), None))
}
