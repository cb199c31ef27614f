//! Command-line front end. Every run starts with `#` header lines giving the
//! version, the arguments, and the numeric constants in use.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::acceptance;
use crate::bound_engine::{self, ScanPoint};
use crate::explicit_formula;
use crate::extremal_poisson::{self as ep, KernelParams, Sign};
use crate::optimal_coeffs::{run_pipeline_with, PipelineOptions};
use crate::special_f::{self, FMethod};
use crate::zeros_table::{load_zeros, resolve_zeros_path, ZeroTable};
use crate::zeta_oracle;

#[derive(Debug, Parser)]
#[command(name = "critline", version, about = "Checks of a conditional bound for log|zeta(1/2+it)|")]
pub struct Cli {
    /// Zero ordinate table (default: $CRITLINE_ZEROS, then the bundled table).
    #[arg(long, global = true, value_name = "PATH")]
    pub zeros: Option<PathBuf>,
    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact bound coefficients C_1..C_K.
    Coeffs(CoeffsArgs),
    /// One evaluation of the bound at height t.
    Bound(BoundArgs),
    /// Bound margins over a range of heights, as CSV.
    Scan(ScanArgs),
    /// Both sides of the explicit formula with the extremal kernels.
    VerifyEf(VerifyEfArgs),
    /// Checks of the extremal majorant and minorant.
    Extremal(ExtremalArgs),
    /// F(u) by all three methods.
    SpecialF(SpecialFArgs),
    /// Runs the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, default_value_t = 7)]
    pub order: usize,
    /// Add numeric values.
    #[arg(long)]
    pub numeric: bool,
    /// Allow orders above 7, which have no reference values.
    #[arg(long)]
    pub extrapolate: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_parser = parse_height)]
    pub t: f64,
    /// Defaults to log^2 t.
    #[arg(long, value_parser = parse_x)]
    pub x: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum XPolicy {
    /// x = log^2 t
    Logsq,
    /// log x = 2 log log t - 2c
    Shifted,
    /// x fixed by --x
    Fixed,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_parser = parse_height)]
    pub t_min: f64,
    #[arg(long, value_parser = parse_height)]
    pub t_max: f64,
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = XPolicy::Logsq)]
    pub x_policy: XPolicy,
    /// Shift for `--x-policy shifted` (default 2 log 2).
    #[arg(long)]
    pub c: Option<f64>,
    /// Value for `--x-policy fixed`.
    #[arg(long, value_parser = parse_x)]
    pub x: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
    Both,
}

impl SignArg {
    fn signs(self) -> &'static [Sign] {
        match self {
            SignArg::Plus => &[Sign::Majorant],
            SignArg::Minus => &[Sign::Minorant],
            SignArg::Both => &Sign::BOTH,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyEfArgs {
    #[arg(long, value_parser = parse_height)]
    pub t: f64,
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub delta: f64,
    #[arg(long, value_enum, default_value_t = SignArg::Both)]
    pub sign: SignArg,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub delta: f64,
    /// Grid points on [-50, 50] for the pointwise check.
    #[arg(long, default_value_t = 10_000)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct SpecialFArgs {
    /// Arguments in [0, 0.99]; repeatable.
    #[arg(long, required = true, num_args = 1..)]
    pub u: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Run only these criteria (1..=11).
    #[arg(long, num_args = 1..)]
    pub only: Vec<usize>,
}

fn parse_height(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(t >= 10.0) || !t.is_finite() {
        return Err(format!("t must be a finite number >= 10, got {s}"));
    }
    Ok(t)
}

fn parse_x(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(x >= 2.0) || x > 1e8 {
        return Err(format!("x must lie in [2, 1e8], got {s}"));
    }
    Ok(x)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Compute(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

fn header(argv: &str) -> String {
    let zetas = zeta_oracle::odd_zeta_values(3);
    format!(
        "# critline {} | {}\n# L = log 2 = {:.17}, Z3 = {:.17}, Z5 = {:.17}\n",
        env!("CARGO_PKG_VERSION"),
        argv,
        std::f64::consts::LN_2,
        zetas[1],
        zetas[2]
    )
}

fn load_table(explicit: Option<&Path>) -> Result<Option<ZeroTable>, CliError> {
    match resolve_zeros_path(explicit) {
        Some(path) => load_zeros(&path).map(Some).map_err(compute),
        None => Ok(None),
    }
}

/// Runs a parsed invocation, writing the report to `out`. Returns whether
/// every check the subcommand performs passed.
pub fn execute(cli: &Cli, argv: &str, out: &mut dyn Write) -> Result<bool, CliError> {
    let mut text = header(argv);
    let ok = match &cli.command {
        Command::Coeffs(a) => coeffs(a, &mut text)?,
        Command::Bound(a) => bound(a, cli.zeros.as_deref(), &mut text)?,
        Command::Scan(a) => scan(a, cli.zeros.as_deref(), &mut text)?,
        Command::VerifyEf(a) => verify_ef(a, cli.zeros.as_deref(), &mut text)?,
        Command::Extremal(a) => extremal(a, &mut text)?,
        Command::SpecialF(a) => special(a, &mut text)?,
        Command::Selftest(a) => selftest(a, cli.zeros.as_deref(), &mut text)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(ok)
}

fn coeffs(a: &CoeffsArgs, text: &mut String) -> Result<bool, CliError> {
    let r = run_pipeline_with(
        a.order,
        PipelineOptions {
            allow_extrapolated: a.extrapolate,
            ..Default::default()
        },
    )
    .map_err(compute)?;
    text.push_str(&r.to_text());
    if a.numeric {
        for (k, v) in r.numeric().map_err(compute)?.iter().enumerate() {
            let _ = writeln!(text, "C_{} ~ {:.17} +/- {:.1e}", k + 1, v.value, v.error);
        }
    }
    Ok(true)
}

fn bound(a: &BoundArgs, zeros: Option<&Path>, text: &mut String) -> Result<bool, CliError> {
    let table = load_table(zeros)?;
    let x = a.x.unwrap_or_else(|| bound_engine::default_x(a.t));
    let r = bound_engine::theorem1_rhs(a.t, x, table.as_ref()).map_err(compute)?;
    let rows = [
        ("t", r.t),
        ("x", r.x),
        ("dirichlet_term", r.dirichlet_term),
        ("archimedean_term", r.archimedean_term),
        ("rhs_main", r.rhs_main()),
        ("log_abs_zeta", r.oracle_log_abs_zeta),
        ("margin", r.margin),
        ("error_scale", r.error_scale),
    ];
    for (name, v) in rows {
        let _ = writeln!(text, "{name:<18}{v:>26.17e}");
    }
    if r.low_confidence() {
        text.push_str("low_confidence    error_scale exceeds log t\n");
    }
    Ok(true)
}

fn scan(a: &ScanArgs, zeros: Option<&Path>, text: &mut String) -> Result<bool, CliError> {
    if a.t_max < a.t_min || a.points == 0 {
        return Err(CliError::Compute("need t-min <= t-max and points >= 1".into()));
    }
    let table = load_table(zeros)?;
    let ts = bound_engine::log_spaced(a.t_min, a.t_max, a.points);
    let c = a.c.unwrap_or(2.0 * std::f64::consts::LN_2);
    let fixed = a.x;
    if a.x_policy == XPolicy::Fixed && fixed.is_none() {
        return Err(CliError::Compute("--x-policy fixed needs --x".into()));
    }
    let x_of = move |t: f64| match a.x_policy {
        XPolicy::Logsq => bound_engine::default_x(t),
        XPolicy::Shifted => (bound_engine::default_x(t) * (-2.0 * c).exp()).max(2.0),
        XPolicy::Fixed => fixed.unwrap_or(2.0),
    };
    let points = bound_engine::scan(&ts, x_of, table.as_ref()).map_err(compute)?;
    for p in &points {
        if let ScanPoint::Skipped { t } = p {
            let _ = writeln!(text, "# skipped t = {t:.17e}: within 1e-2 of a zero");
        }
    }
    text.push_str(&acceptance::scan_csv(&points));
    Ok(true)
}

fn verify_ef(a: &VerifyEfArgs, zeros: Option<&Path>, text: &mut String) -> Result<bool, CliError> {
    let table = load_table(zeros)?
        .ok_or_else(|| CliError::Compute("verify-ef needs a zero table (--zeros or $CRITLINE_ZEROS)".into()))?;
    let p = KernelParams::new(a.beta, a.delta).map_err(compute)?;
    let mut ok = true;
    for &s in a.sign.signs() {
        let c = explicit_formula::gw_check(s, &p, a.t, &table).map_err(compute)?;
        let b = &c.prime_side;
        let passed = c.discrepancy() <= c.zero_side.tail_bound + 1e-3;
        ok &= passed;
        let _ = writeln!(text, "sign {}", s.symbol());
        let rows = [
            ("zero_side", c.zero_side.sum),
            ("boundary_term", b.boundary_term),
            ("ft_zero_term", b.ft_zero_term),
            ("archimedean_term", b.archimedean_term),
            ("archimedean_error", b.archimedean_error),
            ("prime_term", b.prime_term),
            ("prime_term_sinh", b.prime_term_sinh),
            ("prime_side", b.rhs_total),
            ("residual", c.discrepancy()),
            ("tail_bound", c.zero_side.tail_bound),
        ];
        for (name, v) in rows {
            let _ = writeln!(text, "  {name:<18}{v:>26.17e}");
        }
        let _ = writeln!(text, "  {:<18}{:>26}", "status", if passed { "ok" } else { "FAIL" });
    }
    Ok(ok)
}

fn extremal(a: &ExtremalArgs, text: &mut String) -> Result<bool, CliError> {
    let p = KernelParams::new(a.beta, a.delta).map_err(compute)?;
    let n = a.grid.max(2);
    let mut sandwich = true;
    for i in 0..n {
        let x = -50.0 + 100.0 * i as f64 / (n - 1) as f64;
        let lo = ep::eval_m_real(Sign::Minorant, &p, x);
        let hi = ep::eval_m_real(Sign::Majorant, &p, x);
        let h = ep::poisson_h(&p, x);
        sandwich &= lo <= h && h <= hi;
    }
    let _ = writeln!(text, "sandwich on {n} points: {}", if sandwich { "ok" } else { "FAIL" });
    let mut ok = sandwich;
    for s in Sign::BOTH {
        let exact = ep::l1_dist(s, &p);
        let q = ep::l1_numeric(s, &p);
        let rel = (q.value - exact).abs() / exact;
        ok &= rel <= 1e-6;
        let _ = writeln!(text, "L1 {}: closed {exact:.17e} numeric {:.17e} rel {rel:.1e}", s.symbol(), q.value);
        for xi in [0.0, 0.5 * a.delta, a.delta, 1.5 * a.delta] {
            let closed = ep::ft_m(s, &p, xi);
            let q = ep::ft_numeric(s, &p, xi);
            let err = (q.value - closed).abs();
            ok &= err <= 1e-6;
            let _ = writeln!(text, "FT {} xi = {xi}: closed {closed:.17e} numeric {:.17e} err {err:.1e}", s.symbol(), q.value);
        }
    }
    Ok(ok)
}

fn special(a: &SpecialFArgs, text: &mut String) -> Result<bool, CliError> {
    let _ = writeln!(text, "{:<8}{:>26}{:>26}{:>26}", "u", "quadrature", "closed_form", "series");
    let mut ok = true;
    for &u in &a.u {
        let vals = FMethod::ALL
            .iter()
            .map(|&m| special_f::f_eval(u, m))
            .collect::<Result<Vec<_>, _>>()
            .map_err(compute)?;
        let spread = vals.iter().fold(0.0f64, |acc, v| acc.max((v - vals[1]).abs()));
        ok &= spread <= 1e-9;
        let _ = writeln!(text, "{u:<8}{:>26.17e}{:>26.17e}{:>26.17e}", vals[0], vals[1], vals[2]);
    }
    Ok(ok)
}

fn selftest(a: &SelftestArgs, zeros: Option<&Path>, text: &mut String) -> Result<bool, CliError> {
    let table = load_table(zeros)?;
    let ids: Vec<usize> = if a.only.is_empty() {
        (1..=acceptance::CRITERIA.len()).collect()
    } else {
        a.only.clone()
    };
    let mut ok = true;
    for id in ids {
        let o = acceptance::run(id, table.as_ref());
        ok &= o.passed;
        text.push_str(&o.line());
        text.push('\n');
    }
    Ok(ok)
}

/// Parses `args` (including the program name), runs, and returns the exit
/// code: 0 success, 1 computation error or failed check, 2 usage error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let argv = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let result = match &cli.out {
        Some(path) => File::create(path)
            .map_err(CliError::from)
            .and_then(|mut f| execute(&cli, &argv, &mut f)),
        None => execute(&cli, &argv, &mut io::stdout().lock()),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("critline: {e}");
            1
        }
    }
}
