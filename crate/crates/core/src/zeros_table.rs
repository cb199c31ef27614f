//! Tables of ordinates γ of nontrivial zeros ρ = ½ + iγ.
//!
//! Format: UTF-8 text, one positive decimal per line, strictly ascending.
//! Blank lines and lines starting with `#` are ignored.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::zeta_oracle::{self, ZetaError};

/// Environment variable consulted when no `--zeros` path is given.
pub const ZEROS_ENV: &str = "CRITLINE_ZEROS";

const FIRST_ZERO: f64 = 14.134_725_141_734_693;
const FIRST_ZERO_TOLERANCE: f64 = 1e-6;
const MIN_SIGNIFICANT_DIGITS: usize = 9;

#[derive(Debug, thiserror::Error)]
pub enum ZeroTableError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: ordinate {value} is not above the previous one")]
    NotAscending { line: usize, value: f64 },
    #[error("first ordinate {0} is not the first zero 14.134725…")]
    SuspiciousFirstZero(f64),
    #[error("height {requested} exceeds the table height {available}")]
    HeightExceeded { requested: f64, available: f64 },
}

/// Ascending positive ordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    gammas: Vec<f64>,
    source: Option<PathBuf>,
    max_height: f64,
    low_precision_lines: Vec<usize>,
}

/// Riemann–von Mangoldt comparison at a height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroCount {
    pub height: f64,
    pub counted: usize,
    pub predicted: f64,
}

impl ZeroCount {
    pub fn discrepancy(&self) -> f64 {
        (self.counted as f64 - self.predicted).abs()
    }
}

/// Smooth main term `(T/2π) log(T/2π) − T/2π + 7/8` of N(T).
pub fn riemann_von_mangoldt(height: f64) -> f64 {
    let x = height / (2.0 * PI);
    x * x.ln() - x + 7.0 / 8.0
}

/// Zero density `(1/2π) log(u/2π)` used for tail estimates.
pub fn zero_density(u: f64) -> f64 {
    ((u / (2.0 * PI)).ln() / (2.0 * PI)).max(0.0)
}

impl ZeroTable {
    /// Parses table text; `source` is only recorded.
    pub fn parse(text: &str, source: Option<PathBuf>) -> Result<Self, ZeroTableError> {
        let mut gammas: Vec<f64> = Vec::new();
        let mut low_precision_lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let value: f64 = trimmed.parse().map_err(|_| ZeroTableError::Parse {
                line,
                message: format!("not a decimal number: {trimmed:?}"),
            })?;
            if !(value > 0.0) || !value.is_finite() {
                return Err(ZeroTableError::Parse {
                    line,
                    message: format!("ordinate must be positive and finite, got {value}"),
                });
            }
            if let Some(&prev) = gammas.last() {
                if value <= prev {
                    return Err(ZeroTableError::NotAscending { line, value });
                }
            }
            if significant_digits(trimmed) < MIN_SIGNIFICANT_DIGITS {
                low_precision_lines.push(line);
            }
            gammas.push(value);
        }
        let Some(&first) = gammas.first() else {
            return Err(ZeroTableError::Parse {
                line: text.lines().count().max(1),
                message: "no ordinates found".into(),
            });
        };
        if (first - FIRST_ZERO).abs() > FIRST_ZERO_TOLERANCE {
            return Err(ZeroTableError::SuspiciousFirstZero(first));
        }
        let max_height = *gammas.last().unwrap();
        Ok(Self {
            gammas,
            source,
            max_height,
            low_precision_lines,
        })
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn source(&self) -> Option<&Path> {
        self.source.as_deref()
    }

    /// Height up to which the table is complete: the largest ordinate of a
    /// parsed table, or the cut height of a [`truncated`](Self::truncated) one.
    pub fn max_height(&self) -> f64 {
        self.max_height
    }

    /// Line numbers of entries with fewer than 9 significant digits.
    pub fn low_precision_lines(&self) -> &[usize] {
        &self.low_precision_lines
    }

    /// Ordinates up to `height`.
    pub fn up_to(&self, height: f64) -> &[f64] {
        &self.gammas[..self.gammas.partition_point(|&g| g <= height)]
    }

    /// The table cut at `height` (entries above it dropped), or `None` if
    /// nothing remains.
    pub fn truncated(&self, height: f64) -> Option<ZeroTable> {
        let gammas = self.up_to(height).to_vec();
        gammas.last()?;
        let max_height = height.min(self.max_height);
        Some(ZeroTable {
            low_precision_lines: self.low_precision_lines.clone(),
            source: self.source.clone(),
            gammas,
            max_height,
        })
    }

    /// Distance from `t` to the closest ordinate ±γ.
    pub fn distance_to_nearest(&self, t: f64) -> f64 {
        let t = t.abs();
        let i = self.gammas.partition_point(|&g| g < t);
        let mut best = f64::INFINITY;
        if i < self.gammas.len() {
            best = best.min(self.gammas[i] - t);
        }
        if i > 0 {
            best = best.min(t - self.gammas[i - 1]);
        }
        best
    }

    /// Counted zeros up to `height` versus the smooth Riemann–von Mangoldt term.
    pub fn zero_count_check(&self, height: f64) -> Result<ZeroCount, ZeroTableError> {
        if height > self.max_height {
            return Err(ZeroTableError::HeightExceeded {
                requested: height,
                available: self.max_height,
            });
        }
        Ok(ZeroCount {
            height,
            counted: self.up_to(height).len(),
            predicted: riemann_von_mangoldt(height),
        })
    }

    /// Widest gap between consecutive ordinates above `from`, as `(start, gap)`.
    pub fn largest_gap_above(&self, from: f64) -> Option<(f64, f64)> {
        self.gammas
            .windows(2)
            .filter(|w| w[0] > from)
            .map(|w| (w[0], w[1] - w[0]))
            .max_by(|a, b| a.1.total_cmp(&b.1))
    }

    /// Largest |ζ(½ + iγ)| over `samples` random entries (all entries when
    /// `samples` is `None`).
    pub fn spot_check<R: Rng>(&self, samples: Option<usize>, rng: &mut R) -> Result<f64, ZetaError> {
        let chosen: Vec<f64> = match samples {
            Some(n) => self.gammas.choose_multiple(rng, n).copied().collect(),
            None => self.gammas.clone(),
        };
        let mut worst: f64 = 0.0;
        for g in chosen {
            let z = zeta_oracle::zeta(Complex64::new(0.5, g))?;
            worst = worst.max(z.norm());
        }
        Ok(worst)
    }
}

fn significant_digits(text: &str) -> usize {
    let mantissa = text.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    digits.trim_start_matches('0').len()
}

/// Loads a table from disk.
pub fn load_zeros(path: &Path) -> Result<ZeroTable, ZeroTableError> {
    let text = fs::read_to_string(path).map_err(|source| ZeroTableError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ZeroTable::parse(&text, Some(path.to_path_buf()))
}

/// Table shipped with the crate (ordinates up to height 10100).
pub const BUNDLED_TABLE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_10100.txt");

/// The explicit path if given, else `$CRITLINE_ZEROS`, else the bundled
/// table when it is present on disk.
pub fn resolve_zeros_path(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(ZEROS_ENV).map(PathBuf::from))
        .or_else(|| {
            let bundled = PathBuf::from(BUNDLED_TABLE);
            bundled.is_file().then_some(bundled)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE: &str = "14.134725142\n21.022039639\n25.010857580\n";

    #[test]
    fn parses_three_zeros() {
        let t = ZeroTable::parse(THREE, None).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.max_height(), 25.010857580);
        assert!(t.low_precision_lines().is_empty());
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = ZeroTable::parse("# header\n\n14.134725142\n  21.022039639  \n", None).unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn parse_error_reports_line() {
        let e = ZeroTable::parse("14.134725142\nabc\n", None).unwrap_err();
        assert!(matches!(e, ZeroTableError::Parse { line: 2, .. }), "{e}");
    }

    #[test]
    fn empty_input_is_a_parse_error() {
        assert!(matches!(ZeroTable::parse("", None), Err(ZeroTableError::Parse { .. })));
        assert!(matches!(ZeroTable::parse("# only\n", None), Err(ZeroTableError::Parse { .. })));
    }

    #[test]
    fn ordering_and_first_zero_are_enforced() {
        assert!(matches!(
            ZeroTable::parse("14.134725142\n25.01\n21.02\n", None),
            Err(ZeroTableError::NotAscending { line: 3, .. })
        ));
        assert!(matches!(
            ZeroTable::parse("21.022039639\n", None),
            Err(ZeroTableError::SuspiciousFirstZero(_))
        ));
        assert!(matches!(
            ZeroTable::parse("14.134725142\n-3\n", None),
            Err(ZeroTableError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn low_precision_is_flagged_not_rejected() {
        let t = ZeroTable::parse("14.134725142\n21.02\n", None).unwrap();
        assert_eq!(t.low_precision_lines(), &[2]);
    }

    #[test]
    fn count_below_first_zero_and_height_limit() {
        let t = ZeroTable::parse(THREE, None).unwrap();
        assert_eq!(t.zero_count_check(14.0).unwrap().counted, 0);
        assert_eq!(t.zero_count_check(22.0).unwrap().counted, 2);
        assert!(matches!(
            t.zero_count_check(100.0),
            Err(ZeroTableError::HeightExceeded { .. })
        ));
    }

    #[test]
    fn nearest_distance() {
        let t = ZeroTable::parse(THREE, None).unwrap();
        assert!((t.distance_to_nearest(14.1347) - 0.000025142).abs() < 1e-9);
        assert!((t.distance_to_nearest(-21.0) - 0.022039639).abs() < 1e-9);
        assert!((t.distance_to_nearest(100.0) - (100.0 - 25.01085758)).abs() < 1e-9);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            load_zeros(Path::new("/nonexistent/zeros.txt")),
            Err(ZeroTableError::Io { .. })
        ));
    }
}
