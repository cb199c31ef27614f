//! Exact arithmetic on truncated Laurent series whose coefficients live in
//! ℚ[L^{±1}, Z₃, Z₅, …] (`L = log 2`, `Z_n = ζ(n)`).
//!
//! All values are immutable; every operation returns a new value.

mod coefficient;
pub mod pari;
mod series;

pub use coefficient::{rational, ConstantEnv, ExactCoefficient, Monomial, NumericValue, Symbol};
pub use series::TruncatedSeries;

/// Default truncation order in `z`.
pub const DEFAULT_ORDER: i32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("leading coefficient is not an invertible monomial q*L^k")]
    NonInvertibleLeadingCoefficient,
    #[error("linear coefficient is not an invertible monomial q*L^k")]
    NonInvertibleLinearCoefficient,
    #[error("logarithm needs a constant term equal to a power of two")]
    UnsupportedConstantTerm,
    #[error("inner series must have positive valuation")]
    PositiveValuationRequired,
    #[error("outer series of a composition must not have a Laurent part")]
    LaurentOuterSeries,
    #[error("no numeric binding for symbol {0}")]
    MissingConstant(Symbol),
}
