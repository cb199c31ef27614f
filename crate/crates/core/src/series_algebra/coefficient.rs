//! The coefficient ring ℚ[L^{±1}, Z₃, Z₅, Z₇, …], where `L` stands for
//! log 2 and `Z_n` for ζ(n) with n odd.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SeriesError;

/// A symbol of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// log 2
    Log2,
    /// ζ(n) for odd n ≥ 3
    Zeta(u32),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Log2 => write!(f, "L"),
            Symbol::Zeta(n) => write!(f, "Z{n}"),
        }
    }
}

/// Exponent vector of a monomial `L^log2 · Z₃^e₀ · Z₅^e₁ · …`.
///
/// `zeta[i]` is the exponent of `Z_{2i+3}`; trailing zeros are never stored,
/// so equal monomials compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    log2: i32,
    zeta: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn log2_power(k: i32) -> Self {
        Self {
            log2: k,
            zeta: Vec::new(),
        }
    }

    /// `Z_n`; `n` must be odd and at least 3.
    pub fn zeta(n: u32) -> Self {
        assert!(n >= 3 && n % 2 == 1, "Z_{n} is not a symbol of the ring");
        let mut zeta = vec![0; ((n - 3) / 2) as usize + 1];
        *zeta.last_mut().unwrap() = 1;
        Self { log2: 0, zeta }
    }

    pub fn log2_exponent(&self) -> i32 {
        self.log2
    }

    /// Exponent of `Z_n` (0 for even or out-of-range `n`).
    pub fn zeta_exponent(&self, n: u32) -> u32 {
        if n < 3 || n % 2 == 0 {
            return 0;
        }
        self.zeta.get(((n - 3) / 2) as usize).copied().unwrap_or(0)
    }

    /// `(n, exponent)` for every `Z_n` present.
    pub fn zeta_factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.zeta
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (2 * i as u32 + 3, e))
    }

    pub fn zeta_degree(&self) -> u32 {
        self.zeta.iter().sum()
    }

    pub fn has_zeta(&self) -> bool {
        !self.zeta.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.log2 == 0 && self.zeta.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.zeta.len() >= other.zeta.len() {
            (&self.zeta, &other.zeta)
        } else {
            (&other.zeta, &self.zeta)
        };
        let mut zeta = long.clone();
        for (z, s) in zeta.iter_mut().zip(short.iter()) {
            *z += s;
        }
        Monomial {
            log2: self.log2 + other.log2,
            zeta,
        }
    }
}

// Canonical order: by total ζ-degree, then the ζ exponents, then descending
// powers of L. This is also the printing order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.zeta_degree()
            .cmp(&other.zeta_degree())
            .then_with(|| self.zeta.len().cmp(&other.zeta.len()))
            .then_with(|| other.zeta.iter().rev().cmp(self.zeta.iter().rev()))
            .then_with(|| other.log2.cmp(&self.log2))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of ℚ[L^{±1}, Z₃, Z₅, …]: a finite map from monomials to
/// nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactCoefficient {
    terms: BTreeMap<Monomial, BigRational>,
}

pub(crate) static ZERO: ExactCoefficient = ExactCoefficient {
    terms: BTreeMap::new(),
};

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

impl ExactCoefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(rational(numer, denom))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::monomial(q, Monomial::one())
    }

    pub fn monomial(q: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        Self { terms }
    }

    /// `L = log 2`.
    pub fn log2() -> Self {
        Self::log2_pow(1)
    }

    /// `L^k` for any integer `k`.
    pub fn log2_pow(k: i32) -> Self {
        Self::monomial(BigRational::one(), Monomial::log2_power(k))
    }

    /// `Z_n = ζ(n)` for odd `n ≥ 3`.
    pub fn zeta(n: u32) -> Self {
        Self::monomial(BigRational::one(), Monomial::zeta(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The rational value if this is a constant (no symbols).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, q) = self.terms.iter().next().unwrap();
                m.is_one().then(|| q.clone())
            }
            _ => None,
        }
    }

    /// Inverse of an invertible monomial `q·L^k`; `None` for anything else.
    pub fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, q) = self.terms.iter().next().unwrap();
        if m.has_zeta() {
            return None;
        }
        Some(Self::monomial(q.recip(), Monomial::log2_power(-m.log2)))
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * q))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Every `Z_n` that occurs in a term.
    pub fn zeta_symbols(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.zeta_factors().map(|(n, _)| n).collect::<Vec<_>>())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn add_term(&mut self, m: &Monomial, q: &BigRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(c) => {
                *c += q;
                if c.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), q.clone());
            }
        }
    }

    /// Numeric value under `env`.
    pub fn eval(&self, env: &ConstantEnv) -> Result<NumericValue, SeriesError> {
        let log2 = env.value(Symbol::Log2);
        let mut value = crate::numerics::CompensatedSum::new();
        let mut error = 0.0;
        for (m, q) in &self.terms {
            let qf = q.to_f64().unwrap_or(f64::NAN);
            let mut mono = 1.0;
            let mut rel = 0.0;
            if m.log2 != 0 {
                let (l, l_err) = log2.ok_or(SeriesError::MissingConstant(Symbol::Log2))?;
                mono *= l.powi(m.log2);
                rel += m.log2.unsigned_abs() as f64 * l_err / l;
            }
            for (n, e) in m.zeta_factors() {
                let (z, z_err) = env
                    .value(Symbol::Zeta(n))
                    .ok_or(SeriesError::MissingConstant(Symbol::Zeta(n)))?;
                mono *= z.powi(e as i32);
                rel += e as f64 * z_err / z;
            }
            let term = qf * mono;
            value.add(term);
            // constant error plus a few ulps per multiplication
            let ops = 2 + m.log2.unsigned_abs() + m.zeta_degree();
            error += term.abs() * (rel + ops as f64 * f64::EPSILON);
        }
        let v = value.value();
        Ok(NumericValue {
            value: v,
            error: error + f64::EPSILON * v.abs(),
        })
    }
}

/// Numeric bindings for the ring symbols, each with an absolute error.
#[derive(Debug, Clone, Default)]
pub struct ConstantEnv {
    values: BTreeMap<Symbol, (f64, f64)>,
}

impl ConstantEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, symbol: Symbol, value: f64, abs_error: f64) -> Self {
        self.values.insert(symbol, (value, abs_error));
        self
    }

    pub fn value(&self, symbol: Symbol) -> Option<(f64, f64)> {
        self.values.get(&symbol).copied()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&Symbol, &(f64, f64))> {
        self.values.iter()
    }
}

/// A numeric evaluation with a propagated bound: Σ |q|·|monomial| times the
/// relative error of the bound constants, plus rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericValue {
    pub value: f64,
    pub error: f64,
}

impl From<BigRational> for ExactCoefficient {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for ExactCoefficient {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Neg for &ExactCoefficient {
    type Output = ExactCoefficient;
    fn neg(self) -> ExactCoefficient {
        ExactCoefficient {
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect(),
        }
    }
}

impl Neg for ExactCoefficient {
    type Output = ExactCoefficient;
    fn neg(self) -> ExactCoefficient {
        -&self
    }
}

impl AddAssign<&ExactCoefficient> for ExactCoefficient {
    fn add_assign(&mut self, rhs: &ExactCoefficient) {
        for (m, q) in &rhs.terms {
            self.add_term(m, q);
        }
    }
}

impl Add for &ExactCoefficient {
    type Output = ExactCoefficient;
    fn add(self, rhs: &ExactCoefficient) -> ExactCoefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ExactCoefficient {
    type Output = ExactCoefficient;
    fn sub(self, rhs: &ExactCoefficient) -> ExactCoefficient {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.add_term(m, &-q);
        }
        out
    }
}

impl Mul for &ExactCoefficient {
    type Output = ExactCoefficient;
    fn mul(self, rhs: &ExactCoefficient) -> ExactCoefficient {
        let mut out = ExactCoefficient::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                out.add_term(&ma.mul(mb), &(qa * qb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ExactCoefficient {
            type Output = ExactCoefficient;
            fn $method(self, rhs: ExactCoefficient) -> ExactCoefficient {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExactCoefficient> for ExactCoefficient {
            type Output = ExactCoefficient;
            fn $method(self, rhs: &ExactCoefficient) -> ExactCoefficient {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for ExactCoefficient {
    /// Pari-like text, e.g. `4*L^4 + 6*L^3 - L + 9/4*Z3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            let negative = q.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            write_term(f, &q.abs(), m)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, q: &BigRational, m: &Monomial) -> fmt::Result {
    let mut factors: Vec<String> = Vec::new();
    if m.log2 > 0 {
        factors.push(power("L", m.log2 as u32));
    }
    for (n, e) in m.zeta_factors() {
        factors.push(power(&format!("Z{n}"), e));
    }
    let mut out = String::new();
    if factors.is_empty() {
        out.push_str(&q.to_string());
    } else {
        if !q.is_one() {
            out.push_str(&q.to_string());
            out.push('*');
        }
        out.push_str(&factors.join("*"));
    }
    if m.log2 < 0 {
        out.push('/');
        out.push_str(&power("L", m.log2.unsigned_abs()));
    }
    write!(f, "{out}")
}

fn power(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> ExactCoefficient {
        ExactCoefficient::log2()
    }

    #[test]
    fn l_times_inverse_is_one() {
        let prod = &l() * &ExactCoefficient::log2_pow(-1);
        assert_eq!(prod, ExactCoefficient::one());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = &l() + &ExactCoefficient::zeta(3);
        let b = &a - &ExactCoefficient::zeta(3);
        assert_eq!(b, l());
        assert!((&b - &l()).is_zero());
    }

    #[test]
    fn half_plus_l_has_two_terms() {
        let c = &ExactCoefficient::from_ratio(1, 2) + &l();
        assert_eq!(c.num_terms(), 2);
    }

    #[test]
    fn only_symbol_free_monomials_invert() {
        assert!(ExactCoefficient::from_ratio(3, 4).is_invertible());
        assert!(ExactCoefficient::log2_pow(-2).is_invertible());
        assert!(!ExactCoefficient::zeta(3).is_invertible());
        assert!(!(&l() + &ExactCoefficient::one()).is_invertible());
        assert!(!ExactCoefficient::zero().is_invertible());
    }

    #[test]
    fn display_is_pari_like() {
        let c = &(&ExactCoefficient::from_ratio(9, 4) * &ExactCoefficient::zeta(3))
            * &ExactCoefficient::log2_pow(-1);
        assert_eq!(c.to_string(), "9/4*Z3/L");
        let c4 = &(&(&ExactCoefficient::log2_pow(4).scale(&rational(4, 1))
            + &ExactCoefficient::log2_pow(3).scale(&rational(6, 1)))
            - &l())
            + &ExactCoefficient::zeta(3).scale(&rational(9, 4));
        assert_eq!(c4.to_string(), "4*L^4 + 6*L^3 - L + 9/4*Z3");
        assert_eq!(ExactCoefficient::zero().to_string(), "0");
    }

    #[test]
    fn eval_reports_missing_symbol() {
        let env = ConstantEnv::new().bind(Symbol::Log2, std::f64::consts::LN_2, 1e-16);
        assert_eq!(
            ExactCoefficient::zeta(5).eval(&env),
            Err(SeriesError::MissingConstant(Symbol::Zeta(5)))
        );
        let half_l = l().scale(&rational(1, 2));
        let v = half_l.eval(&env).unwrap();
        assert!((v.value - 0.346_573_590_279_972_65).abs() < 1e-16);
    }
}
