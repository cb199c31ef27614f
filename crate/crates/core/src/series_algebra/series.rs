//! Truncated Laurent series `Σ_{k=v}^{N} c_k z^k + O(z^{N+1})` over
//! [`ExactCoefficient`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::coefficient::{ExactCoefficient, ZERO};
use super::SeriesError;

/// A truncated Laurent series in one variable.
///
/// Storage is normalized: leading zero coefficients are stripped, so the
/// stored valuation is the true valuation. The zero series of order `N` is
/// stored as a single zero coefficient at exponent `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    valuation: i32,
    coeffs: Vec<ExactCoefficient>,
}

impl TruncatedSeries {
    /// Series with coefficients for exponents `valuation, valuation + 1, …`;
    /// the order is `valuation + coeffs.len() - 1`.
    pub fn new(valuation: i32, coeffs: Vec<ExactCoefficient>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        let mut s = Self { valuation, coeffs };
        s.normalize();
        s
    }

    /// `0 + O(z^{order+1})`.
    pub fn zero(order: i32) -> Self {
        Self {
            valuation: order,
            coeffs: vec![ExactCoefficient::zero()],
        }
    }

    /// The constant `c + O(z^{order+1})`, `order ≥ 0`.
    pub fn constant(c: ExactCoefficient, order: i32) -> Self {
        Self::monomial(c, 0, order)
    }

    pub fn one(order: i32) -> Self {
        Self::constant(ExactCoefficient::one(), order)
    }

    /// `z + O(z^{order+1})`.
    pub fn variable(order: i32) -> Self {
        Self::monomial(ExactCoefficient::one(), 1, order)
    }

    /// `c·z^exponent + O(z^{order+1})`.
    pub fn monomial(c: ExactCoefficient, exponent: i32, order: i32) -> Self {
        assert!(order >= exponent, "order {order} below exponent {exponent}");
        let mut coeffs = vec![ExactCoefficient::zero(); (order - exponent + 1) as usize];
        coeffs[0] = c;
        Self::new(exponent, coeffs)
    }

    /// Builds from `(exponent, coefficient)` pairs; exponents beyond `order`
    /// are dropped.
    pub fn from_terms<I>(terms: I, order: i32) -> Self
    where
        I: IntoIterator<Item = (i32, ExactCoefficient)>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|(k, _)| *k <= order).collect();
        let low = terms.iter().map(|(k, _)| *k).min().unwrap_or(order).min(order);
        let mut coeffs = vec![ExactCoefficient::zero(); (order - low + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - low) as usize] += &c;
        }
        Self::new(low, coeffs)
    }

    fn normalize(&mut self) {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len() - 1);
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i32;
        }
    }

    pub fn valuation(&self) -> i32 {
        self.valuation
    }

    /// Highest exponent whose coefficient is known.
    pub fn order(&self) -> i32 {
        self.valuation + self.coeffs.len() as i32 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ExactCoefficient::is_zero)
    }

    /// Coefficient of `z^k`; `None` when `k` is beyond the truncation order.
    pub fn coeff(&self, k: i32) -> Option<&ExactCoefficient> {
        if k > self.order() {
            None
        } else if k < self.valuation {
            Some(&ZERO)
        } else {
            Some(&self.coeffs[(k - self.valuation) as usize])
        }
    }

    /// Coefficient at the valuation.
    pub fn leading(&self) -> &ExactCoefficient {
        &self.coeffs[0]
    }

    /// `(exponent, coefficient)` for every nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &ExactCoefficient)> {
        let v = self.valuation;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (v + i as i32, c))
    }

    /// Drops every coefficient above `order` (no-op if already lower).
    pub fn truncate(&self, order: i32) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        if order < self.valuation {
            return Self::zero(order);
        }
        Self::new(
            self.valuation,
            self.coeffs[..(order - self.valuation + 1) as usize].to_vec(),
        )
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &ExactCoefficient) -> Self {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        Self::new(self.valuation, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one(self.order() - self.valuation);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative d/dz.
    pub fn derivative(&self) -> Self {
        let order = self.order() - 1;
        let terms = self
            .terms()
            .filter(|(k, _)| *k != 0)
            .map(|(k, c)| (k - 1, c.scale(&BigRational::from_integer(BigInt::from(k)))))
            .collect::<Vec<_>>();
        Self::from_terms(terms, order)
    }

    /// Multiplicative inverse. The leading coefficient must be an invertible
    /// monomial `q·L^k`; the relative precision is preserved.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let inv_lead = self
            .leading()
            .inverse()
            .ok_or(SeriesError::NonInvertibleLeadingCoefficient)?;
        let n = self.coeffs.len();
        let mut out: Vec<ExactCoefficient> = Vec::with_capacity(n);
        out.push(inv_lead.clone());
        for k in 1..n {
            let mut acc = ExactCoefficient::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() && !out[k - j].is_zero() {
                    acc += &(a * &out[k - j]);
                }
            }
            out.push(-(&acc * &inv_lead));
        }
        Ok(Self::new(-self.valuation, out))
    }

    /// Logarithm of a series `2^j (1 + u)` with `u = O(z)`:
    /// `j·L + Σ_{m≥1} (−1)^{m+1} u^m / m`.
    pub fn ln(&self) -> Result<Self, SeriesError> {
        if self.valuation != 0 {
            return Err(SeriesError::UnsupportedConstantTerm);
        }
        let c0 = self
            .leading()
            .as_rational()
            .ok_or(SeriesError::UnsupportedConstantTerm)?;
        let j = power_of_two_exponent(&c0).ok_or(SeriesError::UnsupportedConstantTerm)?;
        let order = self.order();
        let inv_c0 = ExactCoefficient::from_rational(c0.recip());
        let u = &self.scale(&inv_c0) - &Self::one(order);
        let mut out = Self::constant(ExactCoefficient::log2_pow(1).scale(&int(j)), order);
        if u.is_zero() {
            return Ok(out);
        }
        let mut power = u.clone();
        let mut m: i64 = 1;
        while power.valuation() <= order && !power.is_zero() {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let term = power.scale(&ExactCoefficient::from_ratio(sign, m));
            out = &out + &term;
            power = (&power * &u).truncate(order);
            m += 1;
        }
        Ok(out.truncate(order))
    }

    /// Exponential of a series without constant term: `Σ_{m≥0} u^m / m!`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.is_zero() && self.valuation < 1 {
            return Err(SeriesError::UnsupportedConstantTerm);
        }
        let order = self.order();
        let mut out = Self::one(order);
        let mut power = Self::one(order);
        let mut m: i64 = 1;
        while !self.is_zero() && m <= order as i64 {
            power = (&power * self)
                .truncate(order)
                .scale(&ExactCoefficient::from_ratio(1, m));
            out = &out + &power;
            m += 1;
        }
        Ok(out)
    }

    /// `self(inner(z))`. Requires `inner` to vanish at 0 and `self` to have
    /// no Laurent part.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if inner.is_zero() || inner.valuation < 1 {
            return Err(SeriesError::PositiveValuationRequired);
        }
        if self.valuation < 0 {
            return Err(SeriesError::LaurentOuterSeries);
        }
        // Error term O(inner^{N_o + 1}).
        let cap = (self.order() + 1) * inner.valuation - 1;
        let mut out = match self.coeff(0) {
            Some(c0) => Self::constant(c0.clone(), cap),
            None => Self::zero(cap),
        };
        let mut power = inner.truncate(cap);
        for k in 1..=self.order() {
            if power.valuation() > cap {
                break;
            }
            let c = self.coeff(k).expect("k within order");
            if !c.is_zero() {
                out = &out + &power.scale(c);
            }
            power = (&power * inner).truncate(cap);
        }
        Ok(out.truncate(cap))
    }

    fn check_revertible(&self) -> Result<ExactCoefficient, SeriesError> {
        if self.is_zero() || self.valuation < 1 {
            return Err(SeriesError::PositiveValuationRequired);
        }
        if self.valuation > 1 {
            return Err(SeriesError::NonInvertibleLinearCoefficient);
        }
        self.leading()
            .inverse()
            .ok_or(SeriesError::NonInvertibleLinearCoefficient)
    }

    /// Compositional inverse by Newton iteration, doubling the precision at
    /// each step: `b ← b − (a∘b − z) / (a′∘b)`.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        let inv_lin = self.check_revertible()?;
        let order = self.order();
        let mut b = Self::monomial(inv_lin, 1, 1);
        let mut prec = 1;
        while prec < order {
            let next = (2 * prec).min(order);
            let a = self.truncate(next);
            let b_ext = b.extend_to(next);
            let residual = &a.compose(&b_ext)? - &Self::variable(next);
            let slope = a.derivative().compose(&b_ext)?;
            let step = &residual * &slope.recip()?;
            b = (&b_ext - &step).truncate(next);
            prec = next;
        }
        Ok(b)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[z^n] b = (1/n) [w^{n−1}] (w / a(w))^n`.
    pub fn revert_lagrange(&self) -> Result<Self, SeriesError> {
        self.check_revertible()?;
        let order = self.order();
        let phi = self.shift(-1).recip()?;
        let mut power = Self::one(phi.order());
        let mut terms = Vec::new();
        for n in 1..=order {
            power = (&power * &phi).truncate(order - 1);
            let c = power.coeff(n - 1).expect("within order");
            terms.push((n, c.scale(&BigRational::new(BigInt::one(), BigInt::from(n)))));
        }
        Ok(Self::from_terms(terms, order))
    }

    /// Pads with zero coefficients up to `order` (the caller asserts the new
    /// coefficients are known to be zero or will be corrected).
    fn extend_to(&self, order: i32) -> Self {
        if order <= self.order() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize((order - self.valuation + 1) as usize, ExactCoefficient::zero());
        Self::new(self.valuation, coeffs)
    }

    /// True when both series agree on every exponent up to `order` and both
    /// are known that far.
    pub fn agrees_to(&self, other: &Self, order: i32) -> bool {
        if self.order() < order || other.order() < order {
            return false;
        }
        let low = self.valuation.min(other.valuation);
        (low..=order).all(|k| self.coeff(k) == other.coeff(k))
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn power_of_two_exponent(q: &BigRational) -> Option<i64> {
    if !q.is_positive() || !q.denom().is_one() {
        return None;
    }
    let n = q.numer();
    let bits = n.bits();
    if bits == 0 || n != &(BigInt::one() << (bits - 1)) {
        return None;
    }
    Some(bits as i64 - 1)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let low = self.valuation.min(rhs.valuation).min(order);
        let coeffs = (low..=order)
            .map(|k| {
                let a = self.coeff(k).unwrap();
                let b = rhs.coeff(k).unwrap();
                a + b
            })
            .collect();
        TruncatedSeries::new(low, coeffs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let valuation = self.valuation + rhs.valuation;
        let order = (self.order() + rhs.valuation).min(rhs.order() + self.valuation);
        let n = (order - valuation + 1).max(1) as usize;
        let mut coeffs = vec![ExactCoefficient::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        TruncatedSeries::new(valuation, coeffs)
    }
}

macro_rules! forward_series {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_series!(Add add, Sub sub, Mul mul);

impl fmt::Display for TruncatedSeries {
    /// Pari-like text, e.g. `1/2/z + 2*L - 4*z + (-8 + 18*Z3/L)*z^2 + O(z^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let text = c.to_string();
            let single = c.num_terms() == 1;
            let (negative, body) = match (single, text.strip_prefix('-')) {
                (true, Some(rest)) => (true, rest.to_string()),
                _ => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let wrapped = if single { body } else { format!("({body})") };
            match k {
                0 => write!(f, "{wrapped}")?,
                _ if k < 0 => {
                    let zpow = if k == -1 { "z".to_string() } else { format!("z^{}", -k) };
                    write!(f, "{wrapped}/{zpow}")?
                }
                _ => {
                    let zpow = if k == 1 { "z".to_string() } else { format!("z^{k}") };
                    if wrapped == "1" {
                        write!(f, "{zpow}")?
                    } else {
                        write!(f, "{wrapped}*{zpow}")?
                    }
                }
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(z^{})", self.order() + 1)
    }
}
