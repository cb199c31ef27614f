//! Von Mangoldt function and Chebyshev-type sums over prime powers.

use crate::numerics::CompensatedSum;

/// Largest sieve limit accepted by [`lambda_sieve`].
pub const DEFAULT_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrimeError {
    #[error("sieve limit {limit} exceeds the cap {cap}")]
    LimitTooLarge { limit: u64, cap: u64 },
    #[error("sieve limit must be at least 2, got {0}")]
    LimitTooSmall(u64),
}

/// `Λ(n)` for `n ≤ limit`, stored exactly as the prime `p` with `n = p^m`
/// (0 when `n` is not a prime power).
#[derive(Debug, Clone)]
pub struct LambdaTable {
    base: Vec<u32>,
}

pub fn lambda_sieve(limit: u64) -> Result<LambdaTable, PrimeError> {
    lambda_sieve_with_cap(limit, DEFAULT_CAP)
}

pub fn lambda_sieve_with_cap(limit: u64, cap: u64) -> Result<LambdaTable, PrimeError> {
    if limit < 2 {
        return Err(PrimeError::LimitTooSmall(limit));
    }
    if limit > cap {
        return Err(PrimeError::LimitTooLarge { limit, cap });
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut base = vec![0u32; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        let mut q = p * p;
        while q <= n {
            composite[q] = true;
            q += p;
        }
        let mut power = p;
        loop {
            base[power] = p as u32;
            match power.checked_mul(p) {
                Some(next) if next <= n => power = next,
                _ => break,
            }
        }
    }
    Ok(LambdaTable { base })
}

impl LambdaTable {
    pub fn limit(&self) -> u64 {
        (self.base.len() - 1) as u64
    }

    /// `(p, m)` with `n = p^m`, or `None` when `Λ(n) = 0`.
    pub fn entry(&self, n: u64) -> Option<(u32, u32)> {
        let p = *self.base.get(n as usize)?;
        if p == 0 {
            return None;
        }
        let mut m = 0;
        let mut rest = n;
        while rest > 1 {
            rest /= u64::from(p);
            m += 1;
        }
        Some((p, m))
    }

    pub fn lambda(&self, n: u64) -> f64 {
        match self.base.get(n as usize) {
            Some(&p) if p != 0 => f64::from(p).ln(),
            _ => 0.0,
        }
    }

    /// `(n, Λ(n))` for every prime power `n ≤ x`.
    pub fn prime_powers(&self, x: u64) -> impl Iterator<Item = (u64, f64)> + '_ {
        let end = (x.min(self.limit()) + 1) as usize;
        self.base[..end]
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != 0)
            .map(|(n, &p)| (n as u64, f64::from(p).ln()))
    }

    /// `ψ(x) = Σ_{n≤x} Λ(n)`.
    pub fn psi(&self, x: u64) -> f64 {
        self.prime_powers(x).map(|(_, l)| l).collect::<CompensatedSum>().value()
    }

    /// `Σ_{n≤x} Λ(n)/√n`.
    pub fn weighted_psi(&self, x: u64) -> f64 {
        self.prime_powers(x)
            .map(|(n, l)| l / (n as f64).sqrt())
            .collect::<CompensatedSum>()
            .value()
    }
}

/// `Σ_{n≤x} Λ(n)/√n` with a fresh sieve.
pub fn weighted_psi(x: u64) -> Result<f64, PrimeError> {
    Ok(lambda_sieve(x)?.weighted_psi(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let t = lambda_sieve(100).unwrap();
        assert_eq!(t.lambda(1), 0.0);
        assert_eq!(t.lambda(9), 3f64.ln());
        assert_eq!(t.entry(9), Some((3, 2)));
        assert_eq!(t.entry(64), Some((2, 6)));
        assert_eq!(t.lambda(12), 0.0);
        assert_eq!(t.entry(97), Some((97, 1)));
        assert_eq!(t.entry(1000), None);
    }

    #[test]
    fn limits() {
        assert_eq!(lambda_sieve(1).unwrap_err(), PrimeError::LimitTooSmall(1));
        assert!(matches!(
            lambda_sieve_with_cap(1000, 100),
            Err(PrimeError::LimitTooLarge { .. })
        ));
    }

    #[test]
    fn single_term_at_two() {
        let v = weighted_psi(2).unwrap();
        assert!((v - 2f64.ln() / 2f64.sqrt()).abs() < 1e-16);
        assert!((v - 0.4901).abs() < 1e-4);
    }
}
