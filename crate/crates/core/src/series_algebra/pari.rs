//! Reader for the Pari-like expression syntax the printers emit, e.g.
//! `1/2/z + 2*L - 4*z + (-8 + 18*Z3/L)*z^2 + O(z^4)`.
//!
//! Expressions are evaluated into sparse Laurent polynomials in `z` over the
//! coefficient ring. Division is only allowed by a single invertible term
//! (`q·L^k·z^j`), which keeps every parsed value inside the ring.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::coefficient::ExactCoefficient;
use super::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token at offset {0}")]
    UnexpectedToken(usize),
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("division by a non-monomial")]
    NonMonomialDivisor,
    #[error("expression depends on z")]
    DependsOnZ,
    #[error("negative power of a non-monomial")]
    NegativePower,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Token::Int(digits.parse().unwrap()), start));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((Token::Ident(chars[start..i].iter().collect()), start));
                continue;
            }
            other => return Err(ParseError::UnexpectedChar(other, i)),
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

/// A parsed value: sparse Laurent polynomial in `z`, plus an optional
/// `O(z^k)` remainder.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PariValue {
    terms: BTreeMap<i32, ExactCoefficient>,
    big_o: Option<i32>,
}

impl PariValue {
    fn constant(c: ExactCoefficient) -> Self {
        Self::term(0, c)
    }

    fn term(k: i32, c: ExactCoefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms, big_o: None }
    }

    fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    fn normalize(mut self) -> Self {
        if let Some(o) = self.big_o {
            self.terms.retain(|&k, c| k < o && !c.is_zero());
        } else {
            self.terms.retain(|_, c| !c.is_zero());
        }
        self
    }

    fn add(mut self, other: PariValue) -> Self {
        for (k, c) in other.terms {
            let slot = self.terms.entry(k).or_default();
            *slot += &c;
        }
        self.big_o = match (self.big_o, other.big_o) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.normalize()
    }

    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
            big_o: self.big_o,
        }
    }

    fn mul(&self, other: &PariValue) -> Self {
        let mut terms: BTreeMap<i32, ExactCoefficient> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let slot = terms.entry(ka + kb).or_default();
                *slot += &(ca * cb);
            }
        }
        // O(z^a)·p = O(z^{a + val p}); a pure O-term times O-term is the sum.
        let shifted = |o: Option<i32>, p: &PariValue| -> Option<i32> {
            o.map(|o| o + p.valuation().unwrap_or_else(|| p.big_o.unwrap_or(0)))
        };
        let big_o = [shifted(self.big_o, other), shifted(other.big_o, self)]
            .into_iter()
            .flatten()
            .min();
        Self { terms, big_o }.normalize()
    }

    fn recip(&self) -> Result<Self, ParseError> {
        if self.big_o.is_some() || self.terms.len() != 1 {
            return Err(ParseError::NonMonomialDivisor);
        }
        let (&k, c) = self.terms.iter().next().unwrap();
        let inv = c.inverse().ok_or(ParseError::NonMonomialDivisor)?;
        Ok(Self::term(-k, inv))
    }

    fn pow(&self, e: i64) -> Result<Self, ParseError> {
        let base = if e < 0 {
            self.recip().map_err(|_| ParseError::NegativePower)?
        } else {
            self.clone()
        };
        let mut acc = Self::constant(ExactCoefficient::one());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// The value as a ring element; fails if it depends on `z`.
    pub fn into_coefficient(self) -> Result<ExactCoefficient, ParseError> {
        if self.big_o.is_some() || self.terms.keys().any(|&k| k != 0) {
            return Err(ParseError::DependsOnZ);
        }
        Ok(self.terms.get(&0).cloned().unwrap_or_default())
    }

    /// The value as a truncated series. An explicit `O(z^k)` fixes the order
    /// to `k − 1`; otherwise `default_order` is used.
    pub fn into_series(self, default_order: i32) -> TruncatedSeries {
        let order = self.big_o.map(|o| o - 1).unwrap_or(default_order);
        TruncatedSeries::from_terms(self.terms, order)
    }

    /// Declared `O(z^k)` exponent, if any.
    pub fn big_o(&self) -> Option<i32> {
        self.big_o
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, o)| *o).unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        let at = self.offset();
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(_) => Err(ParseError::UnexpectedToken(at)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<PariValue, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PariValue, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?.recip()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<PariValue, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PariValue, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.signed_int()?;
        base.pow(e)
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.offset();
        match self.next() {
            Some(Token::Int(n)) => {
                let v: i64 = n.try_into().map_err(|_| ParseError::UnexpectedToken(at))?;
                Ok(if negative { -v } else { v })
            }
            Some(_) => Err(ParseError::UnexpectedToken(at)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn atom(&mut self) -> Result<PariValue, ParseError> {
        let at = self.offset();
        match self.next() {
            Some(Token::Int(n)) => Ok(PariValue::constant(ExactCoefficient::from_rational(
                BigRational::from_integer(n),
            ))),
            Some(Token::LParen) => {
                let v = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(v)
            }
            Some(Token::Ident(name)) => self.identifier(&name),
            Some(_) => Err(ParseError::UnexpectedToken(at)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn identifier(&mut self, name: &str) -> Result<PariValue, ParseError> {
        match name {
            "L" => Ok(PariValue::constant(ExactCoefficient::log2())),
            "z" => Ok(PariValue::term(1, ExactCoefficient::one())),
            "O" => {
                self.expect(Token::LParen)?;
                let at = self.offset();
                match self.next() {
                    Some(Token::Ident(v)) if v == "z" => {}
                    _ => return Err(ParseError::UnexpectedToken(at)),
                }
                let k = if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    self.signed_int()? as i32
                } else {
                    1
                };
                self.expect(Token::RParen)?;
                Ok(PariValue {
                    terms: BTreeMap::new(),
                    big_o: Some(k),
                })
            }
            z if z.starts_with('Z') => {
                let n: u32 = z[1..]
                    .parse()
                    .map_err(|_| ParseError::UnknownIdentifier(z.to_string()))?;
                if n < 3 || n % 2 == 0 {
                    return Err(ParseError::UnknownIdentifier(z.to_string()));
                }
                Ok(PariValue::constant(ExactCoefficient::zeta(n)))
            }
            other => Err(ParseError::UnknownIdentifier(other.to_string())),
        }
    }
}

/// Parses a Pari-like expression in `L`, `Z3`, `Z5`, …, `z` and `O(z^k)`.
pub fn parse(src: &str) -> Result<PariValue, ParseError> {
    let mut p = Parser {
        tokens: tokenize(src)?,
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(ParseError::UnexpectedToken(p.offset()));
    }
    Ok(v)
}

/// Parses an expression that must not involve `z`.
pub fn parse_coefficient(src: &str) -> Result<ExactCoefficient, ParseError> {
    parse(src)?.into_coefficient()
}

/// Parses a series; `O(z^k)` sets the order, otherwise `default_order`.
pub fn parse_series(src: &str, default_order: i32) -> Result<TruncatedSeries, ParseError> {
    Ok(parse(src)?.into_series(default_order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_coefficient() {
        let c = parse_coefficient("4*L^4 + 6*L^3 - L + 9/4*Z3").unwrap();
        assert_eq!(c.to_string(), "4*L^4 + 6*L^3 - L + 9/4*Z3");
    }

    #[test]
    fn division_by_monomial_groups() {
        let a = parse_coefficient("81*Z3/(16*L)").unwrap();
        let b = parse_coefficient("81/16*Z3/L").unwrap();
        assert_eq!(a, b);
        let c = parse_coefficient("-81/4*(3-1/L)*Z3^2").unwrap();
        let d = parse_coefficient("-243/4*Z3^2 + 81/4*Z3^2/L").unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn parses_series_with_big_o() {
        let s = parse_series("1/2/z + 2*L - 4*z + (-8 + 18*Z3/L)*z^2 + O(z^4)", 10).unwrap();
        assert_eq!(s.valuation(), -1);
        assert_eq!(s.order(), 3);
        assert_eq!(s.coeff(3).unwrap(), &ExactCoefficient::zero());
        let round = parse_series(&s.to_string(), 10).unwrap();
        assert_eq!(round, s);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("1/(1+L)"), Err(ParseError::NonMonomialDivisor)));
        assert!(matches!(parse("Z4"), Err(ParseError::UnknownIdentifier(_))));
        assert!(matches!(parse("2 +"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse("2 $"), Err(ParseError::UnexpectedChar('$', 2))));
        assert!(matches!(parse_coefficient("L*z"), Err(ParseError::DependsOnZ)));
        assert!(matches!(parse("Z3/Z3"), Err(ParseError::NonMonomialDivisor)));
    }
}
