//! Truncated power series with exact rational coefficients, and the small
//! integer polynomials used to describe Hilbert series as rational
//! functions in `t`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Parses an expression in `t` built from integers, `t`, `+ - *`, `^`
    /// with non-negative integer exponents, and parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = ExprParser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let poly = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!(
                "unexpected `{}` in polynomial `{text}`",
                p.chars[p.pos]
            )));
        }
        Ok(poly)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{a}*t^{i}")?,
            }
        }
        Ok(())
    }
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {}", self.pos))
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.add(&t.neg()) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                // Implicit multiplication: `2t`, `(1+t)(1-t)`.
                Some('t' | '(') => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e = e.to_u32().filter(|&e| e <= 10_000).ok_or_else(|| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(IntPoly::from_ints(&[0, 1]))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::new(vec![self.integer()?])),
            Some('-') => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            _ => Err(self.err("expected integer, `t` or `(`")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.err("bad integer"))
    }
}

/// Power series truncated at order `N` (coefficients `c_0 .. c_{N-1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(Self { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Truncation of a polynomial to order `order`.
    pub fn from_poly(p: &IntPoly, order: usize) -> Result<Self> {
        Self::new((0..order).map(|i| BigRational::from_integer(p.coeff(i))).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Coefficients as `i64`, when every one is an integer that fits.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().to_i64()).flatten())
            .collect()
    }

    /// Cauchy product truncated at the common order.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let n = self.order();
        if other.order() != n {
            return Err(Error::OrderMismatch);
        }
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.order() != self.order() {
            return Err(Error::OrderMismatch);
        }
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    /// `f(t) -> f(-t)`.
    pub fn substitute_neg(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// The series of the even-degree part: coefficient `n` of the result is
    /// coefficient `2n` of the input.
    pub fn even_veronese(&self) -> Self {
        Self { coeffs: self.coeffs.iter().step_by(2).cloned().collect() }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// First `order` coefficients of `numerator / denominator` by long division.
pub fn expand_rational_series(numerator: &IntPoly, denominator: &IntPoly, order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let d0 = denominator.coeff(0);
    if d0.is_zero() {
        return Err(Error::SeriesNotInvertible);
    }
    let d0 = BigRational::from_integer(d0);
    let mut out: Vec<BigRational> = Vec::with_capacity(order);
    for i in 0..order {
        let mut acc = BigRational::from_integer(numerator.coeff(i));
        for (j, dj) in denominator.coeffs().iter().enumerate().skip(1).take(i) {
            if !dj.is_zero() {
                acc -= &out[i - j] * BigRational::from_integer(dj.clone());
            }
        }
        out.push(acc / &d0);
    }
    PowerSeries::new(out)
}
