//! Exact scalars: rationals, odd prime fields and `Q(s)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ratfn::{rational_sqrt, RationalFunction};
use crate::error::{Error, Result};

/// The field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    /// `GF(p)` for an odd prime `p < 2^32`.
    Prime(u64),
    /// `Q(s)`, the slice parameter field.
    RationalFunction,
}

impl Field {
    /// `GF(p)`. Rejects 2 and composites.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Characteristic2);
        }
        if p < 3 || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Prime(p) => p,
            _ => 0,
        }
    }

    /// Number of elements, for finite fields.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(p),
            _ => None,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::Fp(Fp::new(n.rem_euclid(p as i64) as u64, p)),
            Field::RationalFunction => Scalar::Rf(RationalFunction::from_int(n)),
        }
    }

    /// Maps a rational into this field; fails if `p` divides the denominator.
    pub fn from_rational(self, x: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rat(x.clone())),
            Field::RationalFunction => Ok(Scalar::Rf(RationalFunction::constant(x.clone()))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let d = x.denom().mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::DenominatorDivisible(p));
                }
                let n = x.numer().mod_floor(&pb).to_u64().unwrap();
                Ok(Scalar::Fp(Fp::new(n, p).mul(Fp::new(d, p).inv().unwrap())))
            }
        }
    }

    /// All elements of a finite field in the order `0, 1, ..., p-1`.
    pub fn elements(self) -> Result<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Ok((0..p).map(|v| Scalar::Fp(Fp::new(v, p))).collect()),
            _ => Err(Error::InfiniteField),
        }
    }

    /// Parses `Q`, `Q(s)` or `GF(p)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        match t {
            "Q" | "QQ" => Ok(Field::Rational),
            "Q(s)" => Ok(Field::RationalFunction),
            _ => {
                let inner = t
                    .strip_prefix("GF(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("unknown field `{t}`")))?;
                let p: u64 = inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad characteristic `{inner}`")))?;
                Field::prime(p)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::RationalFunction => write!(f, "Q(s)"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue mod an odd prime, always reduced into `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: u64, p: u64) -> Self {
        Self { value: value % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    fn check(self, o: Self) {
        assert_eq!(self.p, o.p, "field mismatch");
    }

    pub fn add(self, o: Self) -> Self {
        self.check(o);
        Self::new(self.value + o.value, self.p)
    }

    pub fn sub(self, o: Self) -> Self {
        self.check(o);
        Self::new(self.value + self.p - o.value, self.p)
    }

    pub fn mul(self, o: Self) -> Self {
        self.check(o);
        Self::new(self.value * o.value, self.p)
    }

    pub fn neg(self) -> Self {
        Self::new(self.p - self.value, self.p)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| self.pow(self.p - 2))
    }

    /// A square root via Tonelli-Shanks, if one exists.
    pub fn sqrt(self) -> Option<Self> {
        let p = self.p;
        if self.value == 0 {
            return Some(self);
        }
        if self.pow((p - 1) / 2).value != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .map(|z| Self::new(z, p))
            .find(|z| z.pow((p - 1) / 2).value == p - 1)
            .unwrap();
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.value != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt.value != 1 {
                tt = tt.mul(tt);
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b.mul(b);
            t = t.mul(c);
            r = r.mul(b);
        }
        Some(r)
    }
}

/// An exact scalar. Arithmetic between different fields panics with
/// "field mismatch"; public entry points check compatibility first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(Fp),
    Rf(RationalFunction),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp(x) => Field::Prime(x.p),
            Scalar::Rf(_) => Field::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Fp(x) => x.value == 0,
            Scalar::Rf(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(x) => (!x.is_zero()).then(|| Scalar::Rat(x.recip())),
            Scalar::Fp(x) => x.inv().map(Scalar::Fp),
            Scalar::Rf(x) => x.inv().map(Scalar::Rf),
        }
    }

    /// `self / rhs`, or `DivisionByZero`.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv().ok_or(Error::DivisionByZero)?)
    }

    /// A square root inside the same field, when one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(x) => rational_sqrt(x).map(Scalar::Rat),
            Scalar::Fp(x) => x.sqrt().map(Scalar::Fp),
            Scalar::Rf(x) => x.sqrt().map(Scalar::Rf),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        (0..e).fold(self.field().one(), |acc, _| &acc * self)
    }

    /// The residue for prime-field scalars.
    pub fn as_fp(&self) -> Option<Fp> {
        match self {
            Scalar::Fp(x) => Some(*x),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_rational_function(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::Rf(x) => Some(x),
            _ => None,
        }
    }

    /// Parses an integer or `a/b` literal into `field`.
    pub fn parse(field: Field, text: &str) -> Result<Scalar> {
        field.from_rational(&parse_rational(text)?)
    }

    /// Compact textual form used by the structured CLI output; `parse`
    /// inverts it for rational and prime-field values.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// Parses `n` or `n/d` with arbitrary-size integers.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("bad number `{t}`"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => write!(f, "{x}"),
            Scalar::Fp(x) => write!(f, "{}", x.value),
            Scalar::Rf(x) => write!(f, "{x}"),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.add(*b)),
            (Scalar::Rf(a), Scalar::Rf(b)) => Scalar::Rf(a.add(b)),
            _ => panic!("field mismatch"),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.sub(*b)),
            (Scalar::Rf(a), Scalar::Rf(b)) => Scalar::Rf(a.sub(b)),
            _ => panic!("field mismatch"),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.mul(*b)),
            (Scalar::Rf(a), Scalar::Rf(b)) => Scalar::Rf(a.mul(b)),
            _ => panic!("field mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp(a) => Scalar::Fp(a.neg()),
            Scalar::Rf(a) => Scalar::Rf(a.neg()),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

pub fn rational_is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Integer-valued rational as `i64`, if it fits.
pub fn rational_to_i64(x: &BigRational) -> Option<i64> {
    rational_is_integer(x).then(|| x.numer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_two_rejected() {
        assert_eq!(Field::prime(2), Err(Error::Characteristic2));
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert!(Field::prime(11).is_ok());
    }

    #[test]
    fn prime_field_values_are_reduced() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1).as_fp().unwrap().value(), 6);
        assert_eq!(f.from_i64(15).as_fp().unwrap().value(), 1);
        let half = f.from_rational(&parse_rational("1/2").unwrap()).unwrap();
        assert_eq!((&half + &half), f.one());
        assert_eq!(
            f.from_rational(&parse_rational("1/7").unwrap()),
            Err(Error::DenominatorDivisible(7))
        );
    }

    #[test]
    fn tonelli_shanks_matches_brute_force() {
        for p in [3u64, 5, 7, 11, 13, 17, 41, 97] {
            for v in 0..p {
                let x = Fp::new(v, p);
                let brute = (0..p).any(|r| (r * r) % p == v);
                match x.sqrt() {
                    Some(r) => assert_eq!(r.mul(r), x),
                    None => assert!(!brute, "missed root of {v} mod {p}"),
                }
            }
        }
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let x = parse_rational("6/-4").unwrap();
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn field_parse_round_trip() {
        for f in [Field::Rational, Field::Prime(11), Field::RationalFunction] {
            assert_eq!(Field::parse(&f.to_string()).unwrap(), f);
        }
        assert_eq!(Field::parse("GF(2)"), Err(Error::Characteristic2));
        assert!(matches!(Field::parse("R"), Err(Error::Parse(_))));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_arithmetic_panics() {
        let _ = Field::Prime(3).one() + Field::Prime(5).one();
    }
}
