//! Sparse polynomials in the three plane coordinates `a0, a1, a2`.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

pub type Exponent = [u32; 3];

/// A polynomial in `a0, a1, a2` with no stored zero coefficients.
///
/// Equality compares terms only; the declared degree is metadata.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    field: Field,
    terms: BTreeMap<Exponent, Scalar>,
    degree: Option<u32>,
}

impl MultiPoly {
    pub fn zero(field: Field) -> Self {
        Self { field, terms: BTreeMap::new(), degree: None }
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Self::monomial(c, [0, 0, 0]).unwrap_or_else(|| Self::zero(field))
    }

    /// `c * a^e`; `None` when `c` is zero.
    pub fn monomial(c: Scalar, e: Exponent) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let field = c.field();
        Some(Self { field, terms: BTreeMap::from([(e, c)]), degree: None })
    }

    /// The linear form `c0*a0 + c1*a1 + c2*a2`.
    pub fn linear(coeffs: &[Scalar; 3]) -> Self {
        let field = coeffs[0].field();
        let mut p = Self::zero(field);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p.degree = Some(1);
        p
    }

    /// The coordinate `a_i`.
    pub fn var(field: Field, i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(field.one(), e).unwrap()
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Exponent, Scalar)>) -> Result<Self> {
        let mut p = Self::zero(field);
        for (e, c) in terms {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(|| self.field.zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponent) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The common total degree of all terms, or `None` if the polynomial is
    /// zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// Declared homogeneity degree, if any.
    pub fn declared_degree(&self) -> Option<u32> {
        self.degree
    }

    /// Declares homogeneity; fails if some term has another total degree.
    pub fn with_degree(mut self, d: u32) -> Result<Self> {
        if self.terms.keys().any(|e| e.iter().sum::<u32>() != d) {
            return Err(Error::EntryDegree);
        }
        self.degree = Some(d);
        Ok(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = Self::zero(self.field);
        out.terms = self.terms.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.field);
        for (e, c) in &self.terms {
            out.add_term(*e, c * s);
        }
        out.degree = self.degree.filter(|_| !out.is_zero());
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = Self::zero(self.field);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out.degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) if !out.is_zero() => Some(a + b),
            _ => None,
        };
        out
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero(self.field);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = *e;
            d[var] -= 1;
            out.add_term(d, c * &self.field.from_i64(e[var] as i64));
        }
        out
    }

    /// Exact evaluation at a point of the same field.
    pub fn evaluate(&self, point: &[Scalar; 3]) -> Result<Scalar> {
        if point.iter().any(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.terms.iter().fold(self.field.zero(), |acc, (e, c)| {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = &term * &x.pow(k);
                }
            }
            acc + term
        }))
    }

    /// Reduction of a rational polynomial mod `p`.
    pub fn to_field(&self, field: Field) -> Result<Self> {
        let mut out = Self::zero(field);
        for (e, c) in &self.terms {
            let r = c.as_rational().ok_or(Error::FieldMismatch)?;
            out.add_term(*e, field.from_rational(r)?);
        }
        out.degree = self.degree.filter(|_| !out.is_zero());
        Ok(out)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        // Highest power of a0 first reads most naturally.
        for (e, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => mono.push(format!("a{i}")),
                    _ => mono.push(format!("a{i}^{k}")),
                }
            }
            let cs = c.to_string();
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", paren(&cs), mono.join("*"))
            };
            parts.push(term);
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

fn paren(s: &str) -> String {
    if s.contains(['+', ' ']) || s[1..].contains('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Exact determinant of a symmetric matrix of linear forms.
///
/// Laplace expansion along rows, memoized on the set of columns still
/// available, so an `n x n` matrix costs `O(n 2^n)` polynomial products.
pub fn det_linear_matrix(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("determinant needs a square matrix".into()));
    }
    let field = m.first().and_then(|r| r.first()).map_or(Field::Rational, MultiPoly::field);
    for (i, row) in m.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.field() != field {
                return Err(Error::FieldMismatch);
            }
            if !entry.is_zero() && entry.homogeneous_degree() != Some(1) {
                return Err(Error::EntryDegree);
            }
            if *entry != m[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    if n == 0 {
        return Ok(MultiPoly::constant(field.one()));
    }
    // memo[mask] = determinant of rows (n - popcount(mask))..n restricted to columns in mask.
    let mut memo: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    memo[0] = Some(MultiPoly::constant(field.one()));
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = MultiPoly::zero(field);
        // Sign alternates over the columns present in the mask, left to right.
        let mut pos = 0;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let minor = memo[mask & !(1 << col)].as_ref().unwrap();
                if !minor.is_zero() {
                    let term = entry.mul(minor);
                    acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            pos += 1;
        }
        memo[mask] = Some(acc);
    }
    let det = memo[(1 << n) - 1].take().unwrap();
    if det.is_zero() {
        Ok(det)
    } else {
        det.with_degree(n as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(f: Field, c: [i64; 3]) -> MultiPoly {
        MultiPoly::linear(&[f.from_i64(c[0]), f.from_i64(c[1]), f.from_i64(c[2])])
    }

    fn diag_net(f: Field) -> Vec<Vec<MultiPoly>> {
        let vars = [0, 0, 1, 1, 2, 2];
        (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        if i == j {
                            MultiPoly::var(f, vars[i])
                        } else {
                            MultiPoly::zero(f)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn diagonal_determinant() {
        let f = Field::Rational;
        let d = det_linear_matrix(&diag_net(f)).unwrap();
        assert_eq!(d, MultiPoly::monomial(f.one(), [2, 2, 2]).unwrap());
        assert_eq!(d.declared_degree(), Some(6));
        assert_eq!(d.to_string(), "a0^2*a1^2*a2^2");
    }

    #[test]
    fn evaluation_examples() {
        let f = Field::Rational;
        let p = MultiPoly::monomial(f.one(), [2, 2, 2]).unwrap();
        assert_eq!(p.evaluate(&[f.one(), f.one(), f.one()]).unwrap(), f.one());
        assert_eq!(p.evaluate(&[f.zero(), f.one(), f.one()]).unwrap(), f.zero());
        let g = Field::Prime(5);
        assert_eq!(p.evaluate(&[g.one(), g.one(), g.one()]), Err(Error::FieldMismatch));
    }

    #[test]
    fn rejects_bad_entries() {
        let f = Field::Rational;
        let mut m = diag_net(f);
        m[0][1] = lin(f, [1, 0, 0]);
        assert_eq!(det_linear_matrix(&m), Err(Error::NotSymmetric));
        let mut m = diag_net(f);
        m[0][0] = MultiPoly::monomial(f.one(), [2, 0, 0]).unwrap();
        assert_eq!(det_linear_matrix(&m), Err(Error::EntryDegree));
    }

    #[test]
    fn partials_of_fermat() {
        let f = Field::prime(7).unwrap();
        let p = MultiPoly::from_terms(f, [([6, 0, 0], f.one()), ([0, 6, 0], f.one()), ([0, 0, 6], f.one())]).unwrap();
        let d0 = p.partial(0);
        assert_eq!(d0, MultiPoly::monomial(f.from_i64(6), [5, 0, 0]).unwrap());
    }
}
