//! Quadratic forms given by symmetric Gram matrices, and their isotropic
//! subspaces.
//!
//! Conventions: the value of `v` is `v S v^T` and the polar pairing of `v`
//! and `w` is `v S w^T`, so the hyperbolic plane has Gram matrix
//! `[[0, 1], [1, 0]]` and value `2xy`.

use std::fmt;

use crate::algebra_core::{Field, Matrix, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadForm {
    gram: Matrix,
}

/// Result of [`QuadForm::diagonalize`]: `P^T S P = diag(values)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonalization {
    pub values: Vec<Scalar>,
    /// Columns are the new basis vectors in the original coordinates.
    pub basis_change: Matrix,
}

impl QuadForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if gram.rows() == 0 {
            return Err(Error::DimensionMismatch);
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { gram })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64(field, rows))
    }

    pub fn diagonal(field: Field, values: &[Scalar]) -> Result<Self> {
        if values.iter().any(|v| v.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Self::new(Matrix::diagonal(field, values))
    }

    pub fn diagonal_i64(field: Field, values: &[i64]) -> Result<Self> {
        let v: Vec<Scalar> = values.iter().map(|&x| field.from_i64(x)).collect();
        Self::diagonal(field, &v)
    }

    /// The hyperbolic plane `[[0, 1], [1, 0]]`.
    pub fn hyperbolic(field: Field) -> Self {
        Self::from_i64(field, &[&[0, 1], &[1, 0]]).unwrap()
    }

    /// `diag(-1, c) + H`, the local model of a quadric surface bundle across
    /// the discriminant, with `c` playing the slice parameter `t`.
    pub fn slice_model(c: Scalar) -> Result<Self> {
        let f = c.field();
        Self::diagonal(f, &[f.from_i64(-1), c])?.direct_sum(&Self::hyperbolic(f))
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn field(&self) -> Field {
        self.gram.field()
    }

    pub fn value(&self, v: &[Scalar]) -> Scalar {
        self.gram.pair(v, v)
    }

    pub fn pairing(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        self.gram.pair(v, w)
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    /// Kernel of the Gram matrix.
    pub fn radical(&self) -> Subspace {
        Subspace::from_echelon(self.dim(), self.gram.nullspace())
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Self::new(self.gram.block_diag(&other.gram))
    }

    /// The congruent form with Gram matrix `P^T S P`.
    pub fn transform(&self, p: &Matrix) -> Result<Self> {
        Self::new(p.transpose().mul(&self.gram)?.mul(p)?)
    }

    /// Congruence diagonalization by symmetric row/column operations.
    ///
    /// An input that is already diagonal comes back with the identity
    /// change of basis. Degenerate forms are allowed; their zero values
    /// number `n - rank`.
    pub fn diagonalize(&self) -> Diagonalization {
        let n = self.dim();
        let field = self.field();
        let mut s = self.gram.clone();
        let mut p = Matrix::identity(field, n);
        for i in 0..n {
            let off_diagonal = (i..n).any(|a| (a + 1..n).any(|b| !s[(a, b)].is_zero()));
            if !off_diagonal {
                break;
            }
            if s[(i, i)].is_zero() {
                if let Some(j) = (i + 1..n).find(|&j| !s[(j, j)].is_zero()) {
                    swap_basis(&mut s, &mut p, i, j);
                } else {
                    // All remaining diagonal entries vanish; e_j + e_k has
                    // value 2 S_jk, nonzero outside characteristic 2.
                    let (j, k) = (i..n)
                        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                        .find(|&(a, b)| !s[(a, b)].is_zero())
                        .unwrap();
                    add_basis(&mut s, &mut p, j, k, &field.one());
                    swap_basis(&mut s, &mut p, i, j);
                }
            }
            let pivot_inv = s[(i, i)].inv().expect("nonzero pivot");
            for l in i + 1..n {
                if s[(i, l)].is_zero() {
                    continue;
                }
                let f = -(&s[(i, l)] * &pivot_inv);
                add_basis(&mut s, &mut p, l, i, &f);
            }
        }
        let values = (0..n).map(|i| s[(i, i)].clone()).collect();
        Diagonalization { values, basis_change: p }
    }
}

/// Basis vector `target += factor * source`, applied to both sides of `s`.
fn add_basis(s: &mut Matrix, p: &mut Matrix, target: usize, source: usize, factor: &Scalar) {
    let n = s.rows();
    for r in 0..n {
        p[(r, target)] = &p[(r, target)] + &(factor * &p[(r, source)]);
    }
    for c in 0..n {
        s[(target, c)] = &s[(target, c)] + &(factor * &s[(source, c)]);
    }
    for r in 0..n {
        s[(r, target)] = &s[(r, target)] + &(factor * &s[(r, source)]);
    }
}

fn swap_basis(s: &mut Matrix, p: &mut Matrix, a: usize, b: usize) {
    if a != b {
        s.swap_rows(a, b);
        s.swap_cols(a, b);
        p.swap_cols(a, b);
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gram)
    }
}

/// A linear subspace stored by its reduced row echelon basis, so equal
/// subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of arbitrary rows (dependent rows allowed).
    pub fn span(field: Field, ambient: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != ambient) {
            return Err(Error::DimensionMismatch);
        }
        if rows.is_empty() {
            return Ok(Self::zero(field, ambient));
        }
        let m = Matrix::from_rows(field, rows)?;
        let (r, pivots) = m.rref();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..ambient).collect();
        Ok(Self { ambient, basis: r.select(&rows, &cols) })
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Self { ambient, basis: Matrix::zeros(field, 0, ambient) }
    }

    /// Wraps a matrix already in reduced echelon form with independent rows.
    fn from_echelon(ambient: usize, basis: Matrix) -> Self {
        Self { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let rows = self.basis_rows().into_iter().chain(other.basis_rows()).collect();
        Self::span(self.field(), self.ambient, rows).expect("same ambient space")
    }

    pub fn intersection_dim(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut rows = self.basis_rows();
        rows.push(v.to_vec());
        Self::span(self.field(), self.ambient, rows).map(|s| s.dim()) == Ok(self.dim())
    }

    /// Image under `v -> v M` for a square matrix `M`.
    pub fn map_rows(&self, m: &Matrix) -> Self {
        let rows = self.basis_rows().iter().map(|r| m.left_apply(r)).collect();
        Self::span(self.field(), self.ambient, rows).expect("square map")
    }

    pub fn is_totally_isotropic(&self, q: &QuadForm) -> bool {
        let rows = self.basis_rows();
        rows.iter()
            .enumerate()
            .all(|(i, v)| rows[i..].iter().all(|w| q.pairing(v, w).is_zero()))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis_rows()
            .iter()
            .map(|r| format!("({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

/// Every `k`-dimensional totally isotropic subspace of `q`, for `q` over a
/// prime field.
///
/// Walks reduced echelon bases directly: pivot sets in lexicographic
/// order, then each row's free entries as a base-`p` counter. A row is
/// only extended once it pairs to zero with itself and all earlier rows,
/// which prunes most of the search.
pub fn enumerate_max_isotropic(q: &QuadForm, k: usize) -> Result<Vec<Subspace>> {
    let Field::Prime(p) = q.field() else {
        return Err(Error::InfiniteField);
    };
    let n = q.dim();
    if k > n {
        return Err(Error::DimensionMismatch);
    }
    let gram: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| q.gram()[(i, j)].as_fp().unwrap().value()).collect())
        .collect();
    let search = IsotropicSearch { n, p, gram };
    let mut found = Vec::new();
    for pivots in combinations(n, k) {
        let mut rows = Vec::with_capacity(k);
        search.extend(&pivots, &mut rows, &mut found);
    }
    let field = q.field();
    Ok(found
        .into_iter()
        .map(|rows| {
            let m = Matrix::from_rows(
                field,
                rows.iter()
                    .map(|r: &Vec<u64>| r.iter().map(|&x| field.from_i64(x as i64)).collect())
                    .collect(),
            )
            .unwrap_or_else(|_| Matrix::zeros(field, 0, n));
            Subspace::from_echelon(n, m)
        })
        .collect())
}

struct IsotropicSearch {
    n: usize,
    p: u64,
    gram: Vec<Vec<u64>>,
}

impl IsotropicSearch {
    fn pair(&self, v: &[u64], w: &[u64]) -> u64 {
        let mut acc = 0u64;
        for i in 0..self.n {
            if v[i] == 0 {
                continue;
            }
            let mut row = 0u64;
            for j in 0..self.n {
                row = (row + self.gram[i][j] * w[j]) % self.p;
            }
            acc = (acc + v[i] * row) % self.p;
        }
        acc
    }

    fn extend(&self, pivots: &[usize], rows: &mut Vec<Vec<u64>>, out: &mut Vec<Vec<Vec<u64>>>) {
        let r = rows.len();
        if r == pivots.len() {
            out.push(rows.clone());
            return;
        }
        let free: Vec<usize> = (pivots[r] + 1..self.n).filter(|c| !pivots.contains(c)).collect();
        let mut digits = vec![0u64; free.len()];
        loop {
            let mut row = vec![0u64; self.n];
            row[pivots[r]] = 1;
            for (&c, &d) in free.iter().zip(&digits) {
                row[c] = d;
            }
            if self.pair(&row, &row) == 0 && rows.iter().all(|w| self.pair(&row, w) == 0) {
                rows.push(row);
                self.extend(pivots, rows, out);
                rows.pop();
            }
            // Increment, last free column fastest.
            let mut i = digits.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < self.p {
                    break;
                }
                digits[i] = 0;
            }
        }
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Partition of a family of maximal isotropic subspaces into the
/// components of the orthogonal Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Indices into the input list, each class sorted, classes ordered by
    /// their smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Class index of each input subspace.
    pub fn labels(&self, len: usize) -> Vec<usize> {
        let mut labels = vec![usize::MAX; len];
        for (c, members) in self.classes.iter().enumerate() {
            for &m in members {
                labels[m] = c;
            }
        }
        labels
    }
}

/// Groups maximal isotropic subspaces of `q` into components.
///
/// Every maximal isotropic subspace contains the radical `R` of `q`, so the
/// family is that of the nondegenerate quotient `V/R`. When `dim V/R` is
/// even, `W` and `W'` lie in one component iff `dim(W ∩ W') ≡ k (mod 2)`
/// (closed transitively). When it is odd the orthogonal Grassmannian of
/// the quotient is connected and there is a single class.
pub fn classify_components(q: &QuadForm, subspaces: &[Subspace]) -> Result<Components> {
    let Some(first) = subspaces.first() else {
        return Ok(Components { classes: Vec::new() });
    };
    let k = first.dim();
    if subspaces.iter().any(|w| w.dim() != k || w.ambient_dim() != q.dim()) {
        return Err(Error::DimensionMismatch);
    }
    let quotient_dim = q.rank();
    let m = subspaces.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..m {
        for j in i + 1..m {
            let same = quotient_dim % 2 == 1 || subspaces[i].intersection_dim(&subspaces[j]) % 2 == k % 2;
            if same {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_to_class = std::collections::HashMap::new();
    for i in 0..m {
        let r = find(&mut parent, i);
        let c = *root_to_class.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(i);
    }
    Ok(Components { classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn ranks() {
        let f = Field::Rational;
        assert_eq!(QuadForm::hyperbolic(f).rank(), 2);
        let q = QuadForm::slice_model(f.zero()).unwrap();
        assert_eq!(q.rank(), 3);
    }

    #[test]
    fn radicals() {
        let f = Field::Rational;
        assert_eq!(QuadForm::hyperbolic(f).radical().dim(), 0);
        let q = QuadForm::slice_model(f.zero()).unwrap();
        let rad = q.radical();
        assert_eq!(rad.dim(), 1);
        let e2: Vec<Scalar> = [0, 1, 0, 0].iter().map(|&x| f.from_i64(x)).collect();
        assert!(rad.contains(&e2));
        let d = QuadForm::diagonal_i64(f, &[1, 0, 0]).unwrap();
        assert_eq!(d.radical().dim(), 2);
        assert_eq!(d.rank() + d.radical().dim(), 3);
    }

    #[test]
    fn diagonalize_hyperbolic() {
        let f = Field::Rational;
        let h = QuadForm::hyperbolic(f);
        let d = h.diagonalize();
        let p = &d.basis_change;
        let congruent = p.transpose().mul(h.gram()).unwrap().mul(p).unwrap();
        assert_eq!(congruent, Matrix::diagonal(f, &d.values));
        assert!(d.values.iter().all(|v| !v.is_zero()));
        assert!(p.inverse().is_some());
    }

    #[test]
    fn diagonal_input_keeps_identity() {
        let f = gf(7);
        let q = QuadForm::diagonal_i64(f, &[0, 3, 0, 5]).unwrap();
        let d = q.diagonalize();
        assert_eq!(d.basis_change, Matrix::identity(f, 4));
        let expected: Vec<Scalar> = [0, 3, 0, 5].iter().map(|&x| f.from_i64(x)).collect();
        assert_eq!(d.values, expected);
    }

    #[test]
    fn diagonalize_slice_model_mod_7() {
        let f = gf(7);
        let q = QuadForm::slice_model(f.from_i64(2)).unwrap();
        let d = q.diagonalize();
        assert_eq!(d.values.iter().filter(|v| !v.is_zero()).count(), 4);
        assert_eq!(q.transform(&d.basis_change).unwrap().gram(), &Matrix::diagonal(f, &d.values));
    }

    #[test]
    fn direct_sum_shapes() {
        let f = Field::Rational;
        let h = QuadForm::hyperbolic(f);
        let hh = h.direct_sum(&h).unwrap();
        assert_eq!(hh.gram(), &Matrix::from_i64(f, &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]));
        assert_eq!(hh.rank(), 4);
        let g = QuadForm::hyperbolic(gf(3));
        assert_eq!(h.direct_sum(&g), Err(Error::FieldMismatch));
    }

    #[test]
    fn slice_model_matches_displayed_matrix() {
        let f = gf(11);
        let q = QuadForm::slice_model(f.from_i64(5)).unwrap();
        let expected = Matrix::from_i64(f, &[&[-1, 0, 0, 0], &[0, 5, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(q.gram(), &expected);
    }

    #[test]
    fn no_isotropic_lines_for_sum_of_two_squares_mod_3() {
        let q = QuadForm::diagonal_i64(gf(3), &[1, 1]).unwrap();
        assert!(enumerate_max_isotropic(&q, 1).unwrap().is_empty());
    }

    #[test]
    fn enumeration_needs_finite_field() {
        let q = QuadForm::hyperbolic(Field::Rational);
        assert_eq!(enumerate_max_isotropic(&q, 1), Err(Error::InfiniteField));
    }

    #[test]
    fn classify_rejects_mixed_dimensions() {
        let f = gf(3);
        let q = QuadForm::hyperbolic(f).direct_sum(&QuadForm::hyperbolic(f)).unwrap();
        let mut ws = enumerate_max_isotropic(&q, 2).unwrap();
        ws.extend(enumerate_max_isotropic(&q, 1).unwrap().into_iter().take(1));
        assert_eq!(classify_components(&q, &ws), Err(Error::DimensionMismatch));
    }

    #[test]
    fn single_subspace_single_class() {
        let f = gf(3);
        let q = QuadForm::hyperbolic(f).direct_sum(&QuadForm::hyperbolic(f)).unwrap();
        let ws = enumerate_max_isotropic(&q, 2).unwrap();
        let c = classify_components(&q, &ws[..1]).unwrap();
        assert_eq!(c.count(), 1);
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
