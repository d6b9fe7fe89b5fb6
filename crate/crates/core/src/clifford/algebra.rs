//! Finite-dimensional associative algebras given by structure constants.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra_core::{Field, Matrix, Scalar};
use crate::error::{Error, Result};

/// Sparse element: basis index to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize, field: Field) -> Self {
        Self::term(i, field.one())
    }

    pub fn term(i: usize, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(i, c);
        e
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_term(i, c.clone());
        }
        e
    }

    pub fn to_dense(&self, field: Field, dim: usize) -> Vec<Scalar> {
        let mut v = vec![field.zero(); dim];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn add_term(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&i) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.coeffs.remove(&i);
                }
            }
            None => {
                self.coeffs.insert(i, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Option<&Scalar> {
        self.coeffs.get(&i)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for (&i, c) in &self.coeffs {
            out.add_term(i, c * s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Relabels basis indices.
    pub fn reindex(&self, map: impl Fn(usize) -> Option<usize>) -> Option<Self> {
        let mut out = Self::zero();
        for (&i, c) in &self.coeffs {
            out.add_term(map(i)?, c.clone());
        }
        Some(out)
    }
}

/// An associative unital algebra over a field, with a basis, a
/// multiplication table and an optional `Z/2` grading on basis elements.
#[derive(Clone, Debug)]
pub struct FdAlgebra {
    field: Field,
    dim: usize,
    /// `table[i * dim + j]` is the product of basis elements `i` and `j`.
    table: Vec<AlgebraElement>,
    unit: AlgebraElement,
    parity: Vec<u8>,
    labels: Vec<String>,
    /// Basis indices of elements that generate the algebra.
    generators: Vec<usize>,
}

impl FdAlgebra {
    /// Builds an algebra from its basis products. The caller promises
    /// associativity; [`FdAlgebra::check_associative`] can verify it.
    pub fn new(
        field: Field,
        dim: usize,
        table: Vec<AlgebraElement>,
        unit: AlgebraElement,
        parity: Vec<u8>,
        labels: Vec<String>,
        generators: Vec<usize>,
    ) -> Self {
        assert_eq!(table.len(), dim * dim);
        assert_eq!(parity.len(), dim);
        assert_eq!(labels.len(), dim);
        Self { field, dim, table, unit, parity, labels, generators }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn one(&self) -> AlgebraElement {
        self.unit.clone()
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(i, self.field)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a * b;
                for (k, c) in self.basis_product(i, j).terms() {
                    out.add_term(k, &ab * c);
                }
            }
        }
        out
    }

    pub fn commutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn pow(&self, x: &AlgebraElement, e: u32) -> AlgebraElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Whether every basis index in the support of `x` has the given parity.
    pub fn is_homogeneous(&self, x: &AlgebraElement, parity: u8) -> bool {
        x.support().all(|i| self.parity[i] == parity)
    }

    pub fn check_associative(&self, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> bool {
        self.mul(&self.mul(x, y), z) == self.mul(x, &self.mul(y, z))
    }

    /// Matrix of `y -> x y` on the basis (column `j` holds `x b_j`).
    pub fn left_multiplication(&self, x: &AlgebraElement) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            for (i, c) in self.mul(x, &self.basis_element(j)).terms() {
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    /// Basis of the center: elements commuting with every generator.
    pub fn center(&self) -> Vec<AlgebraElement> {
        let n = self.dim;
        let gens = &self.generators;
        let mut m = Matrix::zeros(self.field, gens.len() * n, n);
        for (gi, &g) in gens.iter().enumerate() {
            for i in 0..n {
                for (k, c) in self.basis_product(i, g).terms() {
                    m[(gi * n + k, i)] = &m[(gi * n + k, i)] + c;
                }
                for (k, c) in self.basis_product(g, i).terms() {
                    m[(gi * n + k, i)] = &m[(gi * n + k, i)] - c;
                }
            }
        }
        let kernel = m.nullspace();
        (0..kernel.rows()).map(|r| AlgebraElement::from_dense(kernel.row(r))).collect()
    }

    /// Trace of left multiplication by each basis element.
    fn basis_traces(&self) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| {
                (0..self.dim).fold(self.field.zero(), |acc, j| match self.basis_product(k, j).coeff(j) {
                    Some(c) => acc + c,
                    None => acc,
                })
            })
            .collect()
    }

    /// Gram matrix of `T(x, y) = tr(L_x L_y) = tr(L_{xy})` on the basis.
    pub fn trace_form(&self) -> Matrix {
        let traces = self.basis_traces();
        let mut t = Matrix::zeros(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self
                    .basis_product(i, j)
                    .terms()
                    .fold(self.field.zero(), |acc, (k, c)| acc + c * &traces[k]);
                t[(i, j)] = v;
            }
        }
        t
    }

    /// Coordinates of `x` in the basis `basis` (assumed independent), if
    /// `x` lies in their span.
    fn coordinates(&self, basis: &[AlgebraElement], x: &AlgebraElement) -> Option<Vec<Scalar>> {
        let d = basis.len();
        let mut m = Matrix::zeros(self.field, self.dim, d + 1);
        for (c, b) in basis.iter().enumerate() {
            for (i, v) in b.terms() {
                m[(i, c)] = v.clone();
            }
        }
        for (i, v) in x.terms() {
            m[(i, d)] = v.clone();
        }
        let (r, pivots) = m.rref();
        if pivots.contains(&d) {
            return None;
        }
        let mut out = vec![self.field.zero(); d];
        for (row, &p) in pivots.iter().enumerate() {
            out[p] = r[(row, d)].clone();
        }
        Some(out)
    }

    /// Decomposes the center by its idempotents.
    ///
    /// Returns the primitive central idempotents that were found; a single
    /// entry equal to `1` means no splitting was found. `split` is true when
    /// their number equals the center dimension, i.e. the center is a
    /// product of copies of the base field.
    pub fn central_idempotents(&self) -> CentralDecomposition {
        let center = self.center();
        let one = self.one();
        let d = center.len();
        let trivial = |split| CentralDecomposition { idempotents: vec![one.clone()], split };
        if d <= 1 {
            return trivial(true);
        }
        if d == 2 {
            // Basis {1, u}; u^2 = alpha + beta u.
            let u = center
                .iter()
                .find(|z| self.coordinates(std::slice::from_ref(&one), z).is_none())
                .expect("two-dimensional center has a non-scalar element")
                .clone();
            let basis = [one.clone(), u.clone()];
            let c = self.coordinates(&basis, &self.mul(&u, &u)).expect("center is closed");
            let (alpha, beta) = (&c[0], &c[1]);
            let disc = beta * beta + self.field.from_i64(4) * alpha;
            if disc.is_zero() {
                return trivial(false);
            }
            let Some(root) = disc.sqrt() else {
                return trivial(false);
            };
            let b = root.inv().unwrap();
            let half = self.field.from_i64(2).inv().unwrap();
            let a = (self.field.one() - &b * beta) * half;
            let e1 = one.scale(&a).add(&u.scale(&b));
            let e2 = one.sub(&e1);
            let mut idempotents = vec![e1, e2];
            idempotents.sort_by_key(|e| e.to_dense(self.field, self.dim).iter().map(|x| x.to_string()).collect::<Vec<_>>());
            return CentralDecomposition { idempotents, split: true };
        }
        if let Field::Prime(p) = self.field {
            if (d as f64) * (p as f64).log2() <= 20.0 {
                return self.brute_force_idempotents(&center);
            }
        }
        CentralDecomposition { idempotents: vec![one], split: false }
    }

    fn brute_force_idempotents(&self, center: &[AlgebraElement]) -> CentralDecomposition {
        let elements = self.field.elements().unwrap();
        let p = elements.len();
        let d = center.len();
        let mut idempotents = Vec::new();
        let mut digits = vec![0usize; d];
        loop {
            let mut x = AlgebraElement::zero();
            for (z, &k) in center.iter().zip(&digits) {
                x = x.add(&z.scale(&elements[k]));
            }
            if !x.is_zero() && self.mul(&x, &x) == x {
                idempotents.push(x);
            }
            let mut i = d;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
            }
            if digits.iter().all(|&x| x == 0) {
                break;
            }
        }
        // Primitive: no other nonzero idempotent below it.
        let primitive: Vec<AlgebraElement> = idempotents
            .iter()
            .filter(|e| idempotents.iter().all(|f| f == *e || self.mul(e, f) != *f))
            .cloned()
            .collect();
        let split = primitive.len() == d;
        CentralDecomposition { idempotents: primitive, split }
    }

    /// A nonzero nilpotent central element, if the center has one.
    ///
    /// Uses the trace form of the center acting on itself, whose kernel is
    /// the nilradical when the characteristic is 0 or exceeds the center
    /// dimension; the candidate is verified by taking powers.
    pub fn central_nilpotent(&self) -> Option<AlgebraElement> {
        let center = self.center();
        let d = center.len();
        let mut mult = Matrix::zeros(self.field, d, d);
        // Trace of L^Z_z on the center.
        let trace_of = |z: &AlgebraElement| -> Scalar {
            center.iter().enumerate().fold(self.field.zero(), |acc, (j, b)| {
                let c = self.coordinates(&center, &self.mul(z, b)).expect("center is closed");
                acc + &c[j]
            })
        };
        for i in 0..d {
            for j in 0..d {
                mult[(i, j)] = trace_of(&self.mul(&center[i], &center[j]));
            }
        }
        let kernel = mult.nullspace();
        (0..kernel.rows())
            .map(|r| {
                kernel.row(r).iter().zip(&center).fold(AlgebraElement::zero(), |acc, (c, z)| acc.add(&z.scale(c)))
            })
            .find(|x| !x.is_zero() && self.pow(x, self.dim as u32 + 1).is_zero())
    }

    /// Trace-form semisimplicity test with the center decomposition.
    ///
    /// A nondegenerate trace form proves semisimplicity in any
    /// characteristic. A degenerate one proves the converse only in
    /// characteristic 0 or `p > dim`; otherwise this refuses.
    pub fn semisimplicity_report(&self) -> Result<SubAlgebraReport> {
        let trace_rank = self.trace_form().rank();
        let semisimple = trace_rank == self.dim;
        let p = self.field.characteristic();
        if !semisimple && p != 0 && p as usize <= self.dim {
            return Err(Error::TraceCriterionUnreliable);
        }
        let center_dim = self.center().len();
        let decomposition = self.central_idempotents();
        let factor_dimensions = if semisimple && decomposition.split {
            decomposition
                .idempotents
                .iter()
                .map(|e| self.left_ideal(e).map(|i| i.dimension))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        let central_nilpotent = if semisimple { None } else { self.central_nilpotent() };
        Ok(SubAlgebraReport {
            dimension: self.dim,
            center_dimension: center_dim,
            trace_form_rank: trace_rank,
            semisimple,
            center_split: decomposition.split,
            central_idempotents: decomposition.idempotents,
            factor_dimensions,
            central_nilpotent,
        })
    }

    /// The left ideal `A f`.
    pub fn left_ideal(&self, f: &AlgebraElement) -> Result<LeftIdeal> {
        if f.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.mul(&self.basis_element(i), f).to_dense(self.field, self.dim))
            .collect();
        let (r, pivots) = Matrix::from_rows(self.field, rows)?.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..self.dim).collect();
        Ok(LeftIdeal { dimension: pivots.len(), basis: r.select(&keep, &cols) })
    }

    /// Restriction to the span of `indices`, which must be closed under
    /// multiplication and contain the unit.
    pub fn subalgebra(&self, indices: &[usize], generators: Vec<usize>) -> Result<SubAlgebra> {
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let map = |i: usize| pos.get(&i).copied();
        let n = indices.len();
        let mut table = Vec::with_capacity(n * n);
        for &i in indices {
            for &j in indices {
                table.push(
                    self.basis_product(i, j)
                        .reindex(map)
                        .ok_or_else(|| Error::Shape("subalgebra not closed".into()))?,
                );
            }
        }
        let unit = self.unit.reindex(map).ok_or_else(|| Error::Shape("subalgebra lacks the unit".into()))?;
        let generators = generators
            .into_iter()
            .map(|g| map(g).ok_or_else(|| Error::Shape("generator outside subalgebra".into())))
            .collect::<Result<Vec<_>>>()?;
        let algebra = FdAlgebra::new(
            self.field,
            n,
            table,
            unit,
            indices.iter().map(|&i| self.parity[i]).collect(),
            indices.iter().map(|&i| self.labels[i].clone()).collect(),
            generators,
        );
        Ok(SubAlgebra { algebra, embedding: indices.to_vec() })
    }

    /// The `Z/2`-graded tensor product: `(a ⊗ b)(a' ⊗ b') =
    /// (-1)^{|b||a'|} a a' ⊗ b b'`. Basis `(i, j)` has index `i * dim(b) + j`.
    pub fn graded_tensor(&self, other: &Self) -> Result<FdAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (da, db) = (self.dim, other.dim);
        let n = da * db;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    for l in 0..db {
                        let sign = if self.parity[k] & other.parity[j] == 1 {
                            self.field.from_i64(-1)
                        } else {
                            self.field.one()
                        };
                        let mut prod = AlgebraElement::zero();
                        for (x, cx) in self.basis_product(i, k).terms() {
                            for (y, cy) in other.basis_product(j, l).terms() {
                                prod.add_term(x * db + y, &sign * &(cx * cy));
                            }
                        }
                        table.push(prod);
                    }
                }
            }
        }
        let mut unit = AlgebraElement::zero();
        for (x, cx) in self.unit.terms() {
            for (y, cy) in other.unit.terms() {
                unit.add_term(x * db + y, cx * cy);
            }
        }
        let single = |u: &AlgebraElement| {
            let mut it = u.terms();
            match (it.next(), it.next()) {
                (Some((i, c)), None) if c.is_one() => Some(i),
                _ => None,
            }
        };
        let generators = match (single(&self.unit), single(&other.unit)) {
            (Some(a_unit), Some(b_unit)) => {
                let mut g: Vec<usize> = self.generators.iter().map(|&g| g * db + b_unit).collect();
                g.extend(other.generators.iter().map(|&g| a_unit * db + g));
                g
            }
            _ => (0..n).collect(),
        };
        Ok(FdAlgebra::new(
            self.field,
            n,
            table,
            unit,
            (0..n).map(|x| self.parity[x / db] ^ other.parity[x % db]).collect(),
            (0..n).map(|x| format!("{}⊗{}", self.labels[x / db], other.labels[x % db])).collect(),
            generators,
        ))
    }

    /// Whether the linear map sending basis element `i` to `images[i]` is an
    /// algebra isomorphism onto `target`: bijective, unital, and compatible
    /// with every product of basis elements.
    pub fn is_isomorphism(&self, target: &FdAlgebra, images: &[AlgebraElement]) -> bool {
        if images.len() != self.dim || target.dim != self.dim || target.field != self.field {
            return false;
        }
        let rows: Vec<Vec<Scalar>> = images.iter().map(|x| x.to_dense(self.field, self.dim)).collect();
        if Matrix::from_rows(self.field, rows).map(|m| m.rank()) != Ok(self.dim) {
            return false;
        }
        let apply = |x: &AlgebraElement| {
            x.terms().fold(AlgebraElement::zero(), |acc, (i, c)| acc.add(&images[i].scale(c)))
        };
        if apply(&self.unit) != target.unit {
            return false;
        }
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| apply(self.basis_product(i, j)) == target.mul(&images[i], &images[j]))
        })
    }

    pub fn format_element(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .terms()
            .map(|(i, c)| {
                if self.labels[i] == "1" {
                    c.to_string()
                } else if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({c})*{}", self.labels[i])
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// A subalgebra spanned by a subset of the parent basis.
#[derive(Clone, Debug)]
pub struct SubAlgebra {
    pub algebra: FdAlgebra,
    /// `embedding[a]` is the parent basis index of subalgebra basis `a`.
    pub embedding: Vec<usize>,
}

impl SubAlgebra {
    /// Rewrites a parent element in subalgebra coordinates.
    pub fn restrict(&self, x: &AlgebraElement) -> Option<AlgebraElement> {
        x.reindex(|i| self.embedding.iter().position(|&e| e == i))
    }

    pub fn extend(&self, x: &AlgebraElement) -> AlgebraElement {
        x.reindex(|a| Some(self.embedding[a])).unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralDecomposition {
    pub idempotents: Vec<AlgebraElement>,
    pub split: bool,
}

/// Structure summary of an algebra.
#[derive(Clone, Debug)]
pub struct SubAlgebraReport {
    pub dimension: usize,
    pub center_dimension: usize,
    pub trace_form_rank: usize,
    pub semisimple: bool,
    /// Whether the center is a product of copies of the base field.
    pub center_split: bool,
    pub central_idempotents: Vec<AlgebraElement>,
    /// Dimensions of the simple factors `A e`, when semisimple and split.
    pub factor_dimensions: Vec<usize>,
    pub central_nilpotent: Option<AlgebraElement>,
}

impl fmt::Display for SubAlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dimension: {}", self.dimension)?;
        writeln!(f, "center dimension: {}", self.center_dimension)?;
        writeln!(f, "trace form rank: {}", self.trace_form_rank)?;
        writeln!(f, "semisimple: {}", self.semisimple)?;
        writeln!(f, "center split: {}", self.center_split)?;
        writeln!(f, "central idempotents: {}", self.central_idempotents.len())?;
        writeln!(f, "factor dimensions: {:?}", self.factor_dimensions)?;
        write!(f, "central nilpotent: {}", if self.central_nilpotent.is_some() { "yes" } else { "no" })
    }
}

/// A left ideal with a reduced echelon basis (rows are dense coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftIdeal {
    pub dimension: usize,
    pub basis: Matrix,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 2x2 matrix algebra on matrix units E11, E12, E21, E22.
    fn matrix_units(field: Field) -> FdAlgebra {
        let mut table = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                let (i, j) = (a / 2, a % 2);
                let (k, l) = (b / 2, b % 2);
                table.push(if j == k { AlgebraElement::basis(i * 2 + l, field) } else { AlgebraElement::zero() });
            }
        }
        let unit = AlgebraElement::basis(0, field).add(&AlgebraElement::basis(3, field));
        FdAlgebra::new(
            field,
            4,
            table,
            unit,
            vec![0; 4],
            ["E11", "E12", "E21", "E22"].map(String::from).to_vec(),
            vec![0, 1, 2, 3],
        )
    }

    #[test]
    fn matrix_algebra_structure() {
        let f = Field::Rational;
        let m = matrix_units(f);
        assert_eq!(m.center().len(), 1);
        let r = m.semisimplicity_report().unwrap();
        assert!(r.semisimple);
        assert_eq!(r.factor_dimensions, vec![4]);
        let e11 = m.basis_element(0);
        assert_eq!(m.left_ideal(&e11).unwrap().dimension, 2);
        assert_eq!(m.left_ideal(&m.one()).unwrap().dimension, 4);
        assert_eq!(m.left_ideal(&AlgebraElement::zero()), Err(Error::ZeroGenerator));
    }

    #[test]
    fn tensor_with_ungraded_matrix_algebra() {
        let f = Field::prime(5).unwrap();
        let m = matrix_units(f);
        let mm = m.graded_tensor(&m).unwrap();
        assert_eq!(mm.dim(), 16);
        assert_eq!(mm.center().len(), 1);
        let x = mm.basis_element(3).add(&mm.basis_element(7));
        let y = mm.basis_element(12);
        let z = mm.basis_element(9).scale(&f.from_i64(2));
        assert!(mm.check_associative(&x, &y, &z));
        assert_eq!(mm.mul(&mm.one(), &x), x);
    }

    #[test]
    fn identity_map_is_isomorphism() {
        let f = Field::Rational;
        let m = matrix_units(f);
        let images: Vec<_> = (0..4).map(|i| m.basis_element(i)).collect();
        assert!(m.is_isomorphism(&m, &images));
        let mut swapped = images.clone();
        swapped.swap(0, 1);
        assert!(!m.is_isomorphism(&m, &swapped));
    }
}
