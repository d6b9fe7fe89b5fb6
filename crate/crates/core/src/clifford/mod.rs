//! Clifford and even Clifford algebras of quadratic forms.
//!
//! The form is diagonalized first; the algebra then has basis `e_S` for
//! subsets `S` of the diagonal generators (bitmask order) with
//! `e_S e_T = sign(S, T) * prod_{i in S∩T} d_i * e_{S Δ T}`. Vectors in
//! the original coordinates are injected through the stored change of
//! basis, and satisfy `v w + w v = 2 <v, w>`.

pub mod algebra;

use std::fmt;

use crate::algebra_core::{Field, Matrix, Scalar};
use crate::error::{Error, Result};
use crate::quadratic_forms::{classify_components, enumerate_max_isotropic, QuadForm, Subspace};

pub use algebra::{AlgebraElement, CentralDecomposition, FdAlgebra, LeftIdeal, SubAlgebra, SubAlgebraReport};

#[derive(Clone, Debug)]
pub struct CliffordAlgebra {
    form: QuadForm,
    diag: Vec<Scalar>,
    /// Columns are the diagonal generators in original coordinates.
    basis_change: Matrix,
    /// Maps original coordinates to generator coordinates.
    to_generators: Matrix,
    algebra: FdAlgebra,
}

/// Sign of `e_S e_T` before contraction: `(-1)^{#{(i, j) : i in S, j in T, i > j}}`.
pub fn blade_sign(s: u32, t: u32) -> bool {
    let mut swaps = 0;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (s >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps % 2 == 1
}

fn blade_label(mask: u32, n: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    let idx: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    if n < 10 {
        format!("e{}", idx.concat())
    } else {
        format!("e{}", idx.join("."))
    }
}

fn diagonal_clifford(field: Field, diag: &[Scalar]) -> FdAlgebra {
    let n = diag.len();
    let dim = 1usize << n;
    let mut table = Vec::with_capacity(dim * dim);
    for s in 0..dim as u32 {
        for t in 0..dim as u32 {
            let mut c = field.one();
            for (i, d) in diag.iter().enumerate() {
                if (s & t) >> i & 1 == 1 {
                    c = &c * d;
                }
            }
            if blade_sign(s, t) {
                c = -c;
            }
            table.push(AlgebraElement::term((s ^ t) as usize, c));
        }
    }
    FdAlgebra::new(
        field,
        dim,
        table,
        AlgebraElement::basis(0, field),
        (0..dim as u32).map(|m| (m.count_ones() % 2) as u8).collect(),
        (0..dim as u32).map(|m| blade_label(m, n)).collect(),
        (0..n).map(|i| 1 << i).collect(),
    )
}

/// Builds `Cl(q)`; degenerate forms are allowed.
pub fn build_clifford(q: &QuadForm) -> CliffordAlgebra {
    let d = q.diagonalize();
    let field = q.field();
    let to_generators = d.basis_change.inverse().expect("congruence transform is invertible");
    CliffordAlgebra {
        form: q.clone(),
        algebra: diagonal_clifford(field, &d.values),
        diag: d.values,
        basis_change: d.basis_change,
        to_generators,
    }
}

impl CliffordAlgebra {
    pub fn form(&self) -> &QuadForm {
        &self.form
    }

    pub fn generator_count(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal_values(&self) -> &[Scalar] {
        &self.diag
    }

    pub fn basis_change(&self) -> &Matrix {
        &self.basis_change
    }

    pub fn algebra(&self) -> &FdAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.algebra.mul(x, y)
    }

    /// The diagonal generator `e_{i+1}`.
    pub fn generator(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(1 << i, self.field())
    }

    /// Image of a vector given in the original coordinates of the form.
    pub fn vector(&self, v: &[Scalar]) -> Result<AlgebraElement> {
        if v.len() != self.generator_count() {
            return Err(Error::DimensionMismatch);
        }
        if v.iter().any(|x| x.field() != self.field()) {
            return Err(Error::FieldMismatch);
        }
        let c = self.to_generators.apply(v);
        Ok(c.iter().enumerate().fold(AlgebraElement::zero(), |acc, (i, x)| {
            acc.add(&AlgebraElement::term(1 << i, x.clone()))
        }))
    }

    /// Image of the `i`-th original basis vector.
    pub fn original_basis_vector(&self, i: usize) -> AlgebraElement {
        let n = self.generator_count();
        let v: Vec<Scalar> =
            (0..n).map(|j| if i == j { self.field().one() } else { self.field().zero() }).collect();
        self.vector(&v).expect("valid basis vector")
    }

    /// The subalgebra on even subsets, generated by the bivectors.
    pub fn even_subalgebra(&self) -> SubAlgebra {
        let n = self.generator_count();
        let masks: Vec<usize> = (0..1usize << n).filter(|m| m.count_ones() % 2 == 0).collect();
        let gens = (0..n).flat_map(|i| (i + 1..n).map(move |j| (1 << i) | (1 << j))).collect();
        self.algebra.subalgebra(&masks, gens).expect("even part is a subalgebra")
    }
}

impl fmt::Display for CliffordAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.diag.iter().map(|x| x.to_string()).collect();
        write!(f, "Cl over {} with diagonal ({}), dimension {}", self.field(), d.join(", "), self.dim())
    }
}

/// Graded tensor product of two Clifford algebras.
pub fn graded_tensor(a: &CliffordAlgebra, b: &CliffordAlgebra) -> Result<FdAlgebra> {
    a.algebra().graded_tensor(b.algebra())
}

/// `Cl(q1 + q2)` together with the canonical map to `Cl(q1) ⊗ Cl(q2)`
/// sending original basis vectors `v` to `v ⊗ 1` or `1 ⊗ v`.
#[derive(Clone, Debug)]
pub struct TensorIdentification {
    pub direct: CliffordAlgebra,
    pub tensor: FdAlgebra,
    /// Image of each basis element of `direct`.
    pub images: Vec<AlgebraElement>,
}

impl TensorIdentification {
    pub fn new(q1: &QuadForm, q2: &QuadForm) -> Result<Self> {
        let a = build_clifford(q1);
        let b = build_clifford(q2);
        let tensor = graded_tensor(&a, &b)?;
        let direct = build_clifford(&q1.direct_sum(q2)?);
        let (n1, n) = (q1.dim(), direct.generator_count());
        let db = b.dim();
        let originals: Vec<AlgebraElement> = (0..n)
            .map(|j| {
                if j < n1 {
                    a.original_basis_vector(j).reindex(|i| Some(i * db)).unwrap()
                } else {
                    b.original_basis_vector(j - n1)
                }
            })
            .collect();
        let p = direct.basis_change();
        let gens: Vec<AlgebraElement> = (0..n)
            .map(|i| {
                originals.iter().enumerate().fold(AlgebraElement::zero(), |acc, (j, x)| acc.add(&x.scale(&p[(j, i)])))
            })
            .collect();
        let images = (0..direct.dim())
            .map(|mask| {
                (0..n).filter(|i| mask >> i & 1 == 1).fold(tensor.one(), |acc, i| tensor.mul(&acc, &gens[i]))
            })
            .collect();
        Ok(Self { direct, tensor, images })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.direct.algebra().is_isomorphism(&self.tensor, &self.images)
    }
}

/// Left ideal of the even Clifford algebra generated by the bivector of
/// one isotropic plane.
#[derive(Clone, Debug)]
pub struct PlaneIdeal {
    pub plane: Subspace,
    /// `w1 w2` in even-subalgebra coordinates.
    pub generator: AlgebraElement,
    pub ideal: LeftIdeal,
    /// Index into [`IdealFamilyMap::idempotents`] of the central idempotent
    /// acting as the identity on the ideal.
    pub idempotent: Option<usize>,
    /// Dimension of the central factor `Z e` supporting the ideal (`Z` itself
    /// when no idempotent separates).
    pub support_dimension: usize,
}

impl PlaneIdeal {
    /// Rank of the ideal over its supporting central factor, when free.
    pub fn rank_over_support(&self) -> Option<usize> {
        (self.ideal.dimension % self.support_dimension == 0).then(|| self.ideal.dimension / self.support_dimension)
    }
}

#[derive(Clone, Debug)]
pub struct IdealFamilyMap {
    pub even: SubAlgebra,
    pub center_dimension: usize,
    pub center_split: bool,
    pub idempotents: Vec<AlgebraElement>,
    pub planes: Vec<PlaneIdeal>,
    /// Class label per plane from the isotropic-subspace classification.
    pub component_labels: Vec<usize>,
}

impl IdealFamilyMap {
    /// Number of distinct supporting idempotents hit by the planes.
    pub fn idempotent_classes(&self) -> usize {
        let mut hit: Vec<Option<usize>> = self.planes.iter().map(|p| p.idempotent).collect();
        hit.sort();
        hit.dedup();
        hit.len()
    }

    /// Whether the partition by idempotent coincides with the partition by
    /// isotropic-subspace class.
    pub fn partitions_agree(&self) -> bool {
        let n = self.planes.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (self.planes[i].idempotent == self.planes[j].idempotent)
                    == (self.component_labels[i] == self.component_labels[j])
            })
        })
    }
}

/// For a 4-variable form of rank at least 3 over `GF(p)`, sends each maximal
/// isotropic plane `W` to the left ideal `Cl_0 * w1 w2` and the central
/// idempotent supporting it.
pub fn ideal_family_map(q: &QuadForm) -> Result<IdealFamilyMap> {
    if q.dim() != 4 {
        return Err(Error::DimensionMismatch);
    }
    if q.rank() < 3 {
        return Err(Error::UnsupportedDegeneracy);
    }
    let planes = enumerate_max_isotropic(q, 2)?;
    let components = classify_components(q, &planes)?;
    let cl = build_clifford(q);
    let even = cl.even_subalgebra();
    let alg = &even.algebra;
    let center_dimension = alg.center().len();
    let decomposition = alg.central_idempotents();
    let separating = decomposition.idempotents.len() > 1;
    let mut out = Vec::with_capacity(planes.len());
    for w in &planes {
        let rows = w.basis_rows();
        let f = cl.mul(&cl.vector(&rows[0])?, &cl.vector(&rows[1])?);
        let f = even.restrict(&f).expect("bivector is even");
        let ideal = alg.left_ideal(&f)?;
        let idempotent = decomposition.idempotents.iter().position(|e| alg.mul(e, &f) == f);
        let support_dimension = match idempotent {
            Some(i) if separating => {
                let e = &decomposition.idempotents[i];
                let rows = alg.center().iter().map(|z| alg.mul(z, e).to_dense(alg.field(), alg.dim())).collect();
                Matrix::from_rows(alg.field(), rows)?.rank()
            }
            _ => center_dimension,
        };
        out.push(PlaneIdeal { plane: w.clone(), generator: f, ideal, idempotent, support_dimension });
    }
    Ok(IdealFamilyMap {
        center_dimension,
        center_split: decomposition.split,
        idempotents: decomposition.idempotents,
        planes: out,
        component_labels: components.labels(planes.len()),
        even,
    })
}

/// Dimension of `k^{1×n} ⊗_{M_n(k)} k^{n×1}`: the `n^2`-dimensional plain
/// tensor space modulo `(r E) ⊗ c - r ⊗ (E c)` over matrix units `E`.
pub fn morita_tensor_dim(n: usize) -> usize {
    let field = Field::Rational;
    let idx = |i: usize, j: usize| i * n + j;
    let mut rows = Vec::new();
    // Row unit r_i times E_kl is δ_ik r_l; E_kl times column unit c_j is δ_lj c_k.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut v = vec![field.zero(); n * n];
                    if i == k {
                        v[idx(l, j)] = &v[idx(l, j)] + &field.one();
                    }
                    if l == j {
                        v[idx(i, k)] = &v[idx(i, k)] - &field.one();
                    }
                    if v.iter().any(|x| !x.is_zero()) {
                        rows.push(v);
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return n * n;
    }
    n * n - Matrix::from_rows(field, rows).expect("rectangular").rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn original_relations_hold(q: &QuadForm) -> bool {
        let cl = build_clifford(q);
        let n = q.dim();
        let two = q.field().from_i64(2);
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (vi, vj) = (cl.original_basis_vector(i), cl.original_basis_vector(j));
                let anti = cl.mul(&vi, &vj).add(&cl.mul(&vj, &vi));
                anti == cl.algebra().one().scale(&(&two * &q.gram()[(i, j)]))
            })
        })
    }

    #[test]
    fn blade_signs() {
        assert!(!blade_sign(0b01, 0b10));
        assert!(blade_sign(0b10, 0b01));
        // e2 * e13 = -e1 e2 e3
        assert!(blade_sign(0b010, 0b101));
    }

    #[test]
    fn hyperbolic_clifford() {
        let f = Field::Rational;
        let cl = build_clifford(&QuadForm::hyperbolic(f));
        assert_eq!(cl.dim(), 4);
        let (a, b) = (cl.original_basis_vector(0), cl.original_basis_vector(1));
        assert!(cl.mul(&a, &a).is_zero());
        assert_eq!(cl.mul(&a, &b).add(&cl.mul(&b, &a)), cl.algebra().one().scale(&f.from_i64(2)));
        assert_eq!(cl.algebra().center().len(), 1);
        let r = cl.algebra().semisimplicity_report().unwrap();
        assert!(r.semisimple);
        assert_eq!(r.factor_dimensions, vec![4]);
        let even = cl.even_subalgebra();
        assert_eq!(even.algebra.dim(), 2);
        let r0 = even.algebra.semisimplicity_report().unwrap();
        assert_eq!(r0.factor_dimensions, vec![1, 1]);
    }

    #[test]
    fn rank_one_form() {
        let f = Field::Rational;
        let cl = build_clifford(&QuadForm::diagonal_i64(f, &[1]).unwrap());
        assert_eq!(cl.dim(), 2);
        let e = cl.generator(0);
        assert_eq!(cl.mul(&e, &e), cl.algebra().one());
        assert_eq!(cl.even_subalgebra().algebra.dim(), 1);
    }

    #[test]
    fn two_variable_even_part_is_quadratic_extension() {
        let f = gf(7);
        for c in 1..7 {
            let cl = build_clifford(&QuadForm::diagonal_i64(f, &[1, c]).unwrap());
            let even = cl.even_subalgebra();
            assert_eq!(even.algebra.center().len(), 2);
            let u = even.restrict(&AlgebraElement::basis(0b11, f)).unwrap();
            assert_eq!(even.algebra.mul(&u, &u), even.algebra.one().scale(&f.from_i64(-c)));
            // Splits exactly when -c is a square.
            let split = f.from_i64(-c).sqrt().is_some();
            assert_eq!(even.algebra.central_idempotents().split, split);
        }
    }

    #[test]
    fn slice_model_even_center_and_ideal() {
        let f = gf(7);
        let q = QuadForm::slice_model(f.from_i64(2)).unwrap();
        let cl = build_clifford(&q);
        assert_eq!(cl.dim(), 16);
        let even = cl.even_subalgebra();
        assert_eq!(even.algebra.center().len(), 2);
        let map = ideal_family_map(&q).unwrap();
        for p in &map.planes {
            assert_eq!(p.ideal.dimension, 2);
            assert_eq!(p.support_dimension, 1);
            assert_eq!(p.rank_over_support(), Some(2));
        }
        let r = even.algebra.semisimplicity_report().unwrap();
        for (e, d) in r.central_idempotents.iter().zip(&r.factor_dimensions) {
            assert_eq!(even.algebra.left_ideal(e).unwrap().dimension, *d);
        }
    }

    #[test]
    fn degenerate_slice_has_central_nilpotent() {
        let f = gf(11);
        let q = QuadForm::slice_model(f.zero()).unwrap();
        let even = build_clifford(&q).even_subalgebra();
        let r = even.algebra.semisimplicity_report().unwrap();
        assert!(!r.semisimple);
        let z = r.central_nilpotent.unwrap();
        assert!(even.algebra.mul(&z, &z).is_zero());
    }

    #[test]
    fn trace_criterion_refuses_small_characteristic() {
        let f = gf(3);
        let q = QuadForm::slice_model(f.zero()).unwrap();
        let even = build_clifford(&q).even_subalgebra();
        assert_eq!(even.algebra.semisimplicity_report().unwrap_err(), Error::TraceCriterionUnreliable);
    }

    #[test]
    fn split_and_merged_families_over_gf3() {
        let f = gf(3);
        let split = QuadForm::diagonal_i64(f, &[-1, 1]).unwrap().direct_sum(&QuadForm::hyperbolic(f)).unwrap();
        let map = ideal_family_map(&split).unwrap();
        assert_eq!(map.planes.len(), 8);
        assert_eq!(map.idempotents.len(), 2);
        assert_eq!(map.idempotent_classes(), 2);
        assert!(map.partitions_agree());
        for (i, a) in map.planes.iter().enumerate() {
            for b in &map.planes[i + 1..] {
                assert_ne!(a.ideal, b.ideal);
            }
        }
        let cone = QuadForm::slice_model(f.zero()).unwrap();
        let merged = ideal_family_map(&cone).unwrap();
        assert_eq!(merged.idempotents.len(), 1);
        assert_eq!(merged.idempotent_classes(), 1);
        assert!(merged.partitions_agree());
    }

    #[test]
    fn family_map_rejects_low_rank() {
        let f = gf(3);
        let q = QuadForm::diagonal_i64(f, &[1, 1, 0, 0]).unwrap();
        assert_eq!(ideal_family_map(&q).unwrap_err(), Error::UnsupportedDegeneracy);
    }

    #[test]
    fn tensor_identification_hyperbolic_with_slice() {
        let f = gf(7);
        let q2 = QuadForm::diagonal(f, &[f.from_i64(-1), f.from_i64(3)]).unwrap();
        let id = TensorIdentification::new(&QuadForm::hyperbolic(f), &q2).unwrap();
        assert!(id.is_isomorphism());
        assert_eq!(id.images[0], id.tensor.one());
    }

    #[test]
    fn even_part_of_hyperbolic_tensor_has_block_shape() {
        // Even elements of Cl(H) ⊗ B pair B0 with the even part of Cl(H)
        // and B1 with its odd part.
        let f = gf(5);
        let h = build_clifford(&QuadForm::hyperbolic(f));
        let b = build_clifford(&QuadForm::diagonal_i64(f, &[1, 2, 3]).unwrap());
        let t = graded_tensor(&h, &b).unwrap();
        let db = b.dim();
        for x in 0..t.dim() {
            if t.parity(x) == 0 {
                assert_eq!(h.algebra().parity(x / db), b.algebra().parity(x % db));
            }
        }
    }

    #[test]
    fn morita_dimensions() {
        for n in 1..=4 {
            assert_eq!(morita_tensor_dim(n), 1);
        }
    }

    fn small_form() -> impl Strategy<Value = (u64, Vec<i64>, usize)> {
        (prop::sample::select(vec![5u64, 7, 11]), prop::collection::vec(-3i64..=3, 10), 1usize..=4)
    }

    fn form_from(p: u64, entries: &[i64], n: usize) -> QuadForm {
        let f = gf(p);
        let mut k = 0;
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in i..n {
                m[(i, j)] = f.from_i64(entries[k]);
                m[(j, i)] = f.from_i64(entries[k]);
                k += 1;
            }
        }
        QuadForm::new(m).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn defining_relations_on_original_basis((p, e, n) in small_form()) {
            let q = form_from(p, &e, n);
            prop_assert!(original_relations_hold(&q));
            let cl = build_clifford(&q);
            prop_assert_eq!(cl.dim(), 1 << n);
            prop_assert_eq!(cl.even_subalgebra().algebra.dim(), 1 << (n - 1));
        }

        #[test]
        fn associativity_on_random_triples((p, e, n) in small_form(), picks in prop::collection::vec((0usize..16, -3i64..=3), 9)) {
            let q = form_from(p, &e, n);
            let cl = build_clifford(&q);
            let f = q.field();
            let dim = cl.dim();
            let elt = |k: usize| picks[3 * k..3 * k + 3].iter().fold(AlgebraElement::zero(), |acc, &(i, c)| {
                acc.add(&AlgebraElement::term(i % dim, f.from_i64(c)))
            });
            prop_assert!(cl.algebra().check_associative(&elt(0), &elt(1), &elt(2)));
        }

        #[test]
        fn tensor_matches_direct_sum((p, e, n) in small_form(), e2 in prop::collection::vec(-3i64..=3, 3)) {
            let q1 = form_from(p, &e, n.min(2));
            let q2 = form_from(p, &e2, 2);
            let id = TensorIdentification::new(&q1, &q2).unwrap();
            prop_assert!(id.is_isomorphism());
        }
    }
}
