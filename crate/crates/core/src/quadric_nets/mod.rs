//! Nets of quadrics in `P^5`: 6x6 symmetric matrices of linear forms in the
//! plane coordinates `a0, a1, a2`.

mod smoothness;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra_core::scalar::{parse_rational, rational_to_i64};
use crate::algebra_core::{det_linear_matrix, Field, Matrix, MultiPoly, Scalar};
use crate::error::{Error, Result};
use crate::quadratic_forms::QuadForm;

pub use smoothness::{projective_plane_points, smoothness_probe, ProbeVerdict};

pub const NET_SIZE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetOfQuadrics {
    field: Field,
    /// Row-major; entry `(i, j)` holds the coefficients of `a0, a1, a2`.
    entries: Vec<[Scalar; 3]>,
}

impl NetOfQuadrics {
    pub fn new(field: Field, rows: Vec<Vec<[Scalar; 3]>>) -> Result<Self> {
        if rows.len() != NET_SIZE || rows.iter().any(|r| r.len() != NET_SIZE) {
            return Err(Error::Shape(format!("net must be {NET_SIZE}x{NET_SIZE}")));
        }
        if rows.iter().flatten().flatten().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let entries: Vec<[Scalar; 3]> = rows.into_iter().flatten().collect();
        let net = Self { field, entries };
        for i in 0..NET_SIZE {
            for j in 0..i {
                if net.entry(i, j) != net.entry(j, i) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(net)
    }

    pub fn from_i64(field: Field, rows: &[[[i64; 3]; NET_SIZE]; NET_SIZE]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|e| e.map(|x| field.from_i64(x))).collect()).collect();
        Self::new(field, rows)
    }

    /// Three hyperbolic blocks `[[0, a_i], [a_i, 0]]`.
    pub fn block_b3(field: Field) -> Self {
        let mut rows = [[[0i64; 3]; NET_SIZE]; NET_SIZE];
        for k in 0..3 {
            rows[2 * k][2 * k + 1][k] = 1;
            rows[2 * k + 1][2 * k][k] = 1;
        }
        Self::from_i64(field, &rows).unwrap()
    }

    /// `diag(a0, a0, a1, a1, a2, a2)`.
    pub fn diagonal_pairs(field: Field) -> Self {
        let mut rows = [[[0i64; 3]; NET_SIZE]; NET_SIZE];
        for i in 0..NET_SIZE {
            rows[i][i][i / 2] = 1;
        }
        Self::from_i64(field, &rows).unwrap()
    }

    /// A uniformly random net over a finite field.
    pub fn random<R: Rng>(field: Field, rng: &mut R) -> Result<Self> {
        let Field::Prime(p) = field else {
            return Err(Error::InfiniteField);
        };
        let mut rows = vec![vec![[field.zero(), field.zero(), field.zero()]; NET_SIZE]; NET_SIZE];
        for i in 0..NET_SIZE {
            for j in i..NET_SIZE {
                let e = [0; 3].map(|_: i32| field.from_i64(rng.gen_range(0..p) as i64));
                rows[i][j] = e.clone();
                rows[j][i] = e;
            }
        }
        Self::new(field, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Scalar; 3] {
        &self.entries[i * NET_SIZE + j]
    }

    /// The Gram matrix of the `k`-th basis quadric (coefficient of `a_k`).
    pub fn quadric(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, NET_SIZE, NET_SIZE);
        for i in 0..NET_SIZE {
            for j in 0..NET_SIZE {
                m[(i, j)] = self.entry(i, j)[k].clone();
            }
        }
        m
    }

    pub fn forms(&self) -> Vec<Vec<MultiPoly>> {
        (0..NET_SIZE)
            .map(|i| (0..NET_SIZE).map(|j| MultiPoly::linear(self.entry(i, j))).collect())
            .collect()
    }

    /// Reduction of a rational net into `GF(p)`.
    pub fn to_field(&self, field: Field) -> Result<Self> {
        if field == self.field {
            return Ok(self.clone());
        }
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let mut out = [field.zero(), field.zero(), field.zero()];
                for (o, c) in out.iter_mut().zip(e) {
                    *o = field.from_rational(c.as_rational().ok_or(Error::FieldMismatch)?)?;
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { field, entries })
    }

    /// Parses `{"field": "Q" | "GF(p)", "net": 6x6x3}` with integer or
    /// `"a/b"` string entries.
    pub fn from_json(value: &Value) -> Result<Self> {
        let field_text = value
            .get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing \"field\"".into()))?;
        let field = Field::parse(field_text)?;
        let rows = value
            .get("net")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"net\"".into()))?;
        let parse_entry = |v: &Value| -> Result<Scalar> {
            let text = match v {
                Value::Number(n) => n.to_string(),
                Value::String(s) => s.clone(),
                _ => return Err(Error::Parse(format!("bad coefficient {v}"))),
            };
            field.from_rational(&parse_rational(&text)?)
        };
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("net rows must be arrays".into()))?
                    .iter()
                    .map(|e| {
                        let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| {
                            Error::Parse("net entries must be 3-element arrays".into())
                        })?;
                        Ok([parse_entry(&e[0])?, parse_entry(&e[1])?, parse_entry(&e[2])?])
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, rows)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn to_json(&self) -> Value {
        let coeff = |c: &Scalar| match c {
            Scalar::Rat(r) => rational_to_i64(r).map_or_else(|| json!(r.to_string()), |n| json!(n)),
            Scalar::Fp(x) => json!(x.value()),
            other => json!(other.to_string()),
        };
        let net: Vec<Vec<Value>> = (0..NET_SIZE)
            .map(|i| (0..NET_SIZE).map(|j| json!(self.entry(i, j).iter().map(coeff).collect::<Vec<_>>())).collect())
            .collect();
        json!({ "field": self.field.to_string(), "net": net })
    }
}

impl fmt::Display for NetOfQuadrics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.forms() {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The degree-6 discriminant `det S(a)` (zero for a degenerate net).
pub fn discriminant(net: &NetOfQuadrics) -> MultiPoly {
    det_linear_matrix(&net.forms()).expect("a net is a symmetric matrix of linear forms")
}

fn check_point(net: &NetOfQuadrics, a: &[Scalar; 3]) -> Result<()> {
    if a.iter().any(|x| x.field() != net.field) {
        return Err(Error::FieldMismatch);
    }
    if a.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroPoint);
    }
    Ok(())
}

/// The quadric `S(a) = a0 Q0 + a1 Q1 + a2 Q2`.
pub fn fiber_form(net: &NetOfQuadrics, a: &[Scalar; 3]) -> Result<QuadForm> {
    check_point(net, a)?;
    let mut m = Matrix::zeros(net.field, NET_SIZE, NET_SIZE);
    for i in 0..NET_SIZE {
        for j in 0..NET_SIZE {
            m[(i, j)] = net.entry(i, j).iter().zip(a).fold(net.field.zero(), |acc, (c, x)| acc + c * x);
        }
    }
    QuadForm::new(m)
}

/// A point of the base locus, scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasePoint {
    coords: Vec<Scalar>,
}

impl BasePoint {
    pub fn new(net: &NetOfQuadrics, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != NET_SIZE {
            return Err(Error::DimensionMismatch);
        }
        if coords.iter().any(|x| x.field() != net.field) {
            return Err(Error::FieldMismatch);
        }
        let lead = coords.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroPoint)?.inv().unwrap();
        let coords: Vec<Scalar> = coords.iter().map(|x| x * &lead).collect();
        if (0..3).any(|k| !net.quadric(k).pair(&coords, &coords).is_zero()) {
            return Err(Error::NotOnBaseLocus);
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    fn leading_index(&self) -> usize {
        self.coords.iter().position(|x| !x.is_zero()).unwrap()
    }
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", c.join(","))
    }
}

/// All base points over `GF(p)`, scanning normalized points of `P^5` with
/// the leading 1 leftmost first and the last coordinate varying fastest.
pub fn find_base_points(net: &NetOfQuadrics) -> Result<Vec<BasePoint>> {
    let Field::Prime(p) = net.field else {
        return Err(Error::InfiniteField);
    };
    let quadrics: Vec<Vec<u64>> = (0..3)
        .map(|k| net.entries.iter().map(|e| e[k].as_fp().unwrap().value()).collect())
        .collect();
    let on_all = |x: &[u64; NET_SIZE]| {
        quadrics.iter().all(|q| {
            let mut total = 0u64;
            for i in 0..NET_SIZE {
                if x[i] == 0 {
                    continue;
                }
                let row = (0..NET_SIZE).fold(0u64, |acc, j| (acc + q[i * NET_SIZE + j] * x[j]) % p);
                total = (total + x[i] * row) % p;
            }
            total == 0
        })
    };
    let mut found = Vec::new();
    for lead in 0..NET_SIZE {
        let free = NET_SIZE - lead - 1;
        let count = p.pow(free as u32);
        for code in 0..count {
            let mut x = [0u64; NET_SIZE];
            x[lead] = 1;
            let mut c = code;
            for slot in (lead + 1..NET_SIZE).rev() {
                x[slot] = c % p;
                c /= p;
            }
            if on_all(&x) {
                let coords = x.iter().map(|&v| net.field.from_i64(v as i64)).collect();
                found.push(BasePoint { coords });
            }
        }
    }
    Ok(found)
}

/// Output of [`reduce_at_point`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Restriction of the fiber to the complement.
    pub form: QuadForm,
    /// Rows span a 4-dimensional complement of `x` in the tangent hyperplane.
    pub complement: Matrix,
}

fn tangent_data(net: &NetOfQuadrics, x: &BasePoint, a: &[Scalar; 3]) -> Result<(QuadForm, Matrix, usize)> {
    if x.coords.iter().any(|c| c.field() != net.field) {
        return Err(Error::FieldMismatch);
    }
    let fiber = fiber_form(net, a)?;
    let checked = BasePoint::new(net, x.coords.clone())?;
    let v = fiber.gram().left_apply(&checked.coords);
    if v.iter().all(Scalar::is_zero) {
        return Err(Error::VertexOfFiber);
    }
    let tangent = Matrix::from_rows(net.field, vec![v])?.nullspace();
    Ok((fiber, tangent, checked.leading_index()))
}

/// Projects the fiber at `a` away from the base point `x`: restricts it to
/// the echelon complement of `x` inside the tangent hyperplane `x S(a)^⊥`.
pub fn reduce_at_point(net: &NetOfQuadrics, x: &BasePoint, a: &[Scalar; 3]) -> Result<Reduction> {
    let (fiber, tangent, lead) = tangent_data(net, x, a)?;
    let keep: Vec<usize> = (0..tangent.rows())
        .filter(|&r| tangent.row(r).iter().position(|c| !c.is_zero()) != Some(lead))
        .collect();
    let cols: Vec<usize> = (0..NET_SIZE).collect();
    let complement = tangent.select(&keep, &cols);
    restrict(&fiber, complement)
}

fn restrict(fiber: &QuadForm, complement: Matrix) -> Result<Reduction> {
    let gram = complement.mul(fiber.gram())?.mul(&complement.transpose())?;
    Ok(Reduction { form: QuadForm::new(gram)?, complement })
}

/// As [`reduce_at_point`] but with a random complement: a random invertible
/// mix of the echelon complement plus random multiples of `x`.
pub fn reduce_at_point_randomized(
    net: &NetOfQuadrics,
    x: &BasePoint,
    a: &[Scalar; 3],
    seed: u64,
) -> Result<Reduction> {
    let base = reduce_at_point(net, x, a)?;
    let Field::Prime(p) = net.field else {
        return Err(Error::InfiniteField);
    };
    let f = net.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| f.from_i64(rng.gen_range(0..p) as i64);
    let k = base.complement.rows();
    let mix = loop {
        let rows = (0..k).map(|_| (0..k).map(|_| draw(&mut rng)).collect()).collect();
        let m = Matrix::from_rows(f, rows)?;
        if m.rank() == k {
            break m;
        }
    };
    let mut complement = mix.mul(&base.complement)?;
    for r in 0..k {
        let lambda = draw(&mut rng);
        for c in 0..NET_SIZE {
            complement[(r, c)] = &complement[(r, c)] + &(&lambda * &x.coords[c]);
        }
    }
    let fiber = fiber_form(net, a)?;
    restrict(&fiber, complement)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub point: [u64; 3],
    pub on_curve: bool,
    pub fiber_rank: usize,
    /// `None` when `x` is the vertex of this fiber.
    pub reduced_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HistogramEntry {
    pub on_curve: bool,
    pub fiber_rank: usize,
    pub reduced_rank: Option<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub rows: Vec<ProfileRow>,
    pub histogram: Vec<HistogramEntry>,
}

impl RankProfile {
    /// Every non-vertex row loses exactly 2 in rank under reduction.
    pub fn rank_drop_holds(&self) -> bool {
        self.rows.iter().all(|r| r.reduced_rank.map_or(true, |k| r.fiber_rank == k + 2))
    }

    /// Off the curve: fiber rank 6 and reduced rank 4. On the curve away
    /// from vertices: fiber rank 5 and reduced rank 3.
    pub fn is_generic(&self) -> bool {
        self.rows.iter().all(|r| match (r.on_curve, r.reduced_rank) {
            (false, k) => r.fiber_rank == 6 && k == Some(4),
            (true, None) => true,
            (true, Some(k)) => r.fiber_rank == 5 && k == 3,
        })
    }
}

/// Fiber and reduced ranks at every point of the plane over `GF(p)`.
pub fn rank_profile(net: &NetOfQuadrics, x: &BasePoint) -> Result<RankProfile> {
    let Field::Prime(p) = net.field else {
        return Err(Error::InfiniteField);
    };
    BasePoint::new(net, x.coords.clone())?;
    let mut rows = Vec::new();
    let mut counts: BTreeMap<(bool, usize, Option<usize>), usize> = BTreeMap::new();
    for pt in projective_plane_points(p) {
        let a = pt.map(|v| net.field.from_i64(v as i64));
        let fiber = fiber_form(net, &a)?;
        let fiber_rank = fiber.rank();
        let reduced_rank = match reduce_at_point(net, x, &a) {
            Ok(r) => Some(r.form.rank()),
            Err(Error::VertexOfFiber) => None,
            Err(e) => return Err(e),
        };
        let on_curve = fiber_rank < NET_SIZE;
        *counts.entry((on_curve, fiber_rank, reduced_rank)).or_default() += 1;
        rows.push(ProfileRow { point: pt, on_curve, fiber_rank, reduced_rank });
    }
    let histogram = counts
        .into_iter()
        .map(|((on_curve, fiber_rank, reduced_rank), count)| HistogramEntry { on_curve, fiber_rank, reduced_rank, count })
        .collect();
    Ok(RankProfile { rows, histogram })
}

/// `2^{g-1} (2^g + 1)`.
pub fn even_theta_count(g: u32) -> BigInt {
    let two_g = BigInt::one() << g;
    (&two_g * &two_g + &two_g) / 2
}

/// `2^{g-1} (2^g - 1)`.
pub fn odd_theta_count(g: u32) -> BigInt {
    let two_g = BigInt::one() << g;
    (&two_g * &two_g - &two_g) / 2
}

/// Arithmetic genus `(d-1)(d-2)/2` of a smooth plane curve of degree `d`.
pub fn plane_curve_genus(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::NonPositiveDegree);
    }
    Ok((d - 1) * (d.saturating_sub(2)) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn pt(f: Field, a: [i64; 3]) -> [Scalar; 3] {
        a.map(|x| f.from_i64(x))
    }

    fn e1(net: &NetOfQuadrics) -> BasePoint {
        let f = net.field();
        BasePoint::new(net, (0..6).map(|i| f.from_i64((i == 0) as i64)).collect()).unwrap()
    }

    #[test]
    fn discriminants_of_block_nets() {
        let f = Field::Rational;
        let expect = |c: i64| MultiPoly::monomial(f.from_i64(c), [2, 2, 2]).unwrap();
        assert_eq!(discriminant(&NetOfQuadrics::block_b3(f)), expect(-1));
        assert_eq!(discriminant(&NetOfQuadrics::diagonal_pairs(f)), expect(1));
    }

    #[test]
    fn b3_fibers_and_reductions() {
        let f = Field::Rational;
        let net = NetOfQuadrics::block_b3(f);
        assert_eq!(fiber_form(&net, &pt(f, [1, 1, 1])).unwrap().rank(), 6);
        assert_eq!(fiber_form(&net, &pt(f, [0, 1, 1])).unwrap().rank(), 4);
        assert_eq!(fiber_form(&net, &pt(f, [0, 0, 0])), Err(Error::ZeroPoint));
        let x = e1(&net);
        assert_eq!(reduce_at_point(&net, &x, &pt(f, [1, 1, 1])).unwrap().form.rank(), 4);
        assert_eq!(reduce_at_point(&net, &x, &pt(f, [0, 1, 1])), Err(Error::VertexOfFiber));
        assert_eq!(reduce_at_point(&net, &x, &pt(f, [1, 0, 1])).unwrap().form.rank(), 2);
    }

    #[test]
    fn base_point_validation() {
        let f = Field::Rational;
        let net = NetOfQuadrics::diagonal_pairs(f);
        let ones = vec![f.one(); 6];
        assert_eq!(BasePoint::new(&net, ones), Err(Error::NotOnBaseLocus));
        assert_eq!(BasePoint::new(&net, vec![f.zero(); 6]), Err(Error::ZeroPoint));
    }

    #[test]
    fn b3_base_points_over_gf3() {
        let f = gf(3);
        let net = NetOfQuadrics::block_b3(f);
        let points = find_base_points(&net).unwrap();
        assert_eq!(points[0], e1(&net));
        for x in &points {
            assert!(BasePoint::new(&net, x.coords().to_vec()).is_ok());
        }
        assert_eq!(find_base_points(&NetOfQuadrics::block_b3(Field::Rational)), Err(Error::InfiniteField));
    }

    #[test]
    fn b3_profile_detects_non_generic_net() {
        let f = gf(3);
        let net = NetOfQuadrics::block_b3(f);
        let profile = rank_profile(&net, &e1(&net)).unwrap();
        assert_eq!(profile.rows.len(), 13);
        assert!(profile.rows.iter().any(|r| r.on_curve && r.fiber_rank < 5));
        assert!(!profile.is_generic());
        assert!(profile.rank_drop_holds());
    }

    #[test]
    fn randomized_complement_keeps_rank() {
        let f = gf(7);
        let net = NetOfQuadrics::block_b3(f);
        let x = e1(&net);
        for a in [[1, 1, 1], [1, 0, 1], [2, 3, 5]] {
            let a = pt(f, a);
            let det = reduce_at_point(&net, &x, &a).unwrap();
            for seed in 0..4 {
                let r = reduce_at_point_randomized(&net, &x, &a, seed).unwrap();
                assert_eq!(r.form.rank(), det.form.rank());
            }
        }
    }

    #[test]
    fn json_round_trip_and_reduction() {
        let text = r#"{"field": "Q", "net": [
            [[0,0,0],[1,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0]],
            [[1,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0]],
            [[0,0,0],[0,0,0],[0,0,0],[0,"1/2",0],[0,0,0],[0,0,0]],
            [[0,0,0],[0,0,0],[0,"1/2",0],[0,0,0],[0,0,0],[0,0,0]],
            [[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,1]],
            [[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,1],[0,0,0]]]}"#;
        let net = NetOfQuadrics::from_json_str(text).unwrap();
        assert_eq!(NetOfQuadrics::from_json(&net.to_json()).unwrap(), net);
        let mod5 = net.to_field(gf(5)).unwrap();
        assert_eq!(mod5.entry(2, 3)[1], gf(5).from_i64(3));
        assert_eq!(net.to_field(gf(3)).unwrap().entry(2, 3)[1], gf(3).from_i64(2));
        let bad = text.replace("[0,\"1/2\",0],[0,0,0],[0,0,0],[0,0,0]]", "[0,\"1/3\",0],[0,0,0],[0,0,0],[0,0,0]]");
        assert_eq!(NetOfQuadrics::from_json_str(&bad), Err(Error::NotSymmetric));
        assert!(matches!(NetOfQuadrics::from_json_str("{}"), Err(Error::Parse(_))));
    }

    #[test]
    fn discriminant_commutes_with_evaluation() {
        let f = gf(11);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let net = NetOfQuadrics::random(f, &mut rng).unwrap();
        let disc = discriminant(&net);
        for _ in 0..20 {
            let a = [0; 3].map(|_: i32| f.from_i64(rng.gen_range(0..11)));
            if a.iter().all(Scalar::is_zero) {
                continue;
            }
            let det = fiber_form(&net, &a).unwrap().gram().determinant();
            assert_eq!(disc.evaluate(&a).unwrap(), det);
        }
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(even_theta_count(10), BigInt::from(524800));
        assert_eq!(even_theta_count(1), BigInt::from(3));
        assert_eq!(even_theta_count(0), BigInt::from(1));
        for g in 0..=12 {
            assert_eq!(even_theta_count(g) + odd_theta_count(g), BigInt::one() << (2 * g));
        }
        assert_eq!(plane_curve_genus(6), Ok(10));
        assert_eq!(plane_curve_genus(1), Ok(0));
        assert_eq!(plane_curve_genus(2), Ok(0));
        assert_eq!(plane_curve_genus(0), Err(Error::NonPositiveDegree));
    }
}
