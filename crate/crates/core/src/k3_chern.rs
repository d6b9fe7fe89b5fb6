//! Riemann-Roch and Chern-class bookkeeping on K3 surfaces and the plane.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra_core::scalar::rational_to_i64;
use crate::algebra_core::IntPoly;
use crate::error::{Error, Result};

/// Numerical invariants of a K3 surface. The Todd class is `1 + td2 * pt`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct K3Constants {
    pub chi_top: i64,
    pub chi_o: i64,
    pub td2: i64,
}

pub const K3: K3Constants = K3Constants { chi_top: 24, chi_o: 2, td2: 2 };

/// Rank, `c1 = m h` and `c2` of a sheaf on a K3 surface polarized by `h`
/// with `h^2 = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct K3ChernData {
    pub rho: i64,
    pub m: i64,
    pub c2: i64,
    pub d: i64,
}

impl K3ChernData {
    pub fn new(rho: i64, m: i64, c2: i64, d: i64) -> Result<Self> {
        if rho < 1 {
            return Err(Error::InconsistentChern);
        }
        if d <= 0 || d % 2 != 0 {
            return Err(Error::InconsistentPolarization);
        }
        Ok(Self { rho, m, c2, d })
    }

    /// An Azumaya algebra is self-dual, so its first Chern class vanishes.
    pub fn azumaya(rho: i64, c2: i64, d: i64) -> Result<Self> {
        Self::new(rho, 0, c2, d)
    }

    pub fn is_azumaya_compatible(&self) -> bool {
        self.m == 0
    }
}

/// `chi(E(n)) = td2 * rho + ch2(E(n))`, with
/// `ch2(E(n)) = m^2 d / 2 - c2 + n m d + rho n^2 d / 2`.
pub fn chi_twisted_k3(data: &K3ChernData, n: i64) -> i64 {
    let K3ChernData { rho, m, c2, d } = *data;
    // d is even, so both halves are exact.
    K3.td2 * rho + m * m * (d / 2) - c2 + n * m * d + rho * n * n * (d / 2)
}

/// Recovers `c2` of an Azumaya algebra from `chi(A(n))` given as a
/// polynomial in `n` (lowest coefficient first).
pub fn solve_c2_from_hilbert(rho: i64, d: i64, observed: &IntPoly) -> Result<i64> {
    K3ChernData::azumaya(rho, 0, d)?;
    let coeff = |i: usize| observed.coeff(i).to_i64().ok_or(Error::InconsistentPolarization);
    let degree_ok = observed.coeffs().len() <= 3;
    if !degree_ok || coeff(2)? != rho * d / 2 || coeff(1)? != 0 {
        return Err(Error::InconsistentPolarization);
    }
    Ok(K3.td2 * rho - coeff(0)?)
}

/// `2 r^2 - 2`: simple algebras have `h0 = h2 = 1`, hence `chi <= 2`.
pub fn simple_c2_lower_bound(r: i64) -> i64 {
    2 * r * r - 2
}

/// Cohomology forced by simplicity and Serre duality: `h0 = h2 = 1` and
/// `h1 = 2 - chi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityTable {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

pub const SIMPLICITY_NOTE: &str = "assumes simplicity + Serre duality";

pub fn simplicity_consequences(chi: i64) -> SimplicityTable {
    SimplicityTable { h0: 1, h1: 2 - chi, h2: 1 }
}

/// Chern character `rank + c1 H + ch2 H^2` on the projective plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P2ChernData {
    pub rank: i64,
    pub c1: i64,
    #[serde(serialize_with = "serialize_rational")]
    pub ch2: BigRational,
}

fn serialize_rational<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl P2ChernData {
    pub fn new(rank: i64, c1: i64, ch2: BigRational) -> Self {
        Self { rank, c1, ch2 }
    }

    pub fn zero() -> Self {
        Self::new(0, 0, BigRational::zero())
    }

    /// `O(k)`, with `ch = e^{kH}`.
    pub fn line_bundle(k: i64) -> Self {
        Self::new(1, k, rat(k * k, 2))
    }

    /// `Omega^1`, from `0 -> Omega^1 -> O(-1)^3 -> O -> 0`.
    pub fn cotangent() -> Self {
        Self::line_bundle(-1).scale(3).sub(&Self::line_bundle(0))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.rank + o.rank, self.c1 + o.c1, &self.ch2 + &o.ch2)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.rank - o.rank, self.c1 - o.c1, &self.ch2 - &o.ch2)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.rank * k, self.c1 * k, &self.ch2 * BigInt::from(k))
    }

    pub fn tensor(&self, o: &Self) -> Self {
        let ch2 = BigRational::from(BigInt::from(self.rank)) * &o.ch2
            + BigRational::from(BigInt::from(o.rank)) * &self.ch2
            + BigRational::from(BigInt::from(self.c1 * o.c1));
        Self::new(self.rank * o.rank, self.rank * o.c1 + o.rank * self.c1, ch2)
    }

    pub fn twist(&self, k: i64) -> Self {
        self.tensor(&Self::line_bundle(k))
    }

    /// Second Adams operation: multiplies the degree-`i` part by `2^i`.
    pub fn adams2(&self) -> Self {
        Self::new(self.rank, 2 * self.c1, &self.ch2 * BigInt::from(4))
    }

    /// `ch(Λ^2 E) = (ch(E)^2 - psi^2 ch(E)) / 2`.
    pub fn exterior_square(&self) -> Self {
        let d = self.tensor(self).sub(&self.adams2());
        Self::new(d.rank / 2, d.c1 / 2, d.ch2 / BigInt::from(2))
    }

    /// The determinant line bundle.
    pub fn determinant(&self) -> Self {
        Self::line_bundle(self.c1)
    }
}

impl fmt::Display for P2ChernData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rank {}, c1 {}, ch2 {})", self.rank, self.c1, self.ch2)
    }
}

/// `chi = ch2 + (3/2) c1 + rank`; the Todd class of the plane is
/// `1 + (3/2) H + H^2`.
pub fn chi_bundle_p2(data: &P2ChernData) -> Result<i64> {
    let chi = &data.ch2 + rat(3 * data.c1, 2) + BigRational::from(BigInt::from(data.rank));
    rational_to_i64(&chi).ok_or(Error::InconsistentChern)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiComponent {
    pub name: &'static str,
    pub chern: P2ChernData,
    pub chi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCliffordChi {
    pub components: Vec<ChiComponent>,
    pub total_rank: i64,
    pub total_chi: i64,
    /// `c2 = 2 rho - chi` for the rank-4 algebra.
    pub c2: i64,
    /// Whether the Adams-operation formula for `Λ^2 V` agrees with the
    /// splitting computation.
    pub exterior_square_cross_check: bool,
}

/// Euler characteristic of `O + Λ^2 V (-1) + Λ^4 V (-2)` on the plane for
/// `V = Omega^1(1) + O^2`.
pub fn chi_even_clifford_p2() -> Result<EvenCliffordChi> {
    let a = P2ChernData::cotangent().twist(1);
    let o = P2ChernData::line_bundle(0);
    let v = a.add(&o.scale(2));
    // Λ^2(A + O^2) = Λ^2 A + A^2 + O and Λ^4(A + O^2) = det A.
    let wedge2 = a.determinant().add(&a.scale(2)).add(&o);
    let wedge4 = a.determinant();
    let cross_check = v.exterior_square() == wedge2;
    let components = [("O", o), ("wedge2(V)(-1)", wedge2.twist(-1)), ("wedge4(V)(-2)", wedge4.twist(-2))]
        .into_iter()
        .map(|(name, chern)| Ok(ChiComponent { name, chi: chi_bundle_p2(&chern)?, chern }))
        .collect::<Result<Vec<_>>>()?;
    let total_rank: i64 = components.iter().map(|c| c.chern.rank).sum();
    let total_chi: i64 = components.iter().map(|c| c.chi).sum();
    // The algebra has rank rho = total_rank / 2 as a sheaf over the K3 double cover.
    let rho = total_rank / 2;
    Ok(EvenCliffordChi {
        components,
        total_rank,
        total_chi,
        c2: K3.td2 * rho - total_chi,
        exterior_square_cross_check: cross_check,
    })
}

/// Ranks and degrees of a subbundle `F` and quotient `Q` along a curve `C`,
/// for an algebra of degree `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ElemTransformData {
    pub f0: i64,
    pub f1: i64,
    pub q0: i64,
    pub q1: i64,
    pub csq: i64,
    pub r: i64,
    pub v1: i64,
}

impl ElemTransformData {
    pub fn new(f0: i64, f1: i64, q0: i64, q1: i64, csq: i64, r: i64, v1: i64) -> Result<Self> {
        if f0 < 1 || q0 < 1 || f0 + q0 != r || v1 != f1 + q1 {
            return Err(Error::InconsistentTransform);
        }
        Ok(Self { f0, f1, q0, q1, csq, r, v1 })
    }

    /// Derives `r` and `v1` from the other fields.
    pub fn from_parts(f0: i64, f1: i64, q0: i64, q1: i64, csq: i64) -> Result<Self> {
        Self::new(f0, f1, q0, q1, csq, f0 + q0, f1 + q1)
    }

    /// Exchanges the roles of `F` and `Q`.
    pub fn swapped(&self) -> Self {
        Self { f0: self.q0, f1: self.q1, q0: self.f0, q1: self.f1, ..*self }
    }
}

pub const ELEM_TRANSFORM_CAVEAT: &str =
    "evaluated exactly as printed in its source, which warns that the formula contains a minor error";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElemTransformReport {
    /// `-f0 q0 C^2 + 2 (f0 q1 - f1 q0)`.
    pub delta_c2: i64,
    /// `-(r - 1) C^2 + 2 (v1 - f1 r)`, defined when `f0 = 1`.
    pub expanded: Option<i64>,
    pub agrees: Option<bool>,
    pub caveat: &'static str,
}

pub fn delta_c2_elementary_transform(data: &ElemTransformData) -> Result<ElemTransformReport> {
    let ElemTransformData { f0, f1, q0, q1, csq, r, v1 } = *data;
    ElemTransformData::new(f0, f1, q0, q1, csq, r, v1)?;
    let delta_c2 = -f0 * q0 * csq + 2 * (f0 * q1 - f1 * q0);
    let expanded = (f0 == 1).then(|| -(r - 1) * csq + 2 * (v1 - f1 * r));
    Ok(ElemTransformReport {
        delta_c2,
        expanded,
        agrees: expanded.map(|e| e == delta_c2),
        caveat: ELEM_TRANSFORM_CAVEAT,
    })
}

/// Whether `2r` divides `c2_a - c2_b`.
pub fn gerbe_divisibility_check(r: i64, c2_a: i64, c2_b: i64) -> Result<bool> {
    if r < 1 {
        return Err(Error::NonPositiveDegree);
    }
    Ok((c2_a - c2_b) % (2 * r) == 0)
}

/// `c2 < lower_bound + 2r` certifies minimality, given divisibility by `2r`
/// of differences within the class.
pub fn minimality_check(r: i64, c2: i64, lower_bound: i64) -> Result<bool> {
    if r < 1 {
        return Err(Error::NonPositiveDegree);
    }
    if c2 < lower_bound {
        return Err(Error::BelowBound);
    }
    Ok(c2 < lower_bound + 2 * r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerSeveriInvariants {
    pub chi_top: i64,
    pub chi_o: i64,
    pub k_cubed: i64,
}

/// Invariants of the Brauer-Severi threefold of a degree-2 algebra over a
/// surface `M`: `(2 chi_top(M), chi(O_M), c2)`.
pub fn brauer_severi_invariants(chi_top_m: i64, chi_o_m: i64, c2: i64) -> BrauerSeveriInvariants {
    BrauerSeveriInvariants { chi_top: 2 * chi_top_m, chi_o: chi_o_m, k_cubed: c2 }
}
