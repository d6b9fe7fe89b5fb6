//! Exact scalars, polynomials in the plane coordinates, truncated power
//! series and dense linear algebra.

pub mod linalg;
pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod series;

pub use linalg::Matrix;
pub use poly::{det_linear_matrix, MultiPoly};
pub use ratfn::{RationalFunction, UniPoly};
pub use scalar::{Field, Fp, Scalar};
pub use series::{expand_rational_series, IntPoly, PowerSeries};

/// Substitutes `t -> -t` and multiplies: the Koszul-duality check
/// `H(t) * H_dual(-t)`.
pub fn koszul_pairing(h: &PowerSeries, dual: &PowerSeries) -> crate::Result<PowerSeries> {
    h.product(&dual.substitute_neg())
}
