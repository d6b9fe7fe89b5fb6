//! Exact computations for nets of quadrics in `P^5`, their Clifford and even
//! Clifford algebras, and the Chern-class bookkeeping of the resulting
//! Azumaya algebras on K3 surfaces.
//!
//! Every routine is exact: rationals, odd prime fields `GF(p)` and the
//! rational function field `Q(s)`. Finite-field routines enumerate
//! exhaustively, so small cases can be checked by brute force.

pub mod algebra_core;
pub mod cli;
pub mod clifford;
pub mod error;
pub mod k3_chern;
pub mod quadratic_forms;
pub mod quadric_nets;

pub use error::{Error, Result};
