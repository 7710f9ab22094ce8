//! Exact-arithmetic construction and verification of braid group
//! representations arising from the recoupling of three identical spin
//! representations of the quantum algebra U_q(sl2).
//!
//! The library builds, over an exactly evaluated scalar field in
//! u = q^(1/2):
//! - [`qseries`]: q-Pochhammer symbols, q-numbers, terminating basic
//!   hypergeometric series and q-Racah polynomials;
//! - [`matrix`]: dense exact linear algebra (inverse, Kronecker product,
//!   kernels, spectral idempotents);
//! - [`uqsl2`]: spin representations, comultiplication, Casimirs and
//!   tensor-cube decomposition data;
//! - [`braided`]: the universal R-matrix in representation, braided
//!   R-matrices and Yang-Baxter checks;
//! - [`centralizer`]: intermediate Casimirs on the cube, their quadratic
//!   algebra relations and the multiplicity-space restrictions;
//! - [`model`]: the (a, N) matrix model with the braid matrices S1, S2,
//!   the q-Racah transition matrix P and all identities relating them;
//! - [`suite`]: a deterministic verification grid with JSON reports.
//!
//! Every identity is checked with exact zero residual in exact mode, or
//! against a 1e-9 relative tolerance in binary64 mode.

pub mod braided;
pub mod centralizer;
pub mod error;
pub mod halfint;
pub mod matrix;
pub mod model;
pub mod qseries;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod uqsl2;

pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use matrix::QMatrix;
pub use model::ModelRep;
pub use report::{Residual, VerificationReport};
pub use scalar::{Mode, QPoint, QScalar};
pub use suite::{run_suite, SuiteConfig, SuiteReport};
pub use uqsl2::SpinRep;
