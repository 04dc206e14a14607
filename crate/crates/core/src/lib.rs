//! Exact constructions of the five exceptional Lie algebras as block matrices
//! built from split octonions and 3x3 Jordan algebras.
//!
//! Everything is computed over the number field Q(i, sqrt2, sqrt3) with exact
//! rational coordinates, so every algebraic identity (multiplication tables,
//! commutation relations, Jacobi identities, root and weight data) is checked
//! by exact equality rather than floating-point tolerance.
//!
//! Layout:
//! * [`scalar`] - the base field.
//! * [`linalg`] - small exact vectors/matrices and Gaussian elimination.
//! * [`octonion`] - split octonions in Zorn vector-matrix form, with the
//!   subalgebra tags used by the smaller algebras.
//! * [`jordan`] - 3x3 Hermitian Jordan algebras and Jordan-pair operators.
//! * [`g2`] - derivations of the octonions as 4x4 Zorn-type matrices.
//! * [`exc`] - the unified block construction of f4, e6 and e7.
//! * [`tits`] - the derivation/tensor construction of f4 and the exact
//!   comparison map onto the block model.
//! * [`e8`] - the 248-dimensional algebra with left-multiplication operators.
//! * [`roots`] - root vectors, weights and audit tables.
//! * [`algebra`] - a uniform basis/bracket interface over all five algebras.
//! * [`structure`] - structure-constant tables with exact closure checks.
//! * [`verify`] - the scan suites behind the `verify` CLI subcommand.
//! * [`schema`] - JSON encodings of elements, tables and reports.

pub mod algebra;
pub mod e8;
pub mod error;
pub mod exc;
pub mod g2;
pub mod jordan;
pub mod linalg;
pub mod octonion;
pub mod roots;
pub mod scalar;
pub mod schema;
pub mod structure;
pub mod tits;
pub mod verify;

pub use error::Error;
pub use scalar::{ExactScalar, Rat};
