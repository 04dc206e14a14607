use thiserror::Error;

/// Errors surfaced by constructors, parsers and verification entry points.
///
/// Operations that take elements subject to invariants (tracelessness,
/// Hermiticity, subalgebra support, sign bookkeeping) report the violated
/// invariant by name so the CLI can echo it verbatim.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("element is not an eigenvector of the given Cartan element")]
    NotEigenvector,
    #[error("sign mismatch: {0}")]
    SignMismatch(String),
    #[error("unknown algebra `{0}` (expected one of g2, f4, e6, e7, e8)")]
    UnknownAlgebra(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
