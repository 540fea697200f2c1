//! Error type shared by every module of the engine.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input")]
    ZeroInput,
    #[error("not positively homogeneous in the fiber variables")]
    NotHomogeneous,
    #[error("kernel mismatch between field elements")]
    KernelMismatch,
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("degenerate metric: determinant vanishes")]
    Degenerate,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("one-form is identically zero")]
    ZeroOneForm,
    #[error("defining polynomial is identically zero")]
    ZeroPolynomial,
    #[error("norm violation at sample point: {0}")]
    NormViolation(String),
    #[error("homogeneity violation: {0}")]
    HomogeneityViolation(String),
    #[error("metric not representable in a single-kernel field: {0}")]
    Unrepresentable(String),
    #[error("internal inconsistency in {claim}: {detail}")]
    InternalInconsistency { claim: String, detail: String },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("arity error: {0}")]
    Arity(String),
    #[error("spec error: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
