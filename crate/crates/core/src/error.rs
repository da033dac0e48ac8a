use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("prime {0} is too large for residue-field computations")]
    PrimeTooLarge(BigInt),
    #[error("vector vanishes modulo {0}")]
    ZeroModP(BigInt),
    #[error("model is singular (zero discriminant)")]
    Singular,
    #[error("group element does not match the model kind: {0}")]
    KindMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("model is not integral")]
    NotIntegral,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is the identity 0_E")]
    PointAtInfinity,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("could not factor {0}")]
    Factorisation(BigInt),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
