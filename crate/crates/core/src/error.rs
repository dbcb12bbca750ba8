use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid quadratic field radicand {0}: must be squarefree and > 1")]
    InvalidField(u32),
    #[error("cannot mix Q(√{0}) and Q(√{1})")]
    FieldMismatch(u32, u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid quaternionic grading: {0}")]
    InvalidGrading(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("not a hyper-Kähler symmetric triple: {0}")]
    InvalidTriple(String),
    #[error("center is not contained in the minus part: {0}")]
    CenterNotInMinus(String),
    #[error("not a unit quaternion: norm is {0}")]
    NotUnit(String),
    #[error("invalid angle: {0}")]
    InvalidAngle(String),
    #[error("invalid parameter matrix: {0}")]
    InvalidParameter(String),
    #[error("equivariant isotropic section failed: {0}")]
    SectionFailed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
