use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("negative exponent at byte {0}")]
    NegativeExponent(usize),
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires ambient dimension 2, polynomial has {0}")]
    NotPlanar(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),
    #[error("invalid ray: {0}")]
    InvalidRay(String),
    #[error("cone is not regular (determinant {0})")]
    NonRegularCone(i64),
    #[error("chart matrix is not unimodular (determinant {0})")]
    NonUnimodular(i64),
    #[error("point is not on the torus (coordinate {0} vanishes)")]
    OffTorus(usize),
    #[error("not a single mixed monomial ({0} terms)")]
    NotMonomial(usize),
    #[error("homogeneity precondition failed: {0}")]
    NotHomogeneous(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}
