use thiserror::Error;

/// Errors raised across the engine. Validation problems carry enough
/// context to point at the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no primitive {order}-th root of unity mod {p}: {order} does not divide p - 1")]
    RootUnavailable { p: u64, order: u64 },
    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),
    #[error("matrix does not satisfy g^{order} = Id")]
    OrderMismatch { order: usize },
    #[error("matrix is not diagonalizable over F_{0}")]
    NonDiagonalizable(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("group closure exceeded the bound of {0} elements")]
    BoundExceeded(usize),
    #[error("matrix is not invertible mod {0}")]
    NotInvertible(u64),
    #[error("characteristic {p} too small: need p > dim V = {dim} and p > |G| = {order}")]
    CharacteristicTooSmall { p: u64, dim: usize, order: usize },
    #[error("multivector has a component outside the span of the target frame")]
    NotInSpan,
    #[error("polynomial arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operands belong to different contexts: {0}")]
    ContextMismatch(String),
    #[error("{0}! is not invertible mod {1}")]
    FactorialNotInvertible(usize, u64),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("cochain table has no entry for the requested arguments")]
    IncompleteTable,
    #[error("not symplectic: {0}")]
    NotSymplectic(String),
    #[error("symplectic form degenerates on the complement of element {0}")]
    NotSymplecticOnComplement(usize),
    #[error("class is not homogeneous: {0}")]
    DegreeInhomogeneous(String),
    #[error("complements of elements {g} and {h} meet trivially but codimensions do not add up")]
    CodimensionDefect { g: usize, h: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
