use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("semigroup cone is not strongly convex")]
    NotStronglyConvex,
    #[error("semigroup cone is not full-dimensional")]
    NotFullDimensional,
    #[error("enumeration bound exceeded: {needed} points needed, cap is {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionCap { dim: usize, max: usize },
    #[error("integer overflow in machine-word arithmetic")]
    Overflow,
}
