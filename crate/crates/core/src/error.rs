use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("expected a square box, got {m}x{n}")]
    NotSquare { m: usize, n: usize },
    #[error("operation requires m >= n, got {m}x{n}")]
    TallBoxRequired { m: usize, n: usize },
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("not a Dyck word: {0}")]
    NotDyck(String),
    #[error("not abelian: {0}")]
    NotAbelian(String),
    #[error("size {size} exceeds the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("not symmetric: coefficient of M{left:?} differs from M{right:?}")]
    Asymmetric { left: Vec<usize>, right: Vec<usize> },
    #[error("exact division failed: {0}")]
    Divisibility(String),
    #[error("sign/positivity violation: {0}")]
    Positivity(String),
}
