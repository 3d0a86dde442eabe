use thiserror::Error;

use crate::dsl::ParseError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FockError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("multi-index {lower:?} is not componentwise below {upper:?}")]
    NotBelow { lower: Vec<u32>, upper: Vec<u32> },

    #[error("exponent {exponent} exceeds the cap of {cap}")]
    ExponentCap { exponent: u32, cap: u32 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("coordinate index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("symbol is not holomorphic")]
    NotHolomorphic,

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("operator chain must contain at least one symbol")]
    EmptyChain,

    #[error("quadrature limited to n <= {max}, got n = {n}")]
    QuadratureDimension { n: usize, max: usize },

    #[error("quadrature order {0} outside 1..=64")]
    QuadratureOrder(usize),

    #[error("exponential parameter modulus {modulus} exceeds bound {bound}")]
    ParameterBound { modulus: f64, bound: f64 },

    #[error("Fourier grid too coarse: {points} points (minimum {min})")]
    GridTooCoarse { points: usize, min: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = FockError> = std::result::Result<T, E>;
