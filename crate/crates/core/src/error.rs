use thiserror::Error;

/// Largest supported variable count.
pub const MAX_VARS: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {n} outside supported range {min}..={max}")]
    Size { n: usize, min: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right} variables")]
    Dimension { left: usize, right: usize },

    #[error("zero direction: the derivative sum is identically zero")]
    ZeroDirection,

    #[error("invalid index {index} for {n} variables")]
    Index { index: usize, n: usize },

    #[error("invalid monomial: {0}")]
    Monomial(String),

    #[error("matrix is singular over GF(2)")]
    Singular,

    #[error("string of length {len} is too short for this operator (needs {min})")]
    StringLength { len: usize, min: usize },

    #[error("{builder} fast path needs n >= {min}, got {n}")]
    Unsupported {
        builder: &'static str,
        n: usize,
        min: usize,
    },

    #[error("generating function denominator has non-unit constant term {0}")]
    NonUnitConstant(i128),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_size(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::Size { n, min, max });
    }
    Ok(())
}
