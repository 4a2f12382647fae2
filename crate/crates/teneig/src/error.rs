use thiserror::Error;

/// Everything that can go wrong across the library surface.
#[derive(Debug, Error)]
pub enum TensorError {
    #[error("index {index:?} invalid for order {order}, dimension {dim}")]
    IndexOutOfRange {
        index: Vec<usize>,
        order: usize,
        dim: usize,
    },

    #[error("duplicate canonical index {index:?}")]
    DuplicateIndex { index: Vec<usize> },

    #[error("expected vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("polynomial degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),

    #[error("operation requires dimension n = 2, tensor has n = {0}")]
    UnsupportedDimension(usize),

    #[error("operation requires order m = 2, tensor has m = {0}")]
    UnsupportedOrder(usize),

    #[error("spectrum computation is unsupported for n >= 3 with m >= 3; bounds still work with an externally supplied determinant")]
    UnsupportedSpectrum,

    #[error("parameter {name} = {value} outside valid range {lo}..={hi}")]
    ParameterRange {
        name: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("bound hypothesis needs positive invariants, got S = {s}, det = {det}")]
    NonpositiveInvariants { s: f64, det: f64 },

    #[error("characteristic polynomial interpolation ill-conditioned: {0}")]
    Conditioning(String),

    #[error("degenerate polynomial: all coefficients are (near) zero")]
    DegeneratePolynomial,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Validation(String),

    #[error("missing determinant for n = {0}: add `det=<value>` to the tensor file")]
    MissingDeterminant(usize),
}

pub type Result<T> = std::result::Result<T, TensorError>;

impl TensorError {
    /// Process exit code for the CLI: parse 2, validation 3, unsupported 4.
    pub fn exit_code(&self) -> i32 {
        use TensorError::*;
        match self {
            Parse { .. } => 2,
            IndexOutOfRange { .. }
            | DuplicateIndex { .. }
            | LengthMismatch { .. }
            | DegreeTooSmall(_)
            | ParameterRange { .. }
            | Validation(_)
            | MissingDeterminant(_) => 3,
            UnsupportedDimension(_) | UnsupportedOrder(_) | UnsupportedSpectrum => 4,
            NonpositiveInvariants { .. } | Conditioning(_) | DegeneratePolynomial => 1,
        }
    }
}
