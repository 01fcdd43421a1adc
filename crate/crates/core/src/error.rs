use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Verification failures are not errors; they are reported as clause
/// verdicts inside a [`crate::report::CheckReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("cannot parse {what} from `{input}`")]
    Parse { what: &'static str, input: String },

    #[error("index ({i}, {j}) out of range for size {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not centrosymmetric")]
    NotCentrosymmetric,

    #[error("vectors are linearly dependent: {0}")]
    LinearlyDependent(String),

    #[error("freeness undetermined: {0}")]
    FreenessUndetermined(String),

    #[error("no free complement: {0}")]
    NoComplement(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
