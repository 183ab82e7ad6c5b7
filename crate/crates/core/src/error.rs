use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a supported field characteristic")]
    InvalidField(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("axiom `{axiom}` fails at basis indices {witness:?}")]
    Validation { axiom: String, witness: Vec<usize> },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("a simple module has endomorphism algebra larger than the base field")]
    NonSplitSimple,
    #[error("characteristic too small for the radical computation")]
    SmallCharacteristic,
    #[error("module is not rational: {0}")]
    NotRational(String),
    #[error("comodule is not projective")]
    NotProjective,
    #[error("coend quotient did not stabilize after {0} rounds")]
    NonStabilized(usize),
    #[error("search budget exhausted: {0}")]
    Inconclusive(String),
    #[error("independent routes disagree on `{0}`")]
    RouteDisagreement(String),
    #[error("no isomorphism found: {0}")]
    IsoNotFound(String),
    #[error("expected a one-dimensional comodule, got dimension {0}")]
    NotOneDimensional(usize),
    #[error("no preantipode exists")]
    NoPreantipode,
    #[error("associator is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("invalid corpus spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(axiom: &str, witness: &[usize]) -> Error {
        Error::Validation {
            axiom: axiom.into(),
            witness: witness.to_vec(),
        }
    }

    pub(crate) fn dim(msg: &str) -> Error {
        Error::Dimension(msg.into())
    }
}
