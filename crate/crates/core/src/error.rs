use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("exponent overflow: a variable would exceed degree {}", u8::MAX)]
    ExponentOverflow,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("the zero polynomial has no cofactor")]
    ZeroPolynomial,

    #[error("polynomial is not a Darboux polynomial of this system")]
    NotDarboux,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid rational literal {0:?} (expected p or p/q)")]
    InvalidRational(String),

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    #[error("trajectory blew up at t = {time} (|x| > 1e12 or non-finite)")]
    BlowUp { time: f64 },

    #[error("coordinate x{axis} came within 1e-9 of zero at sample {sample}")]
    LaurentSingularity { axis: usize, sample: usize },

    #[error("polynomial changes sign or underflows along the trajectory at sample {sample}")]
    SignChange { sample: usize },

    #[error("state coordinate is not strictly positive at sample {sample}")]
    NonPositiveState { sample: usize },
}
