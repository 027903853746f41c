use thiserror::Error;

/// Errors raised by configuration validation and the estimators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid channel configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid input law: {0}")]
    InvalidLaw(String),

    #[error("symbol block is empty")]
    EmptyBlock,

    #[error("symbol block contains a non-finite value at index {0}")]
    NonFiniteSymbol(usize),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("sub-path does not start at the sample phase (left-edge convention)")]
    LeftEdgeMismatch,

    #[error("frame carries no latent phase/fade values")]
    MissingLatents,

    #[error("fade-moment argument a = {0} is outside (0, 1]")]
    MomentDomain(f64),

    #[error("amplitude must be positive for the auxiliary density, got {0}")]
    ZeroAmplitude(f64),

    #[error("SNR must be positive and finite, got {0}")]
    InvalidSnr(f64),

    #[error("at least {min} trials required, got {actual}")]
    TooFewTrials { min: usize, actual: usize },

    #[error("input law power {law} does not match snr * sigma2_N = {expected}")]
    PowerMismatch { law: f64, expected: f64 },

    #[error("degenerate fit grid: {0}")]
    DegenerateGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
