//! Error type shared by all library modules.

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes surfaced by the library.
///
/// Contract violations that indicate a caller bug (negative counts, mismatched
/// buffer lengths in internal kernels) panic instead; these variants cover
/// conditions a correct caller can legitimately run into.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Iterative SVD did not meet tolerance within the sweep cap.
    ConvergenceFailure { sweeps: usize },
    /// Unit-modulus decomposition of an all-zero matrix is degenerate.
    AllZeroMatrix,
    /// Fewer usable singular values than requested streams.
    RankDeficient { required: usize, usable: usize },
    /// Combiner Gram matrix is not invertible at tolerance.
    SingularGram,
    /// Input dimensions do not match the operation's contract.
    DimensionMismatch { context: &'static str },
    /// Unknown preset or preset/dimension combination.
    InvalidPreset { reason: &'static str },
    /// The half-RF preset needs an even stream count.
    OddStreams { n_streams: usize },
    /// Training loss became non-finite.
    DivergenceDetected { epoch: usize },
    /// Evaluation requested on a model that has not been trained.
    UntrainedModel,
    /// Probe Gram matrix condition number exceeds the fitting threshold.
    IllConditioned { cond: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ConvergenceFailure { sweeps } => {
                write!(f, "SVD failed to converge within {sweeps} sweeps")
            }
            Error::AllZeroMatrix => {
                write!(f, "unit-modulus decomposition undefined for an all-zero matrix")
            }
            Error::RankDeficient { required, usable } => write!(
                f,
                "rank deficient: {required} streams requested, {usable} usable singular values"
            ),
            Error::SingularGram => write!(f, "combiner Gram matrix is singular at tolerance"),
            Error::DimensionMismatch { context } => write!(f, "dimension mismatch: {context}"),
            Error::InvalidPreset { reason } => write!(f, "invalid preset: {reason}"),
            Error::OddStreams { n_streams } => {
                write!(f, "half-RF preset requires an even stream count, got {n_streams}")
            }
            Error::DivergenceDetected { epoch } => {
                write!(f, "training diverged (non-finite loss) at epoch {epoch}")
            }
            Error::UntrainedModel => write!(f, "model has not been trained"),
            Error::IllConditioned { cond } => {
                write!(f, "probe Gram matrix ill-conditioned (cond ~ {cond:.3e})")
            }
        }
    }
}

impl core::error::Error for Error {}
