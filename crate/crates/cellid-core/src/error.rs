//! Error types shared by the whole crate.

use thiserror::Error;

/// Electrode selector used across the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Electrode {
    Anode,
    Cathode,
}

impl std::fmt::Display for Electrode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Electrode::Anode => write!(f, "anode"),
            Electrode::Cathode => write!(f, "cathode"),
        }
    }
}

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Solid concentration reached 0 or c_max at a particle surface; the
    /// Butler-Volmer exchange current vanishes there and the model leaves
    /// its validity range.
    #[error("{electrode} saturated (surface concentration out of (0, c_max)) at t = {time_s} s")]
    Saturation { electrode: Electrode, time_s: f64 },

    /// Equilibrium curve evaluated outside its (0, 1) stoichiometry domain.
    #[error("{electrode} equilibrium curve evaluated at stoichiometry {theta} outside (0, 1)")]
    CurveDomain { electrode: Electrode, theta: f64 },

    /// A state or output became non-finite.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A quantity left its admissible range (e.g. SoC outside an OCV map).
    #[error("out of range: {0}")]
    Range(String),

    /// A simulation failed at a specific sample of an input profile.
    #[error("simulation failed at sample {sample}: {source}")]
    AtSample {
        sample: usize,
        #[source]
        source: Box<CoreError>,
    },

    /// Dataset does not match the protocol expected by an extraction step.
    #[error("protocol mismatch: {0}")]
    ProtocolMismatch(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// The residual function was not finite at the initial guess.
    #[error("invalid start: {0}")]
    InvalidStart(String),

    /// Every damping increase was rejected; the solver cannot make progress.
    #[error("optimizer stalled: {0}")]
    OptimizerStall(String),

    #[error("all {n_starts} starts failed; first failure: {first}")]
    AllStartsFailed { n_starts: usize, first: String },

    /// A generator would produce an unreasonable number of samples.
    #[error("profile too large: {0} samples (limit {1})")]
    SizeLimit(usize, usize),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, CoreError>;

impl CoreError {
    /// Innermost error of an `AtSample` chain.
    pub fn root(&self) -> &CoreError {
        match self {
            CoreError::AtSample { source, .. } => source.root(),
            other => other,
        }
    }
}
