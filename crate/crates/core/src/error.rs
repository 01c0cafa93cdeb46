use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, WhError>;

/// Error taxonomy for the whole crate.  The wording of the messages is part
/// of the public contract: callers (and the CLI) match on them.
#[derive(Debug, Error)]
pub enum WhError {
    #[error("poles too close: separation {sep:.3e} at {at}")]
    PolesTooClose { sep: f64, at: Complex64 },

    #[error("higher-order pole of multiplicity {order} not supported")]
    HigherMultiplicity { order: u32 },

    #[error("boundary side required for real point {at}")]
    BoundarySideRequired { at: f64 },

    #[error("delta part present: constant term {value} has no L^1 inverse transform")]
    DeltaPartPresent { value: Complex64 },

    #[error("divergent pairing: rate {rate} on an unbounded range")]
    DivergentPairing { rate: Complex64 },

    #[error("index nonzero: winding number {winding}")]
    IndexNonzero { winding: i32 },

    #[error("unnormalized symbol: sigma(inf) = {at_infinity}")]
    UnnormalizedSymbol { at_infinity: Complex64 },

    #[error("real zero of tau at {at}: tau must be nonvanishing on the real axis")]
    RealZeroOfTau { at: f64 },

    #[error("real pole of tau at {at}: tau must be analytic on the real axis")]
    RealPoleOfTau { at: f64 },

    #[error("residue mismatch at {at}: internal consistency failure (|error| = {err:.3e})")]
    ResidueMismatch { at: Complex64, err: f64 },

    #[error("resonant alpha: denominator magnitude {denom:.3e} at alpha = {alpha}")]
    ResonantAlpha { alpha: f64, denom: f64 },

    #[error("near-singular truncation: condition estimate {cond:.3e}")]
    NearSingularTruncation { cond: f64 },

    #[error("branch inconsistency: closed form and quadrature for G differ by {diff:.3e}")]
    BranchInconsistency { diff: f64 },

    #[error("E quadrature failed: Richardson levels differ by {diff:.3e}")]
    EQuadratureFailed { diff: f64 },

    #[error("dual factorization inconsistent: {detail}")]
    DualInconsistent { detail: String },

    #[error("method mismatch: {hint}")]
    MethodMismatch { hint: String },

    #[error("point ({x}, {y}) outside the domain (0, {alpha})^2")]
    OutOfDomain { x: f64, y: f64, alpha: f64 },

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("internal error: {0}")]
    Internal(String),
}

impl WhError {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            WhError::InvalidSpec(_) | WhError::Io(_) => 2,
            WhError::ResonantAlpha { .. } => 3,
            _ => 1,
        }
    }
}
