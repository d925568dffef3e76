//! Error type shared by every module of the crate.
//!
//! All fallible operations return [`Result`]. Validation failures (bad
//! truncations, amplitudes on the excluded set πℤ, fields outside the
//! required reality subspace) are kept distinct from genuine numerical
//! failures such as a blown-up trajectory, so callers can map them to
//! different exit codes.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Two fields with different truncations were combined.
    #[error("truncation mismatch: K = {left} vs K = {right}")]
    TruncationMismatch { left: usize, right: usize },

    /// A mode index outside [-K, K] was requested.
    #[error("mode k = {k} outside truncation range [-{k_max}, {k_max}]")]
    ModeOutOfRange { k: i64, k_max: usize },

    /// A grid too coarse to hold all retained modes was requested.
    #[error("grid with {n} points cannot resolve truncation K (needs at least {required})")]
    GridTooCoarse { n: usize, required: usize },

    /// An operation requiring w_k = -conj(z_{-k}) received a field violating it.
    #[error("field is not focusing-real: max |w_k + conj(z_-k)| = {deviation:.3e}")]
    NotFocusingReal { deviation: f64 },

    /// An operation requiring w_k = +conj(z_{-k}) received a field violating it.
    #[error("field is not defocusing-real: max |w_k - conj(z_-k)| = {deviation:.3e}")]
    NotDefocusingReal { deviation: f64 },

    /// The constant potential c = 0 carries no focus-focus structure.
    #[error("amplitude must be nonzero")]
    ZeroAmplitude,

    /// |c| lies on the excluded set πZ where the linearization degenerates.
    #[error("amplitude modulus {c_mod} lies within 1e-9 of the excluded set \u{3c0}\u{2124}")]
    ExcludedAmplitude { c_mod: f64 },

    /// Mode k = 0 carries a 2x2 Jordan block and has no eigenbasis.
    #[error("mode k = 0 is a Jordan block; no eigenvector decomposition exists")]
    JordanMode,

    /// A Fourier shift would push a populated mode outside the truncation.
    #[error("twist by m = {m} pushes populated mode k = {k} outside [-{k_max}, {k_max}]")]
    TwistOutOfRange { k: i64, m: i64, k_max: usize },

    /// A growth measurement was requested for a mode that is not unstable.
    #[error("mode k = {k} is not focus-focus at |c| = {c_mod}; no real growth rate to measure")]
    NotUnstable { k: i64, c_mod: f64 },

    /// The seed perturbation is too large for a clean linear-growth window.
    #[error("perturbation eps = {eps:.3e} exceeds the linear-regime bound {max:.3e}")]
    PerturbationTooLarge { eps: f64, max: f64 },

    /// Too few samples fell inside the growth fitting window.
    #[error("growth fit window holds {points} samples, need at least {needed}")]
    FitWindowTooSmall { points: usize, needed: usize },

    /// The trajectory left the resolvable regime (NaN or overflow).
    #[error("trajectory blew up at t = {t:.6}")]
    BlowUp { t: f64 },

    /// A configuration value failed validation.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The reduced-operator demo is meant for small mode counts only.
    #[error("reduced-operator demo supports at most {max} modes, got {requested}")]
    TooManyModes { requested: usize, max: usize },

    /// A center-mode rotation frequency of zero would degenerate the demo block.
    #[error("rotation frequency B_{index} must be nonzero")]
    ZeroFrequency { index: usize },

    /// A serialized field failed structural validation.
    #[error("malformed field data: {0}")]
    MalformedField(String),
}
