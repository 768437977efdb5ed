//! Crate-wide error type and exit-code classes.

use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Every variant belongs to one of three classes used by the CLI:
/// configuration errors (exit code 2), numerical-guard rejections
/// (exit code 3) and I/O or file-format errors (exit code 4).
#[derive(Debug, Error)]
pub enum SqwError {
    /// Invalid parameter at construction time (bad beam, grid, mode, plan).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Scenario configuration problem, with a field path for diagnostics.
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    /// Grid does not capture the requested mode: discrete norm fell below
    /// the required fraction of the analytic norm.
    #[error("grid too small for mode: captured {captured:.6} of the analytic norm (need >= 0.999); enlarge the grid extents")]
    GridCapture { captured: f64 },

    /// Spectral content beyond the allowed fraction of the Nyquist wavenumber.
    #[error("spectral content exceeds {limit:.0}% of the grid Nyquist wavenumber (offending fraction {fraction:.3e}); refine the grid spacing")]
    NyquistExceeded { limit: f64, fraction: f64 },

    /// Propagation kernel evaluated too close to the source plane.
    #[error("|zeta| = {zeta:.3e} below the conditioning floor {min:.1e}; the kernel is distributional at zeta = 0")]
    ZetaTooSmall { zeta: f64, min: f64 },

    /// Direct kernel quadrature requested on a grid above the cost cap.
    #[error("grid axis count {n} exceeds the kernel-quadrature cap of {cap}; use the split-step propagator instead")]
    KernelGridTooLarge { n: usize, cap: usize },

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: {0}")]
    QuadratureDidNotConverge(String),

    /// Spectral grid tails exceed the allowed fraction of the coefficient peak.
    #[error("spectral grid tail capture violated: {0}")]
    SpectralTails(String),

    /// Operation requires a unit-norm field.
    #[error("field is not normalized: norm^2 = {norm_sq:.12}")]
    NotNormalized { norm_sq: f64 },

    /// Field is not the stated pure mode (overlap below threshold).
    #[error("field is not the stated pure mode: |overlap| = {overlap:.6} < 0.99")]
    ImpureMode { overlap: f64 },

    /// Streamline seed placed in a density null.
    #[error("streamline seed ({x:.4}, {y:.4}) lies in a density null")]
    SeedInDensityNull { x: f64, y: f64 },

    /// Interferometer arms left the grid.
    #[error("interferometer arms exit the grid: density loss {loss:.3e} > 1e-3; enlarge extent_x or reduce the kick / path length")]
    ArmsExitGrid { loss: f64 },

    /// Vortex-pair crossing region carries too little intensity.
    #[error("beam crossing intensity {ratio:.3e} of peak is below 1e-6; propagate further (larger zeta) or reduce the separation")]
    CrossingTooDim { ratio: f64 },

    /// Fringe cut has no dominant spatial-frequency peak.
    #[error("no dominant fringe peak (power ratio {ratio:.2} < 3 over background); visibility {visibility:.4}")]
    NoDominantPeak { ratio: f64, visibility: f64 },

    /// Non-finite values where finite ones are required.
    #[error("non-finite values in {0}")]
    NonFinite(String),

    /// Snapshot file does not start with the expected magic.
    #[error("bad snapshot magic: expected \"SQWF1\"")]
    SnapshotMagic,

    /// Snapshot payload shorter than the header promises.
    #[error("truncated snapshot payload: expected {expected} bytes, found {found}")]
    SnapshotTruncated { expected: usize, found: usize },

    /// Snapshot metadata line failed to parse or is inconsistent.
    #[error("snapshot metadata error: {0}")]
    SnapshotMeta(String),

    /// Snapshot written on a foreign-endian machine.
    #[error("unsupported snapshot endianness tag `{tag}` (only \"LE\" is supported)")]
    UnsupportedEndianness { tag: String },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// CLI exit-code classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad configuration or parameters (exit code 2).
    Config,
    /// Numerical-guard rejection (exit code 3).
    Guard,
    /// I/O or file-format failure (exit code 4).
    Io,
}

impl SqwError {
    /// Classify the error for exit-code mapping.
    pub fn class(&self) -> ErrorClass {
        use SqwError::*;
        match self {
            InvalidParameter(_) | Config { .. } => ErrorClass::Config,
            Io(_) | SnapshotMagic | SnapshotTruncated { .. } | SnapshotMeta(_)
            | UnsupportedEndianness { .. } => ErrorClass::Io,
            _ => ErrorClass::Guard,
        }
    }

    /// Exit code for the CLI: 2 config, 3 numerical guard, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self.class() {
            ErrorClass::Config => 2,
            ErrorClass::Guard => 3,
            ErrorClass::Io => 4,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, SqwError>;
