//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("angle out of range: {0}")]
    InvalidAngle(String),

    #[error("direction maps onto a coordinate pole; polarization basis is degenerate")]
    DegeneratePole,

    #[error("grid too coarse for N={n_modes}: {rows} rows < {cols} unknowns")]
    GridTooCoarse { n_modes: usize, rows: usize, cols: usize },

    #[error("basis matrix is rank deficient (condition estimate {cond:.3e}); refine the grid or enable ridge regularization")]
    RankDeficient { cond: f64 },

    #[error("pattern file: {0}")]
    PatternFormat(String),

    #[error("environment file: {0}")]
    EnvironmentFormat(String),

    #[error("config: {0}")]
    Config(String),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("empty multipath component list")]
    EmptyMpcs,

    #[error("zero-energy power delay profile")]
    ZeroEnergyPdp,

    #[error("need at least {min} samples for percentile statistics, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("omni-directional reference power is zero")]
    ZeroReferencePower,

    #[error("no reference delay spreads supplied")]
    NoReferences,

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, SimError>;
