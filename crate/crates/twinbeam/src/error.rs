use thiserror::Error;

#[derive(Debug, Error)]
pub enum TwinBeamError {
    #[error("{field} {reason} (got {value})")]
    InvalidParam {
        field: &'static str,
        reason: &'static str,
        value: f64,
    },

    #[error("nonclassical depth {tau} is \u{2265} 1/2; the negativity diverges there")]
    TauOutOfRange { tau: f64 },

    #[error("participation ratio {r} is < 1; no state has that purity")]
    ParticipationBelowOne { r: f64 },

    #[error("truncation n_max = {n_max} is too large: intermediate terms would overflow")]
    TruncationTooLarge { n_max: usize },

    #[error("Jacobi eigensolver failed to converge after {sweeps} sweeps (dim {dim})")]
    JacobiNoConvergence { sweeps: usize, dim: usize },

    #[error(
        "reduced diagonal mismatch between partial trace and closed form: \
         |diff| = {deviation:e} at index {index}"
    )]
    ReducedDiagonalMismatch { index: usize, deviation: f64 },

    #[error("experimental beam needs at least one mode in some component")]
    ZeroModeWeight,
}
