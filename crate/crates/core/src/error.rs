use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown energy unit `{0}` (expected J, K or GHz)")]
    UnknownUnit(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("imaginary residue {residue:e} exceeds tolerance {tolerance:e} in root {index}")]
    ImaginaryResidue {
        index: usize,
        residue: f64,
        tolerance: f64,
    },

    #[error("negative lambda^2 root {value:e} below tolerance -{tolerance:e}")]
    NegativeRoot { value: f64, tolerance: f64 },

    #[error("matrix is not symmetric (asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("chiral operator constructions disagree by {deviation:e}")]
    ConstructionMismatch { deviation: f64 },

    #[error("analytic and numeric spectra disagree at B = {b} T: relative deviation {deviation:e}")]
    MismatchAtPoint { b: f64, deviation: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
