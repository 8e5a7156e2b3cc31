//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error)]
pub enum Su11Error {
    #[error("invalid Fock space: {0}")]
    InvalidSpace(String),

    #[error("generator {label} is not supported by {operation}")]
    UnsupportedLabel { label: String, operation: String },

    #[error("oscillator frequencies must be positive: {0}")]
    NonPositiveFrequency(String),

    #[error("coefficient set is not isotropic: {coefficient} has magnitude {magnitude:.3e} (tolerance {tolerance:.1e})")]
    ResidualSu2Sector {
        coefficient: String,
        magnitude: f64,
        tolerance: f64,
    },

    #[error("matrix is not Hermitian: max |M - M†| = {deviation:.3e} exceeds {tolerance:.1e}")]
    NonHermitian { deviation: f64, tolerance: f64 },

    #[error("unstable Hamiltonian: mode {mode} has tanh argument {tanh_argument:.6} (requires α₀² > 4|β₊|², α₀ > 0)")]
    UnstableHamiltonian { mode: char, tanh_argument: f64 },

    #[error("cross-mode elimination did not converge: best residual {best_residual:.3e} after {iterations} iterations")]
    SolverNoConvergence {
        best_residual: f64,
        iterations: usize,
    },

    #[error("interior margin {margin} is too large for cutoff {cutoff}")]
    MarginTooLarge { margin: usize, cutoff: usize },

    #[error("quantum numbers ({n_a}, {n_b}) too close to cutoff: leakage estimate {leakage:.3e} exceeds bound {bound:.1e}")]
    TooCloseToCutoff {
        n_a: usize,
        n_b: usize,
        leakage: f64,
        bound: f64,
    },

    #[error("phase lock violated: {0}")]
    PhaseLockViolation(String),

    #[error("parameter loop is not closed: max |α(T) - α(0)| = {0:.3e}")]
    LoopNotClosed(f64),

    #[error("near-degenerate overlap |⟨ψ(t_i)|ψ(t_i+1)⟩| = {overlap:.3} < 0.5 at sample {sample}; use denser sampling")]
    NearDegeneracy { overlap: f64, sample: usize },

    #[error("eigensolver failed: {0}")]
    Eigensolver(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
