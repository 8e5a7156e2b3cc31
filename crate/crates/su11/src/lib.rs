//! Two-mode bosonic Hamiltonians with a linear su(1,1) structure.
//!
//! The library diagonalizes
//!
//! ```text
//! H = α₀ K₀⁽ᵃᵇ⁾ + α₊⁽ᵃ⁾K₊⁽ᵃ⁾ + α₋⁽ᵃ⁾K₋⁽ᵃ⁾ + α₊⁽ᵇ⁾K₊⁽ᵇ⁾ + α₋⁽ᵇ⁾K₋⁽ᵇ⁾
//!       + α₊⁽ᵃᵇ⁾K₊⁽ᵃᵇ⁾ + α₋⁽ᵃᵇ⁾K₋⁽ᵃᵇ⁾
//! ```
//!
//! in two steps: an SU(2) tilt `D(χ)` that removes the cross-mode ladder
//! terms, followed by a two-mode SU(1,1) squeeze `D(ξ_a)D(ξ_b)` that removes
//! the single-mode ones, leaving `H'' = ω_a K₀⁽ᵃ⁾ + ω_b K₀⁽ᵇ⁾`. Closed-form
//! spectra, eigenstates, and adiabatic (Berry) phases fall out of the same
//! machinery; everything is cross-checked against a brute-force truncated
//! Fock-space oracle.
//!
//! Module map:
//! - [`su_algebra`]: generator realizations, displacement operators, matrix
//!   exponentials, and the closed-form similarity transformations.
//! - [`hamiltonian`]: coefficient sets, the physical-oscillator mapping, and
//!   matrix assembly.
//! - [`diagonalizer`]: the two-step elimination, spectra, eigenstates, and
//!   oscillator wavefunctions.
//! - [`fock_oracle`]: dense Hermitian diagonalization with cutoff-convergence
//!   control.
//! - [`berry`]: parameter loops, the invariant operator, transformed
//!   time-derivative coefficients, and dynamical/geometric phases.
//! - [`oracle`]: matrix-conjugation oracles shared by the verification
//!   command and the test suites.

extern crate openblas_src;

pub mod berry;
pub mod config;
pub mod diagonalizer;
pub mod error;
pub mod fock_oracle;
pub mod hamiltonian;
pub mod oracle;
pub mod output;
pub mod su_algebra;

pub use error::Su11Error;

/// Shorthand used throughout the crate.
pub type C64 = num_complex::Complex64;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Su11Error>;
