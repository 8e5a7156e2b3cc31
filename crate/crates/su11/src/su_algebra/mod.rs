//! Bosonic su(1,1)/su(2) realizations on truncated Fock space, displacement
//! operators, and closed-form similarity transformations.

pub mod displacement;
pub mod expm;
pub mod fock;
pub mod generators;
pub mod transforms;

pub use displacement::{
    displacement_su11, displacement_su2, wrap_angle, DisplacementParam, Su11Displacement,
    Su2Displacement, SQUEEZE_PAD,
};
pub use expm::expm;
pub use fock::{FockSpace, OperatorMatrix};
pub use generators::{apply_generator, build_generator, GeneratorLabel, SparseOp};
pub use transforms::{
    similarity_su11_closed_form, similarity_su2_closed_form, GeneratorExpansion,
};
