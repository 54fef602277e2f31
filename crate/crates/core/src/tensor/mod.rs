//! Dense complex linear algebra for qudit registers: matrices, Kronecker
//! products, basis indexing, partial traces and unitary spectral
//! decomposition.

mod matrix;
mod shape;
mod spectral;
mod state;

pub use matrix::{expm_i, kron, kron_all, matrix_residual, ComplexMatrix};
pub use shape::{QuditShape, DEFAULT_BUDGET, STATE_LIMIT};
pub use spectral::{
    principal_log_hermitian, principal_phase, spectral_decompose_unitary, SpectralDecomposition,
    RECONSTRUCTION_TOL,
};
pub use state::{partial_trace, purity, StateVector, NORM_TOL};
