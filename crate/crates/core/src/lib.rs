//! Generalized N-partite, d-level braid matrices built from the quantum
//! plane algebra, and the GHZ-type entangled bases they generate.
//!
//! * [`tensor`]: dense complex matrices, Kronecker products, basis
//!   indexing, partial traces and unitary spectral decomposition.
//! * [`qpa`]: clock/shift generators `X`, `Z`, the Fourier operator and the
//!   derived matrices `A = ZX`, `B = X`.
//! * [`braid`]: the M-matrix, the braid matrix `S`, their verifiers and the
//!   associated Hamiltonian `-i log S`.
//! * [`entangle`]: GHZ bases, the qutrit phase-removal unitary and the
//!   Q-measure.
//! * [`io`]: JSON documents for matrices and states.

pub mod braid;
pub mod entangle;
mod error;
pub mod io;
pub mod qpa;
mod report;
pub mod tensor;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use report::{Check, VerificationReport};

/// Default residual tolerance for verifiers.
pub const DEFAULT_TOL: f64 = 1e-10;
