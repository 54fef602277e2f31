use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::matrix::{matrix_residual, ComplexMatrix};
use crate::error::{Error, Result};

/// Post-condition on `max |V e^{i phi} V^dagger - U|`.
pub const RECONSTRUCTION_TOL: f64 = 1e-8;

/// Eigenphases within this distance of `-pi` are reported as `+pi`.
const BRANCH_SNAP: f64 = 1e-10;

/// Eigenvalues of `(U + U^dagger)/2` closer than this are treated as one
/// block when resolving the imaginary part.
const CLUSTER_TOL: f64 = 1e-9;

/// `U = sum_k e^{i phi_k} |u_k><u_k|` with `phi_k` in `(-pi, pi]`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub phases: Vec<f64>,
    /// Columns are the orthonormal eigenvectors.
    pub vectors: ComplexMatrix,
}

impl SpectralDecomposition {
    /// `V diag(f(phi)) V^dagger`.
    pub fn synthesize(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let n = self.vectors.dim();
        let weights: Vec<Complex64> = self.phases.iter().map(|&p| f(p)).collect();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, |r, c| {
            (0..n)
                .map(|k| v[(r, k)] * weights[k] * v[(c, k)].conj())
                .sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.synthesize(|p| Complex64::from_polar(1.0, p))
    }
}

/// Principal-branch phase of a unit-modulus eigenvalue, with `-1 -> +pi`.
pub fn principal_phase(z: Complex64) -> f64 {
    let p = z.arg();
    if p <= -PI + BRANCH_SNAP {
        PI
    } else {
        p
    }
}

fn hermitian_eigen(m: DMatrix<Complex64>) -> Result<(Vec<f64>, DMatrix<Complex64>)> {
    let eig = SymmetricEigen::try_new(m, f64::EPSILON, 0)
        .ok_or_else(|| Error::Eigen("Hermitian eigensolver did not converge".into()))?;
    Ok((eig.eigenvalues.iter().copied().collect(), eig.eigenvectors))
}

/// Spectral decomposition of a unitary matrix.
///
/// `U` is normal, so its Hermitian parts `A = (U + U^dagger)/2` and
/// `B = (U - U^dagger)/2i` commute. `A` is diagonalized first; `B` is then
/// diagonalized inside each cluster of equal `A`-eigenvalues, which splits
/// conjugate pairs `e^{+-i phi}`. Phases come from the Rayleigh quotients
/// `<u_k|U|u_k>`.
pub fn spectral_decompose_unitary(u: &ComplexMatrix, tol: f64) -> Result<SpectralDecomposition> {
    let residual = u.unitarity_residual();
    if residual > tol {
        return Err(Error::NotUnitary { residual });
    }
    let n = u.dim();
    let um = DMatrix::from_row_slice(n, n, u.data());
    let ua = um.adjoint();
    let half = Complex64::new(0.5, 0.0);
    let a = (&um + &ua) * half;
    let b = (&um - &ua) * Complex64::new(0.0, -0.5);

    let (a_values, a_vectors) = hermitian_eigen(a)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a_values[i].total_cmp(&a_values[j]));

    let mut vectors = DMatrix::<Complex64>::zeros(n, n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && a_values[order[end]] - a_values[order[end - 1]] <= CLUSTER_TOL {
            end += 1;
        }
        let block = DMatrix::from_fn(n, end - start, |r, c| a_vectors[(r, order[start + c])]);
        let rotated = if end - start == 1 {
            block
        } else {
            let reduced = block.adjoint() * &b * &block;
            let reduced = (&reduced + reduced.adjoint()) * half;
            let (_, w) = hermitian_eigen(reduced)?;
            block * w
        };
        vectors.columns_mut(start, end - start).copy_from(&rotated);
        start = end;
    }

    let uv = &um * &vectors;
    let phases = (0..n)
        .map(|k| principal_phase(vectors.column(k).dotc(&uv.column(k))))
        .collect();
    let vectors = ComplexMatrix::from_fn(n, |r, c| vectors[(r, c)]);
    let decomposition = SpectralDecomposition { phases, vectors };

    let recon = matrix_residual(&decomposition.reconstruct(), u)?;
    if recon > RECONSTRUCTION_TOL {
        return Err(Error::Eigen(format!(
            "reconstruction residual {recon:e} exceeds {RECONSTRUCTION_TOL:e}"
        )));
    }
    Ok(decomposition)
}

/// `-i log U` on the principal branch, as a dense Hermitian matrix.
pub fn principal_log_hermitian(u: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let spec = spectral_decompose_unitary(u, tol)?;
    let h = spec.synthesize(|p| Complex64::new(p, 0.0));
    // Average with the adjoint to remove rounding asymmetry.
    Ok((&h + &h.adjoint()).scale(Complex64::new(0.5, 0.0)))
}
