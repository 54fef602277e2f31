//! GHZ-type bases generated by the braid matrix, the qutrit phase-removal
//! unitary, and Scott's Q-measure of multipartite entanglement.

use itertools::Itertools;
use num_complex::Complex64;

use crate::braid::braid_matrix;
use crate::error::{Error, Result};
use crate::qpa::{cyclic_sub, RootsOfUnity};
use crate::tensor::{kron_all, partial_trace, purity, ComplexMatrix, QuditShape, StateVector};

/// Norm tolerance accepted by [`q_measure`].
pub const MEASURE_NORM_TOL: f64 = 1e-8;

/// Label `(k_1, ..., k_N)` of a basis state, and hence of its GHZ image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhzLabel {
    shape: QuditShape,
    digits: Vec<usize>,
}

impl GhzLabel {
    pub fn new(shape: QuditShape, digits: Vec<usize>) -> Result<Self> {
        shape.check_digits(&digits)?;
        Ok(Self { shape, digits })
    }

    /// All `d^N` labels in basis-index order.
    pub fn all(shape: QuditShape) -> Result<Vec<Self>> {
        let dim = shape.state_dim()?;
        Ok((0..dim)
            .map(|i| Self {
                shape,
                digits: shape.digits(i),
            })
            .collect())
    }

    pub fn shape(&self) -> &QuditShape {
        &self.shape
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }
}

/// Phase on `|k ⊖ i>` in `S|k>`, from the first digit only.
///
/// Odd `d`: `omega^{i(2k_1 + i + 1)/2}`; even `d`: `omega^{2 k_1 i}`.
pub fn ghz_coefficient(roots: &RootsOfUnity, k1: usize, i: usize) -> Complex64 {
    let (k1, i) = (k1 as i64, i as i64);
    if roots.d() % 2 == 1 {
        // i(i+1) is even, so the exponent is an exact integer.
        roots.omega_pow(i * (2 * k1 + i + 1) / 2)
    } else {
        roots.omega_pow(2 * k1 * i)
    }
}

/// `S|k_1 ... k_N>` from the closed form: `d` equal-weight terms on
/// `|k_1 ⊖ i, ..., k_N ⊖ i>`.
pub fn ghz_closed_form(label: &GhzLabel) -> Result<StateVector> {
    let shape = label.shape;
    let dim = shape.state_dim()?;
    let d = shape.d();
    let roots = RootsOfUnity::new(d)?;
    let norm = 1.0 / (d as f64).sqrt();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
    let mut shifted = vec![0; label.digits.len()];
    for i in 0..d {
        for (s, &k) in shifted.iter_mut().zip(&label.digits) {
            *s = cyclic_sub(k, i, d);
        }
        let index = shape.basis_index(&shifted)?;
        amplitudes[index] = ghz_coefficient(&roots, label.digits[0], i) * norm;
    }
    StateVector::new(d, shape.sites(), amplitudes)
}

/// `S|k_1 ... k_N>` by dense matrix-vector product.
pub fn ghz_by_braid(label: &GhzLabel) -> Result<StateVector> {
    let s = braid_matrix(&label.shape)?;
    StateVector::basis(&label.shape, &label.digits)?.evolve(&s)
}

/// Single-site `u = |0><0| + |1><1| + omega^{-1/N} |2><2|` for qutrits.
pub fn local_phase_removal(sites: usize) -> Result<ComplexMatrix> {
    if sites == 0 {
        return Err(Error::Argument("number of sites must be >= 1".into()));
    }
    // omega^{-1/N} = exp(-2 pi i / (3N))
    let angle = -2.0 * std::f64::consts::PI / (3.0 * sites as f64);
    Ok(ComplexMatrix::from_diagonal(&[
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::from_polar(1.0, angle),
    ]))
}

/// `U = u^{⊗N}`, which strips the relative phase from the qutrit GHZ-like
/// state `S|0...0>`. Only defined for `d = 3`.
pub fn phase_removal_unitary(shape: &QuditShape) -> Result<ComplexMatrix> {
    if shape.d() != 3 {
        return Err(Error::Unsupported(format!(
            "phase removal is defined for d = 3 only, got d = {}",
            shape.d()
        )));
    }
    shape.dense_dim()?;
    let u = local_phase_removal(shape.sites())?;
    kron_all(std::iter::repeat_n(&u, shape.sites()), shape.budget())
}

/// Scott's `Q_m`: rescaled one minus the average purity over all
/// `m`-site marginals.
pub fn q_measure(psi: &StateVector, m: usize) -> Result<f64> {
    let n = psi.sites();
    if m < 1 || m > n / 2 {
        return Err(Error::Argument(format!(
            "m must lie in 1..={} for N = {n}, got {m}",
            n / 2
        )));
    }
    let norm = psi.norm();
    if (norm - 1.0).abs() > MEASURE_NORM_TOL {
        return Err(Error::Unnormalized { norm });
    }
    let mut total = 0.0;
    let mut count = 0usize;
    for subset in (0..n).combinations(m) {
        total += purity(&partial_trace(psi, &subset)?);
        count += 1;
    }
    let dm = (psi.d() as f64).powi(m as i32);
    Ok(dm / (dm - 1.0) * (1.0 - total / count as f64))
}

/// `Q_m = 1 - (d^{m-1} - 1) / (d^m - 1)` for any GHZ basis state.
pub fn q_measure_ghz_closed_form(d: usize, m: usize) -> f64 {
    assert!(d >= 2 && m >= 1, "need d >= 2 and m >= 1");
    let dm = (d as f64).powi(m as i32);
    let dm1 = (d as f64).powi(m as i32 - 1);
    1.0 - (dm1 - 1.0) / (dm - 1.0)
}
