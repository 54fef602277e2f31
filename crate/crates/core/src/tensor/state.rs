use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::shape::QuditShape;
use crate::error::{Error, Result};

/// Default tolerance on `| ||psi|| - 1 |` for states produced by this crate.
pub const NORM_TOL: f64 = 1e-10;

/// Pure state on `sites` qudits of `d` levels, big-endian amplitude order.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    d: usize,
    sites: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Normalized state; the norm must be within [`NORM_TOL`] of one.
    pub fn new(d: usize, sites: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::with_norm_tolerance(d, sites, amplitudes, NORM_TOL)
    }

    pub fn with_norm_tolerance(
        d: usize,
        sites: usize,
        amplitudes: Vec<Complex64>,
        tol: f64,
    ) -> Result<Self> {
        let state = Self::unnormalized(d, sites, amplitudes)?;
        let norm = state.norm();
        if (norm - 1.0).abs() > tol {
            return Err(Error::Unnormalized { norm });
        }
        Ok(state)
    }

    /// Raw amplitudes with only the length and finiteness checked. Anything
    /// that needs a physical state re-checks the norm.
    pub fn unnormalized(d: usize, sites: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let shape = QuditShape::new(d, sites)?;
        let dim = shape.state_dim()?;
        if amplitudes.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: amplitudes.len(),
            });
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Data("state contains non-finite amplitudes".into()));
        }
        Ok(Self {
            d,
            sites,
            amplitudes,
        })
    }

    /// Computational basis state `|k_1, ..., k_N>`.
    pub fn basis(shape: &QuditShape, digits: &[usize]) -> Result<Self> {
        let dim = shape.state_dim()?;
        let index = shape.basis_index(digits)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            d: shape.d(),
            sites: shape.sites(),
            amplitudes,
        })
    }

    /// Tensor product of single-site states, each of length `d`.
    pub fn product(d: usize, factors: &[Vec<Complex64>]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Argument(
                "product state needs at least one site".into(),
            ));
        }
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for f in factors {
            if f.len() != d {
                return Err(Error::DimensionMismatch {
                    left: d,
                    right: f.len(),
                });
            }
            amps = amps
                .iter()
                .flat_map(|&a| f.iter().map(move |&b| a * b))
                .collect();
        }
        Self::new(d, factors.len(), amps)
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn shape(&self) -> QuditShape {
        QuditShape::with_budget(self.d, self.sites, usize::MAX).expect("validated on construction")
    }

    #[inline]
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.amplitudes.len() != other.amplitudes.len() {
            return Err(Error::DimensionMismatch {
                left: self.amplitudes.len(),
                right: other.amplitudes.len(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `max_i |a_i - b_i|`.
    pub fn residual(&self, other: &Self) -> Result<f64> {
        if self.amplitudes.len() != other.amplitudes.len() {
            return Err(Error::DimensionMismatch {
                left: self.amplitudes.len(),
                right: other.amplitudes.len(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `U |psi>` for a dense operator of matching dimension.
    pub fn evolve(&self, u: &ComplexMatrix) -> Result<Self> {
        let amplitudes = u.apply(&self.amplitudes)?;
        Ok(Self {
            amplitudes,
            ..self.clone()
        })
    }
}

/// Reduced density operator on the sites in `keep` (zero-based, any order;
/// the result's factors follow ascending site order).
pub fn partial_trace(psi: &StateVector, keep: &[usize]) -> Result<ComplexMatrix> {
    let n = psi.sites;
    let d = psi.d;
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.is_empty() || kept.len() >= n {
        return Err(Error::Argument(format!(
            "kept sites must be a nonempty proper subset of 0..{n}"
        )));
    }
    if let Some(&bad) = kept.iter().find(|&&s| s >= n) {
        return Err(Error::Argument(format!("site {bad} out of range 0..{n}")));
    }
    let traced: Vec<usize> = (0..n).filter(|s| !kept.contains(s)).collect();
    let kept_dim = d.pow(kept.len() as u32);
    let env_dim = d.pow(traced.len() as u32);

    // Place each site's digit weight into either the kept or the traced index.
    let mut weights_kept = vec![0usize; n];
    let mut weights_env = vec![0usize; n];
    for (pos, &s) in kept.iter().enumerate() {
        weights_kept[s] = d.pow((kept.len() - 1 - pos) as u32);
    }
    for (pos, &s) in traced.iter().enumerate() {
        weights_env[s] = d.pow((traced.len() - 1 - pos) as u32);
    }

    // Reshape psi into a kept_dim x env_dim block, then rho = Psi Psi^dagger.
    let mut block = vec![Complex64::new(0.0, 0.0); kept_dim * env_dim];
    for (index, &amp) in psi.amplitudes.iter().enumerate() {
        let mut rest = index;
        let (mut a, mut e) = (0, 0);
        for s in (0..n).rev() {
            let digit = rest % d;
            rest /= d;
            a += digit * weights_kept[s];
            e += digit * weights_env[s];
        }
        block[a * env_dim + e] = amp;
    }

    let mut rho = ComplexMatrix::zeros(kept_dim);
    for r in 0..kept_dim {
        let row_r = &block[r * env_dim..(r + 1) * env_dim];
        for c in r..kept_dim {
            let row_c = &block[c * env_dim..(c + 1) * env_dim];
            let v: Complex64 = row_r.iter().zip(row_c).map(|(x, y)| x * y.conj()).sum();
            rho[(r, c)] = v;
            rho[(c, r)] = v.conj();
        }
    }
    Ok(rho)
}

/// `Tr rho^2` for a Hermitian `rho`, as the sum of squared entry moduli.
pub fn purity(rho: &ComplexMatrix) -> f64 {
    rho.data().iter().map(|z| z.norm_sqr()).sum()
}
