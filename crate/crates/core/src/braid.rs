//! N-body braid matrices built from powers of the generalized M-matrix
//! `M = A ⊗ B ⊗ ... ⊗ B`, their embeddings on `N + 1` sites, and the
//! verifiers for the M-algebra and the generalized braid relation
//!
//! ```text
//! S_{1..N} S_{2..N+1} S_{1..N} = S_{2..N+1} S_{1..N} S_{2..N+1}
//! ```

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qpa::{cyclic_sub, matrix_a, matrix_b, RootsOfUnity};
use crate::report::VerificationReport;
use crate::tensor::{
    kron, kron_all, matrix_residual, principal_log_hermitian, ComplexMatrix, QuditShape,
};

/// `M = A ⊗ B^{⊗(N-1)}` on `N` sites.
pub fn m_matrix(shape: &QuditShape) -> Result<ComplexMatrix> {
    shape.dense_dim()?;
    let a = matrix_a(shape.d())?;
    let b = matrix_b(shape.d())?;
    let factors: Vec<&ComplexMatrix> = std::iter::once(&a)
        .chain(std::iter::repeat_n(&b, shape.sites() - 1))
        .collect();
    kron_all(factors, shape.budget())
}

/// Coefficients `d^{-1/2} omega^{k(k+1)}` of `M^k` in the braid matrix.
pub fn braid_coefficients(d: usize) -> Result<Vec<Complex64>> {
    let roots = RootsOfUnity::new(d)?;
    let norm = 1.0 / (d as f64).sqrt();
    Ok((0..d as i64)
        .map(|k| roots.omega_pow(k * (k + 1)) * norm)
        .collect())
}

/// `S = d^{-1/2} sum_{k<d} omega^{k(k+1)} M^k`.
pub fn braid_matrix(shape: &QuditShape) -> Result<ComplexMatrix> {
    let m = m_matrix(shape)?;
    let dim = m.dim();
    let mut s = ComplexMatrix::zeros(dim);
    let mut power = ComplexMatrix::identity(dim);
    for (k, c) in braid_coefficients(shape.d())?.into_iter().enumerate() {
        if k > 0 {
            power = &power * &m;
        }
        s = &s + &power.scale(c);
    }
    Ok(s)
}

/// `s ⊗ I_d`, i.e. `s` acting on sites `1..N` of `N + 1`.
pub fn embed_left(s: &ComplexMatrix, d: usize, budget: usize) -> Result<ComplexMatrix> {
    kron(s, &ComplexMatrix::identity(d), budget)
}

/// `I_d ⊗ s`, i.e. `s` acting on sites `2..N+1` of `N + 1`.
pub fn embed_right(s: &ComplexMatrix, d: usize, budget: usize) -> Result<ComplexMatrix> {
    kron(&ComplexMatrix::identity(d), s, budget)
}

/// Checks `M^d = (-1)^{d-1} I` on `N` sites and the exchange relation
/// `M_{1..N} M_{2..N+1} = q M_{2..N+1} M_{1..N}` on `N + 1` sites.
pub fn verify_m_algebra(shape: &QuditShape, tol: f64) -> Result<VerificationReport> {
    shape.extended().dense_dim()?;
    let d = shape.d();
    let roots = RootsOfUnity::new(d)?;
    let m = m_matrix(shape)?;
    let sign = if d.is_multiple_of(2) { -1.0 } else { 1.0 };
    let id = ComplexMatrix::identity(m.dim());

    let left = embed_left(&m, d, shape.budget())?;
    let right = embed_right(&m, d, shape.budget())?;

    let mut report = VerificationReport::new();
    report.push(
        "M^d - (-1)^(d-1) I",
        matrix_residual(&m.pow(d), &id.scale(Complex64::new(sign, 0.0)))?,
        tol,
    );
    report.push(
        "M12 M23 - q M23 M12",
        matrix_residual(&(&left * &right), &(&right * &left).scale(roots.q()))?,
        tol,
    );
    Ok(report)
}

/// Dense check of the generalized braid relation on `N + 1` sites, plus
/// unitarity of `S` on `N` sites.
pub fn verify_braid_relation(shape: &QuditShape, tol: f64) -> Result<VerificationReport> {
    shape.extended().dense_dim()?;
    let d = shape.d();
    let s = braid_matrix(shape)?;
    let s12 = embed_left(&s, d, shape.budget())?;
    let s23 = embed_right(&s, d, shape.budget())?;
    let lhs = &(&s12 * &s23) * &s12;
    let rhs = &(&s23 * &s12) * &s23;

    let mut report = VerificationReport::new();
    report.push(
        "S12 S23 S12 - S23 S12 S23",
        matrix_residual(&lhs, &rhs)?,
        tol,
    );
    report.push("S'S - I", s.unitarity_residual(), tol);
    Ok(report)
}

/// Unitarity of `S` on `N` sites alone.
pub fn verify_unitarity(shape: &QuditShape, tol: f64) -> Result<VerificationReport> {
    let s = braid_matrix(shape)?;
    let mut report = VerificationReport::new();
    report.push("S'S - I", s.unitarity_residual(), tol);
    Ok(report)
}

/// Applies `M` to the `block` consecutive sites starting at `offset` of a
/// `total`-site register, without forming any matrix.
fn apply_m_block(
    v: &[Complex64],
    roots: &RootsOfUnity,
    total: usize,
    offset: usize,
    block: usize,
) -> Vec<Complex64> {
    let d = roots.d();
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    let place: Vec<usize> = (0..total).map(|s| d.pow((total - 1 - s) as u32)).collect();
    for (index, &amp) in v.iter().enumerate() {
        if amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mut target = index;
        let mut phase = Complex64::new(1.0, 0.0);
        for (j, &p) in place[offset..offset + block].iter().enumerate() {
            let k = (index / p) % d;
            let shifted = cyclic_sub(k, 1, d);
            target = target - k * p + shifted * p;
            if j == 0 {
                phase = roots.q_pow(k as i64 - 1);
            }
        }
        out[target] += phase * amp;
    }
    out
}

fn apply_s_block(
    v: &[Complex64],
    roots: &RootsOfUnity,
    coeffs: &[Complex64],
    total: usize,
    offset: usize,
    block: usize,
) -> Vec<Complex64> {
    let mut acc: Vec<Complex64> = v.iter().map(|&x| x * coeffs[0]).collect();
    let mut power = v.to_vec();
    for &c in &coeffs[1..] {
        power = apply_m_block(&power, roots, total, offset, block);
        for (a, p) in acc.iter_mut().zip(&power) {
            *a += c * p;
        }
    }
    acc
}

/// Matrix-free braid relation check on `samples` random basis vectors of
/// the `N + 1`-site register. Usable past the dense budget, up to the
/// state limit.
pub fn spot_check_braid_relation(
    shape: &QuditShape,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport> {
    if samples == 0 {
        return Err(Error::Argument("need at least one sample".into()));
    }
    let ext = shape.extended();
    let dim = ext.state_dim()?;
    let roots = RootsOfUnity::new(shape.d())?;
    let coeffs = braid_coefficients(shape.d())?;
    let (n, total) = (shape.sites(), ext.sites());
    let s12 = |v: &[Complex64]| apply_s_block(v, &roots, &coeffs, total, 0, n);
    let s23 = |v: &[Complex64]| apply_s_block(v, &roots, &coeffs, total, 1, n);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut relation: f64 = 0.0;
    let mut norm: f64 = 0.0;
    for _ in 0..samples {
        let mut e = vec![Complex64::new(0.0, 0.0); dim];
        e[rng.gen_range(0..dim)] = Complex64::new(1.0, 0.0);
        let lhs = s12(&s23(&s12(&e)));
        let rhs = s23(&s12(&s23(&e)));
        let diff = lhs
            .iter()
            .zip(&rhs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        relation = relation.max(diff);
        let len = lhs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        norm = norm.max((len - 1.0).abs());
    }
    let mut report = VerificationReport::new();
    report.push("S12 S23 S12 - S23 S12 S23 (sampled)", relation, tol);
    report.push("|S e| - 1 (sampled)", norm, tol);
    Ok(report)
}

/// `H = -i log S` on the principal branch, Hermitian, with `e^{iH} = S`.
pub fn hamiltonian_from_braid(s: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    principal_log_hermitian(s, tol)
}
