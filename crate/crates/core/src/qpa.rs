//! Clock and shift generators of the quantum plane algebra `XZ = qZX` in
//! the cyclic `d`-dimensional representation, the Fourier operator that
//! intertwines them, and the derived pair `A = ZX`, `B = X`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::tensor::{matrix_residual, ComplexMatrix};

/// `q = e^{2 pi i / d}` and the braid phase `omega` (`e^{i pi / d}` for even
/// `d`, `e^{2 pi i / d}` for odd `d`). Powers are taken from exact angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootsOfUnity {
    d: usize,
}

impl RootsOfUnity {
    pub fn new(d: usize) -> Result<Self> {
        check_level(d)?;
        Ok(Self { d })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> Complex64 {
        self.q_pow(1)
    }

    pub fn omega(&self) -> Complex64 {
        self.omega_pow(1)
    }

    /// `q^n`, reducing `n` mod `d` before converting to an angle.
    pub fn q_pow(&self, n: i64) -> Complex64 {
        let d = self.d as i64;
        let r = n.rem_euclid(d);
        Complex64::from_polar(1.0, 2.0 * PI * r as f64 / d as f64)
    }

    /// `omega^n`, reducing `n` mod the order of `omega` (`2d` or `d`).
    pub fn omega_pow(&self, n: i64) -> Complex64 {
        let d = self.d as i64;
        if d % 2 == 0 {
            let r = n.rem_euclid(2 * d);
            Complex64::from_polar(1.0, PI * r as f64 / d as f64)
        } else {
            self.q_pow(n)
        }
    }
}

fn check_level(d: usize) -> Result<()> {
    if d < 2 {
        Err(Error::Argument(format!(
            "level count d must be >= 2, got {d}"
        )))
    } else {
        Ok(())
    }
}

/// `k ⊖ l` on `{0, ..., d-1}`.
#[inline]
pub fn cyclic_sub(k: usize, l: usize, d: usize) -> usize {
    (k + d - l % d) % d
}

/// Shift `X|k> = |k ⊖ 1>`.
pub fn generator_x(d: usize) -> Result<ComplexMatrix> {
    check_level(d)?;
    let mut x = ComplexMatrix::zeros(d);
    for k in 0..d {
        x[(cyclic_sub(k, 1, d), k)] = Complex64::new(1.0, 0.0);
    }
    Ok(x)
}

/// Clock `Z = diag(1, q, ..., q^{d-1})`.
pub fn generator_z(d: usize) -> Result<ComplexMatrix> {
    let roots = RootsOfUnity::new(d)?;
    let diag: Vec<Complex64> = (0..d as i64).map(|k| roots.q_pow(k)).collect();
    Ok(ComplexMatrix::from_diagonal(&diag))
}

/// `F = d^{-1/2} sum_{k,k'} q^{-k k'} |k><k'|`.
pub fn fourier(d: usize) -> Result<ComplexMatrix> {
    let roots = RootsOfUnity::new(d)?;
    let norm = 1.0 / (d as f64).sqrt();
    Ok(ComplexMatrix::from_fn(d, |r, c| {
        roots.q_pow(-((r * c) as i64)) * norm
    }))
}

/// `A = ZX`, so `A|k> = q^{k-1} |k ⊖ 1>`.
pub fn matrix_a(d: usize) -> Result<ComplexMatrix> {
    Ok(&generator_z(d)? * &generator_x(d)?)
}

/// `B = X`.
pub fn matrix_b(d: usize) -> Result<ComplexMatrix> {
    generator_x(d)
}

/// Residuals of the defining relations of the generators and of `A`, `B`.
pub fn verify_qpa(d: usize, tol: f64) -> Result<VerificationReport> {
    let roots = RootsOfUnity::new(d)?;
    let q = roots.q();
    let x = generator_x(d)?;
    let z = generator_z(d)?;
    let f = fourier(d)?;
    let a = matrix_a(d)?;
    let b = matrix_b(d)?;
    let id = ComplexMatrix::identity(d);
    let sign = if d.is_multiple_of(2) { -1.0 } else { 1.0 };

    let mut report = VerificationReport::new();
    report.push(
        "XZ - qZX",
        matrix_residual(&(&x * &z), &(&z * &x).scale(q))?,
        tol,
    );
    report.push("X^d - I", matrix_residual(&x.pow(d), &id)?, tol);
    report.push("Z^d - I", matrix_residual(&z.pow(d), &id)?, tol);
    report.push(
        "X - F'ZF",
        matrix_residual(&x, &(&(&f.adjoint() * &z) * &f))?,
        tol,
    );
    report.push(
        "A^d - (-1)^(d-1) I",
        matrix_residual(&a.pow(d), &id.scale(Complex64::new(sign, 0.0)))?,
        tol,
    );
    report.push(
        "AB - q^-1 BA",
        matrix_residual(&(&a * &b), &(&b * &a).scale(roots.q_pow(-1)))?,
        tol,
    );
    Ok(report)
}
