use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense square matrix of complex doubles, stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &z) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = z;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.data[r * dim + c] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting non-square lengths
    /// and non-finite values.
    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Argument("matrix dimension must be positive".into()));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: data.len(),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Data("matrix contains non-finite entries".into()));
        }
        Ok(Self { dim, data })
    }

    /// Convenience for real-valued literals in row-major order.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        Self::from_fn(dim, |r, c| {
            assert_eq!(rows[r].len(), dim, "row {r} has wrong length");
            Complex64::new(rows[r][c], 0.0)
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.dim..(r + 1) * self.dim]
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.dim).map(|r| self.data[r * self.dim + c]).collect()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |r, c| self.data[c * n + r].conj())
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * z).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    /// Matrix product. Zero entries of the left operand are skipped, so
    /// products of monomial or few-term matrices stay cheap.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for (r, out_row) in out.chunks_exact_mut(n).enumerate() {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == ZERO {
                    continue;
                }
                let rhs_row = &rhs.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { dim: n, data: out })
    }

    /// `self^k` by repeated multiplication; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok(self
            .data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |(U†U - I)_ij|`.
    pub fn unitarity_residual(&self) -> f64 {
        let prod = &self.adjoint() * self;
        matrix_residual(&prod, &Self::identity(self.dim)).expect("same dimension")
    }

    /// `max |(H - H†)_ij|`.
    pub fn hermiticity_residual(&self) -> f64 {
        matrix_residual(self, &self.adjoint()).expect("same dimension")
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_residual() <= tol
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(r < self.dim && c < self.dim, "index out of bounds");
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(r < self.dim && c < self.dim, "index out of bounds");
        &mut self.data[r * self.dim + c]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on dimension mismatch; use [`ComplexMatrix::matmul`] for a
    /// fallible product.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Kronecker product `a ⊗ b`. The left factor indexes the most significant
/// digit of the product's row and column indices.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix, budget: usize) -> Result<ComplexMatrix> {
    let dim = a.dim as u128 * b.dim as u128;
    if dim > budget as u128 {
        return Err(Error::Budget { dim, budget });
    }
    let (da, db) = (a.dim, b.dim);
    let n = da * db;
    let mut out = vec![ZERO; n * n];
    for ar in 0..da {
        for ac in 0..da {
            let x = a.data[ar * da + ac];
            if x == ZERO {
                continue;
            }
            for br in 0..db {
                let row = ar * db + br;
                let base = row * n + ac * db;
                let src = &b.data[br * db..(br + 1) * db];
                for (o, &y) in out[base..base + db].iter_mut().zip(src) {
                    *o = x * y;
                }
            }
        }
    }
    Ok(ComplexMatrix { dim: n, data: out })
}

/// Kronecker product of a sequence of factors, left to right.
pub fn kron_all<'a, I>(factors: I, budget: usize) -> Result<ComplexMatrix>
where
    I: IntoIterator<Item = &'a ComplexMatrix>,
{
    let mut iter = factors.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Argument("kron_all needs at least one factor".into()))?;
    if first.dim > budget {
        return Err(Error::Budget {
            dim: first.dim as u128,
            budget,
        });
    }
    iter.try_fold(first.clone(), |acc, m| kron(&acc, m, budget))
}

/// Max-entry absolute difference `max_ij |a_ij - b_ij|`.
pub fn matrix_residual(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max))
}

/// `exp(i h)` for a Hermitian (or any) matrix by scaling and squaring of a
/// truncated Taylor series. Independent of any eigensolver.
pub fn expm_i(h: &ComplexMatrix) -> ComplexMatrix {
    let n = h.dim;
    let a = h.scale(Complex64::i());
    let norm = a
        .data
        .chunks_exact(n)
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0u32;
    let mut s = 1.0;
    while norm / s > 0.25 {
        s *= 2.0;
        squarings += 1;
    }
    let a = a.scale(Complex64::new(1.0 / s, 0.0));

    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=24 {
        term = (&term * &a).scale(Complex64::new(1.0 / k as f64, 0.0));
        result = &result + &term;
        if term.max_abs() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}
