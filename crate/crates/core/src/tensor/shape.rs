use crate::error::{Error, Result};

/// Default ceiling on `d^sites` for anything that builds a dense matrix.
pub const DEFAULT_BUDGET: usize = 4096;

/// Ceiling on amplitude count for closed-form state construction.
pub const STATE_LIMIT: usize = 10_000_000;

/// Local level count `d` and number of sites `N`, plus the dense-size budget.
///
/// Basis states `|k_1, ..., k_N>` are indexed big-endian: `k_1` is the most
/// significant digit, matching the left-factor-major order of [`kron`].
///
/// [`kron`]: crate::tensor::kron
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuditShape {
    d: usize,
    sites: usize,
    budget: usize,
}

impl QuditShape {
    pub fn new(d: usize, sites: usize) -> Result<Self> {
        Self::with_budget(d, sites, DEFAULT_BUDGET)
    }

    pub fn with_budget(d: usize, sites: usize, budget: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::Argument(format!(
                "level count d must be >= 2, got {d}"
            )));
        }
        if sites < 1 {
            return Err(Error::Argument("number of sites must be >= 1".into()));
        }
        if budget < 1 {
            return Err(Error::Argument("budget must be positive".into()));
        }
        Ok(Self { d, sites, budget })
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn sites(&self) -> usize {
        self.sites
    }

    #[inline]
    pub fn budget(&self) -> usize {
        self.budget
    }

    /// `d^sites` as an exact wide integer (saturating on absurd sizes).
    pub fn total_dim(&self) -> u128 {
        let mut acc: u128 = 1;
        for _ in 0..self.sites {
            acc = acc.saturating_mul(self.d as u128);
        }
        acc
    }

    /// `d^sites`, provided it fits the dense budget.
    pub fn dense_dim(&self) -> Result<usize> {
        self.dim_within(self.budget)
    }

    /// `d^sites`, provided it fits the closed-form state limit.
    pub fn state_dim(&self) -> Result<usize> {
        self.dim_within(STATE_LIMIT)
    }

    fn dim_within(&self, limit: usize) -> Result<usize> {
        let dim = self.total_dim();
        if dim > limit as u128 {
            Err(Error::Budget { dim, budget: limit })
        } else {
            Ok(dim as usize)
        }
    }

    /// Same `d` and budget, one more site.
    pub fn extended(&self) -> Self {
        Self {
            sites: self.sites + 1,
            ..*self
        }
    }

    pub fn check_digits(&self, digits: &[usize]) -> Result<()> {
        if digits.len() != self.sites {
            return Err(Error::Argument(format!(
                "expected {} digits, got {}",
                self.sites,
                digits.len()
            )));
        }
        match digits.iter().position(|&k| k >= self.d) {
            Some(position) => Err(Error::DigitOutOfRange {
                digit: digits[position],
                position,
                d: self.d,
            }),
            None => Ok(()),
        }
    }

    /// `sum_j k_j d^(N-j)` with the leftmost digit most significant.
    pub fn basis_index(&self, digits: &[usize]) -> Result<usize> {
        self.check_digits(digits)?;
        self.state_dim()?;
        Ok(digits.iter().fold(0, |acc, &k| acc * self.d + k))
    }

    /// Inverse of [`basis_index`](Self::basis_index).
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.sites];
        for slot in out.iter_mut().rev() {
            *slot = index % self.d;
            index /= self.d;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_index_examples() {
        let s = QuditShape::new(2, 2).unwrap();
        assert_eq!(s.basis_index(&[0, 0]).unwrap(), 0);
        let s = QuditShape::new(3, 2).unwrap();
        assert_eq!(s.basis_index(&[1, 2]).unwrap(), 5);
        let s = QuditShape::new(2, 3).unwrap();
        assert_eq!(s.basis_index(&[1, 1, 1]).unwrap(), 7);
    }

    #[test]
    fn digit_out_of_range() {
        let s = QuditShape::new(3, 2).unwrap();
        assert_eq!(
            s.basis_index(&[0, 5]),
            Err(Error::DigitOutOfRange {
                digit: 5,
                position: 1,
                d: 3
            })
        );
        assert!(s.basis_index(&[0]).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(QuditShape::new(1, 2).is_err());
        assert!(QuditShape::new(2, 0).is_err());
    }

    #[test]
    fn budget() {
        let s = QuditShape::new(9, 9).unwrap();
        assert_eq!(s.total_dim(), 387_420_489);
        assert!(matches!(s.dense_dim(), Err(Error::Budget { .. })));
        assert!(matches!(s.state_dim(), Err(Error::Budget { .. })));
        assert_eq!(QuditShape::new(4, 6).unwrap().dense_dim().unwrap(), 4096);
        assert!(QuditShape::new(4, 7).unwrap().dense_dim().is_err());
        assert_eq!(
            QuditShape::new(2, 20).unwrap().state_dim().unwrap(),
            1 << 20
        );
    }
}
