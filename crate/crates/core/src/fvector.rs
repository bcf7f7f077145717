//! Face-count vectors `(f_0, …, f_{d-1})` over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// The sequence of face counts of a `d`-polytope, one entry per dimension
/// `0..d`. Counts are big integers: the same type carries both enumerated
/// lattices (small) and closed-form values at dimension 100 (huge).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    counts: Vec<BigInt>,
}

impl FVector {
    pub fn new(counts: Vec<BigInt>) -> Self {
        FVector { counts }
    }

    pub fn from_usizes(counts: &[usize]) -> Self {
        FVector {
            counts: counts.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Dimension of the polytope this vector belongs to.
    pub fn dim(&self) -> usize {
        self.counts.len()
    }

    /// `f_k`, zero outside `0..d`.
    pub fn get(&self, k: usize) -> BigInt {
        self.counts.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// The reversal `(f_{d-1}, …, f_0)`, the f-vector of any dual polytope.
    pub fn reversed(&self) -> FVector {
        let mut counts = self.counts.clone();
        counts.reverse();
        FVector { counts }
    }

    /// `Σ (-1)^k f_k - (1 - (-1)^d)`; zero for every polytope.
    pub fn euler_residual(&self) -> BigInt {
        let d = self.counts.len();
        let mut sum = BigInt::zero();
        for (k, f) in self.counts.iter().enumerate() {
            if k % 2 == 0 {
                sum += f;
            } else {
                sum -= f;
            }
        }
        let rhs = if d % 2 == 0 {
            BigInt::zero()
        } else {
            BigInt::from(2)
        };
        sum - rhs
    }

    /// Non-negative `usize` view; panics if an entry does not fit. Intended
    /// for enumerated lattices, whose counts are always small.
    pub fn as_usizes(&self) -> Vec<usize> {
        self.counts
            .iter()
            .map(|c| usize::try_from(c).expect("face count fits in usize"))
            .collect()
    }
}

/// `Σ (-1)^k f_k - (1 - (-1)^d)` as a free function.
pub fn euler_residual(f: &FVector) -> BigInt {
    f.euler_residual()
}

fn fmt_tuple(counts: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in counts.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.counts, f)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.counts, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_residual_paper_rows() {
        // (7,11,6), (4,6,4) and the pyramid over a cube (9,20,18,7) all close.
        assert_eq!(FVector::from_usizes(&[7, 11, 6]).euler_residual(), BigInt::zero());
        assert_eq!(FVector::from_usizes(&[4, 6, 4]).euler_residual(), BigInt::zero());
        assert_eq!(
            FVector::from_usizes(&[9, 20, 18, 7]).euler_residual(),
            BigInt::zero()
        );
    }

    #[test]
    fn euler_residual_detects_bad_vector() {
        assert_ne!(FVector::from_usizes(&[7, 12, 6]).euler_residual(), BigInt::zero());
    }

    #[test]
    fn reversal() {
        let f = FVector::from_usizes(&[9, 19, 17, 7]);
        assert_eq!(f.reversed(), FVector::from_usizes(&[7, 17, 19, 9]));
        assert_eq!(format!("{f}"), "(9, 19, 17, 7)");
    }
}
