//! Multi-indices: tuples of non-negative exponents with the usual
//! `|i|`, `i!` and componentwise binomial `C(i, l) = prod_k C(i_k, l_k)`.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{FockError, Result};

/// Largest single exponent accepted by exact factorial arithmetic.
pub const EXPONENT_CAP: u32 = 20;

/// An `n`-tuple of non-negative exponents.
///
/// Ordering is graded: total degree first, then reverse lexicographic on the
/// exponents, so that `(1,0)` precedes `(0,1)`. This is the canonical basis
/// order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex(SmallVec<[u32; 3]>);

impl MultiIndex {
    pub fn zeros(n: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, n))
    }

    pub fn from_slice(exponents: &[u32]) -> Self {
        MultiIndex(SmallVec::from_slice(exponents))
    }

    /// Unit vector `e_k` (zero-based `k`).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut m = Self::zeros(n);
        m.0[k] = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn get(&self, k: usize) -> u32 {
        self.0[k]
    }

    pub fn set(&mut self, k: usize, value: u32) {
        self.0[k] = value;
    }

    /// `self <= other` componentwise.
    pub fn le_componentwise(&self, other: &MultiIndex) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.dim(), other.dim());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All `l` with `l <= self` componentwise, in canonical order.
    pub fn lower_set(&self) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex(SmallVec::new())];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=e).map(move |v| {
                        let mut p = prefix.clone();
                        p.0.push(v);
                        p
                    })
                })
                .collect();
        }
        out.sort();
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(SmallVec::from_vec(v))
    }
}

fn check_dim(i: &MultiIndex, l: &MultiIndex) -> Result<()> {
    if i.dim() != l.dim() {
        return Err(FockError::DimensionMismatch {
            expected: i.dim(),
            found: l.dim(),
        });
    }
    Ok(())
}

/// Scalar binomial coefficient, exact.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

/// `C(i, l) = prod_k C(i_k, l_k)`.
pub fn mi_binomial(i: &MultiIndex, l: &MultiIndex) -> Result<u64> {
    check_dim(i, l)?;
    if !l.le_componentwise(i) {
        return Err(FockError::NotBelow {
            lower: l.as_slice().to_vec(),
            upper: i.as_slice().to_vec(),
        });
    }
    i.0.iter().zip(&l.0).try_fold(1u64, |acc, (&ik, &lk)| {
        acc.checked_mul(binomial(ik, lk))
            .ok_or(FockError::Overflow("multi-index binomial"))
    })
}

/// `i! = prod_k i_k!`, refusing any exponent above [`EXPONENT_CAP`].
pub fn mi_factorial(i: &MultiIndex) -> Result<u64> {
    i.0.iter().try_fold(1u64, |acc, &e| {
        if e > EXPONENT_CAP {
            return Err(FockError::ExponentCap {
                exponent: e,
                cap: EXPONENT_CAP,
            });
        }
        let f: u64 = (1..=e as u64).product();
        acc.checked_mul(f)
            .ok_or(FockError::Overflow("multi-index factorial"))
    })
}

/// Every multi-index of length `n` with `|alpha| <= max_degree`, in canonical order.
pub fn mi_enumerate(n: usize, max_degree: u32) -> Vec<MultiIndex> {
    fn compositions(n: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(total);
            out.push(MultiIndex::from_slice(prefix));
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            compositions(n, total - first, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for d in 0..=max_degree {
        compositions(n, d, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(v)
    }

    /// Pascal's triangle, built by addition only.
    fn pascal(rows: usize) -> Vec<Vec<u64>> {
        let mut t = vec![vec![1u64]];
        for r in 1..rows {
            let prev = &t[r - 1];
            let mut row = vec![1u64; r + 1];
            for k in 1..r {
                row[k] = prev[k - 1] + prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(mi_binomial(&mi(&[2, 1]), &mi(&[1, 1])).unwrap(), 2);
        assert_eq!(mi_binomial(&mi(&[3]), &mi(&[0])).unwrap(), 1);
        let p = pascal(8);
        let expected = p[4][2] * p[2][2] * p[1][0];
        assert_eq!(expected, 6);
        assert_eq!(
            mi_binomial(&mi(&[4, 2, 1]), &mi(&[2, 2, 0])).unwrap(),
            expected
        );
    }

    #[test]
    fn binomial_matches_pascal() {
        let p = pascal(30);
        for n in 0..30u32 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), p[n as usize][k as usize]);
            }
        }
    }

    #[test]
    fn binomial_errors() {
        assert!(matches!(
            mi_binomial(&mi(&[1, 2]), &mi(&[1])),
            Err(FockError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            mi_binomial(&mi(&[1, 2]), &mi(&[2, 0])),
            Err(FockError::NotBelow { .. })
        ));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(mi_factorial(&mi(&[0, 0])).unwrap(), 1);
        assert_eq!(mi_factorial(&mi(&[3, 2])).unwrap(), 12);
        assert_eq!(mi_factorial(&mi(&[5])).unwrap(), 120);
        assert_eq!(mi_factorial(&mi(&[20])).unwrap(), 2_432_902_008_176_640_000);
        assert!(matches!(
            mi_factorial(&mi(&[21])),
            Err(FockError::ExponentCap { exponent: 21, .. })
        ));
        assert!(matches!(
            mi_factorial(&mi(&[20, 20])),
            Err(FockError::Overflow(_))
        ));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            mi_enumerate(2, 1),
            vec![mi(&[0, 0]), mi(&[1, 0]), mi(&[0, 1])]
        );
        assert_eq!(mi_enumerate(2, 2).len(), 6);

        // Exhaustive oracle: scan the full cube and keep |alpha| <= 4.
        let mut count = 0;
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                for c in 0..=4u32 {
                    if a + b + c <= 4 {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 35);
        assert_eq!(mi_enumerate(3, 4).len(), count);
    }

    #[test]
    fn enumerate_is_sorted_and_unique() {
        for n in 1..=4 {
            for d in 0..=6 {
                let list = mi_enumerate(n, d);
                assert!(list.windows(2).all(|w| w[0] < w[1]));
                let expected = binomial(n as u32 + d, n as u32) as usize;
                assert_eq!(list.len(), expected);
            }
        }
    }

    #[test]
    fn binomial_row_sums() {
        for i in mi_enumerate(3, 12) {
            let total: u64 = i
                .lower_set()
                .iter()
                .map(|l| mi_binomial(&i, l).unwrap())
                .sum();
            assert_eq!(total, 1u64 << i.degree());
            assert_eq!(mi_binomial(&i, &i).unwrap(), 1);
            assert_eq!(mi_binomial(&i, &MultiIndex::zeros(3)).unwrap(), 1);
        }
    }
}
