//! Output-sparsity mask in SPA style: a dense indicator paired with a cached
//! sorted list of the blocked (identity-valued) positions.
//!
//! The cache pays its O(M) construction once; a traversal then shrinks it
//! incrementally as vertices get visited, so masked pull iterations can walk
//! only the still-blocked candidates.

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::vector::{DenseVector, SparseVector, Vector};

#[derive(Clone, Debug)]
pub struct Mask<T: Scalar> {
    indicator: DenseVector<T>,
    complement_list: Vec<usize>,
    stale: bool,
}

impl<T: Scalar> Mask<T> {
    /// Wrap an indicator vector and cache where its identity entries sit.
    pub fn from_indicator(indicator: DenseVector<T>) -> Self {
        let complement_list = (0..indicator.len())
            .filter(|&i| indicator.is_identity(i))
            .collect();
        Mask {
            indicator,
            complement_list,
            stale: false,
        }
    }

    pub fn len(&self) -> usize {
        self.indicator.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indicator.is_empty()
    }

    pub fn identity(&self) -> T {
        self.indicator.identity()
    }

    pub fn indicator(&self) -> &DenseVector<T> {
        &self.indicator
    }

    pub fn nnz(&self) -> usize {
        self.indicator.nnz()
    }

    pub fn is_stale(&self) -> bool {
        self.stale
    }

    /// Whether index `i` lets a result through, honoring the structural
    /// complement switch.
    #[inline]
    pub fn passes(&self, i: usize, scmp: bool) -> bool {
        (!self.indicator.is_identity(i)) ^ scmp
    }

    /// Cached sorted indices where the indicator holds the identity.
    /// Valid only while not stale.
    pub fn complement_list(&self) -> Option<&[usize]> {
        if self.stale {
            None
        } else {
            Some(&self.complement_list)
        }
    }

    /// Point write that invalidates the cached complement.
    pub fn assign(&mut self, i: usize, value: T) {
        self.indicator.set(i, value);
        self.stale = true;
    }

    /// Write `value` at each index of a sorted batch, removing the indices
    /// from the cached complement in one merge pass. Keeps the cache fresh.
    pub fn assign_batch(&mut self, sorted_indices: &[usize], value: T) {
        debug_assert!(sorted_indices.windows(2).all(|w| w[0] < w[1]));
        for &i in sorted_indices {
            self.indicator.set(i, value);
        }
        if self.stale {
            return;
        }
        if value == self.indicator.identity() {
            // batch writes of the identity would grow the complement; rebuild
            self.rebuild_complement();
            return;
        }
        let mut kept = Vec::with_capacity(self.complement_list.len());
        let mut cursor = sorted_indices.iter().peekable();
        for &c in &self.complement_list {
            while let Some(&&r) = cursor.peek() {
                if r < c {
                    cursor.next();
                } else {
                    break;
                }
            }
            if cursor.peek() == Some(&&c) {
                continue;
            }
            kept.push(c);
        }
        self.complement_list = kept;
    }

    /// Recompute the complement cache by full scan.
    pub fn rebuild_complement(&mut self) {
        self.complement_list = (0..self.indicator.len())
            .filter(|&i| self.indicator.is_identity(i))
            .collect();
        self.stale = false;
    }
}

/// Filter a vector through a mask: entries whose position fails the pass rule
/// become the semiring identity. Output format matches the input format.
pub fn elementwise_mask_apply<T: Scalar, T2: Scalar>(
    w: &Vector<T>,
    m: &Mask<T2>,
    scmp: bool,
    semiring_identity: T,
) -> Result<Vector<T>> {
    if w.len() != m.len() {
        return Err(Error::DimensionMismatch {
            expected: m.len(),
            got: w.len(),
            context: "mask apply",
        });
    }
    Ok(match w {
        Vector::Dense(d) => {
            let values = (0..d.len())
                .map(|i| {
                    if m.passes(i, scmp) {
                        d.get(i)
                    } else {
                        semiring_identity
                    }
                })
                .collect();
            Vector::Dense(DenseVector::from_values(values, semiring_identity))
        }
        Vector::Sparse(s) => {
            let entries: Vec<(usize, T)> = s
                .entries()
                .iter()
                .copied()
                .filter(|&(i, _)| m.passes(i, scmp))
                .collect();
            Vector::Sparse(SparseVector::from_entries(
                s.len(),
                entries,
                semiring_identity,
            )?)
        }
    })
}
