//! The two frontier representations: a sorted index-value list and a full
//! array with identity-as-absent, plus the sparse/dense switching rule.

use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Sorted list of (index, value) pairs; values never hold the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<T: Scalar> {
    len: usize,
    entries: Vec<(usize, T)>,
}

impl<T: Scalar> SparseVector<T> {
    pub fn new(len: usize) -> Self {
        SparseVector {
            len,
            entries: Vec::new(),
        }
    }

    /// Build from entries, dropping identity values. Indices must be strictly
    /// increasing and in range.
    pub fn from_entries(len: usize, entries: Vec<(usize, T)>, identity: T) -> Result<Self> {
        let mut prev: Option<usize> = None;
        for &(i, _) in &entries {
            if i >= len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    got: i,
                    context: "sparse vector index",
                });
            }
            if let Some(p) = prev {
                if i <= p {
                    return Err(Error::DimensionMismatch {
                        expected: p + 1,
                        got: i,
                        context: "sparse vector indices must strictly increase",
                    });
                }
            }
            prev = Some(i);
        }
        let entries = entries.into_iter().filter(|&(_, v)| v != identity).collect();
        Ok(SparseVector { len, entries })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&(i, _)| i)
    }
}

/// Full array of domain values where the identity denotes "absent".
#[derive(Clone, Debug, PartialEq)]
pub struct DenseVector<T: Scalar> {
    identity: T,
    values: Vec<T>,
    nnz: usize,
}

impl<T: Scalar> DenseVector<T> {
    pub fn new(len: usize, identity: T) -> Self {
        DenseVector {
            identity,
            values: vec![identity; len],
            nnz: 0,
        }
    }

    pub fn from_values(values: Vec<T>, identity: T) -> Self {
        let nnz = values.iter().filter(|&&v| v != identity).count();
        DenseVector {
            identity,
            values,
            nnz,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn identity(&self) -> T {
        self.identity
    }

    /// Count of non-identity entries, maintained across mutations.
    pub fn nnz(&self) -> usize {
        self.nnz
    }

    #[inline]
    pub fn get(&self, i: usize) -> T {
        self.values[i]
    }

    #[inline]
    pub fn is_identity(&self, i: usize) -> bool {
        self.values[i] == self.identity
    }

    pub fn set(&mut self, i: usize, value: T) {
        let was = self.values[i] != self.identity;
        let is = value != self.identity;
        self.values[i] = value;
        match (was, is) {
            (false, true) => self.nnz += 1,
            (true, false) => self.nnz -= 1,
            _ => {}
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

/// Expand a sorted list into a full array; absent positions get the identity.
pub fn sparse_to_dense<T: Scalar>(v: &SparseVector<T>, identity: T) -> DenseVector<T> {
    let mut out = DenseVector::new(v.len(), identity);
    for &(i, val) in v.entries() {
        out.set(i, val);
    }
    out
}

/// Collapse a full array into its non-identity (index, value) pairs.
pub fn dense_to_sparse<T: Scalar>(v: &DenseVector<T>) -> SparseVector<T> {
    let entries = v
        .values()
        .iter()
        .enumerate()
        .filter(|&(_, val)| *val != v.identity())
        .map(|(i, &val)| (i, val))
        .collect();
    SparseVector {
        len: v.len(),
        entries,
    }
}

/// A frontier in whichever format it currently lives.
#[derive(Clone, Debug, PartialEq)]
pub enum Vector<T: Scalar> {
    Sparse(SparseVector<T>),
    Dense(DenseVector<T>),
}

impl<T: Scalar> Vector<T> {
    pub fn len(&self) -> usize {
        match self {
            Vector::Sparse(v) => v.len(),
            Vector::Dense(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.nnz() == 0
    }

    pub fn nnz(&self) -> usize {
        match self {
            Vector::Sparse(v) => v.nnz(),
            Vector::Dense(v) => v.nnz(),
        }
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self, Vector::Sparse(_))
    }

    pub fn into_sparse(self) -> SparseVector<T> {
        match self {
            Vector::Sparse(v) => v,
            Vector::Dense(v) => dense_to_sparse(&v),
        }
    }

    pub fn into_dense(self, identity: T) -> DenseVector<T> {
        match self {
            Vector::Sparse(v) => sparse_to_dense(&v, identity),
            Vector::Dense(v) => v,
        }
    }

    /// Sorted indices of the non-identity entries.
    pub fn support(&self) -> Vec<usize> {
        match self {
            Vector::Sparse(v) => v.indices().collect(),
            Vector::Dense(v) => (0..v.len()).filter(|&i| !v.is_identity(i)).collect(),
        }
    }
}

/// Format-switch rule: flip representation only when the nonzero ratio has
/// crossed `switchpoint` *and* nnz moved in the matching direction since the
/// previous call. Ties keep the current format. Returns the (possibly
/// converted) vector and the new `prev_nnz`.
pub fn convert<T: Scalar>(
    v: Vector<T>,
    identity: T,
    switchpoint: f64,
    prev_nnz: usize,
) -> Result<(Vector<T>, usize)> {
    if !(switchpoint > 0.0 && switchpoint <= 1.0) {
        return Err(Error::BadSwitchpoint(switchpoint));
    }
    let len = v.len().max(1);
    let nnz = v.nnz();
    let ratio = nnz as f64 / len as f64;
    let out = match v {
        Vector::Dense(d) if ratio < switchpoint && nnz < prev_nnz => {
            Vector::Sparse(dense_to_sparse(&d))
        }
        Vector::Sparse(s) if ratio > switchpoint && nnz > prev_nnz => {
            Vector::Dense(sparse_to_dense(&s, identity))
        }
        other => other,
    };
    Ok((out, nnz))
}
