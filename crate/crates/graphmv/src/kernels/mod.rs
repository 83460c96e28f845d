//! The four matvec variants and the dispatcher that picks between them.
//!
//! Every kernel charges its work to an [`AccessCounter`] under the RAM
//! model: one matrix read per stored nonzero touched, one vector read per
//! input-vector fetch, merge moves for the column gather, and one mask check
//! per mask-entry test. The counts are exact, not sampled, so the cost model
//! can be asserted against them.

mod merge;

pub use merge::multiway_merge;

use crate::algebra::{Monoid, Scalar, Semiring};
use crate::descriptor::{Descriptor, Direction};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::matrix::{DualMatrix, MatrixView};
use crate::vector::{convert, DenseVector, SparseVector, Vector};
use rayon::prelude::*;

/// Exact RAM-model instrumentation for one kernel call (or a sum of calls).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AccessCounter {
    /// Index or value fetches of stored matrix nonzeros.
    pub matrix_reads: u64,
    /// Element moves through the multiway merge.
    pub merge_comparisons: u64,
    /// Mask-entry tests.
    pub mask_checks: u64,
    /// Input-vector element fetches.
    pub vector_reads: u64,
}

impl AccessCounter {
    pub fn total(&self) -> u64 {
        self.matrix_reads + self.merge_comparisons + self.mask_checks + self.vector_reads
    }

    pub fn accumulate(&mut self, other: &AccessCounter) {
        self.matrix_reads += other.matrix_reads;
        self.merge_comparisons += other.merge_comparisons;
        self.mask_checks += other.mask_checks;
        self.vector_reads += other.vector_reads;
    }
}

/// Edge orientation for [`frontier_edge_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeDirection {
    Outgoing,
    Incoming,
}

/// Total edges leaving (or entering) the support of `v`: Σ degree(i) over
/// the non-identity positions.
pub fn frontier_edge_count<T: Scalar>(
    a: &DualMatrix<T>,
    v: &Vector<T>,
    direction: EdgeDirection,
) -> Result<u64> {
    let dim = match direction {
        EdgeDirection::Outgoing => a.num_rows(),
        EdgeDirection::Incoming => a.num_cols(),
    };
    if v.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: v.len(),
            context: "frontier edge count",
        });
    }
    let degree = |i: usize| match direction {
        EdgeDirection::Outgoing => a.out_degree(i),
        EdgeDirection::Incoming => a.in_degree(i),
    };
    Ok(v.support().iter().map(|&i| degree(i) as u64).sum())
}

fn check_row_dims<T: Scalar>(a: &MatrixView<T>, x_len: usize) -> Result<()> {
    if x_len != a.num_cols() {
        return Err(Error::DimensionMismatch {
            expected: a.num_cols(),
            got: x_len,
            context: "matvec input length",
        });
    }
    Ok(())
}

/// Row-based matvec: output(i) = ⊕ over stored A(i, j) of A(i, j) ⊗ x(j).
///
/// Touches every stored nonzero regardless of the sparsity of `x`, so
/// `matrix_reads` grows by exactly nnz(A). Folds ascend by column index.
pub fn row_mxv<T: Scalar>(
    a: &MatrixView<T>,
    x: &DenseVector<T>,
    s: &Semiring<T>,
    c: &mut AccessCounter,
) -> Result<DenseVector<T>> {
    check_row_dims(a, x.len())?;
    let ident = s.identity();
    let values: Vec<T> = (0..a.num_rows())
        .into_par_iter()
        .map(|i| {
            let (idx, vals) = a.row(i);
            let mut acc = ident;
            for (&j, &aij) in idx.iter().zip(vals) {
                let xj = x.get(j);
                if xj != ident {
                    acc = s.combine(acc, s.multiply(aij, xj));
                }
            }
            acc
        })
        .collect();
    c.matrix_reads += a.nnz() as u64;
    c.vector_reads += a.nnz() as u64;
    Ok(DenseVector::from_values(values, ident))
}

/// Row-based masked matvec: the row fold runs only where the mask passes;
/// blocked rows cost nothing and produce the identity.
///
/// `candidates`, when given, must equal the pass-set of `(m, desc.scmp)`;
/// it replaces the full mask scan so `mask_checks` grows by its length
/// only. With the early-exit toggle (and a semiring that supports it) each
/// row fold stops at its first contribution.
#[allow(clippy::too_many_arguments)]
pub fn row_masked_mxv<T: Scalar, T2: Scalar>(
    a: &MatrixView<T>,
    x: &DenseVector<T>,
    m: &Mask<T2>,
    desc: &Descriptor,
    s: &Semiring<T>,
    c: &mut AccessCounter,
    candidates: Option<&[usize]>,
    prev: Option<(&DenseVector<T>, Option<&Monoid<T>>)>,
) -> Result<DenseVector<T>> {
    check_row_dims(a, x.len())?;
    if m.len() != a.num_rows() {
        return Err(Error::DimensionMismatch {
            expected: a.num_rows(),
            got: m.len(),
            context: "mask length",
        });
    }
    let ident = s.identity();
    // unsupported semirings ignore the toggle; callers record that in traces
    let early = desc.toggles.early_exit && s.supports_early_exit();

    let pass_list: Vec<usize> = match candidates {
        Some(cand) => {
            c.mask_checks += cand.len() as u64;
            cand.to_vec()
        }
        None => {
            c.mask_checks += m.len() as u64;
            (0..a.num_rows())
                .filter(|&i| m.passes(i, desc.scmp))
                .collect()
        }
    };

    let folds: Vec<(T, u64)> = pass_list
        .par_iter()
        .map(|&i| {
            let (idx, vals) = a.row(i);
            let mut acc = ident;
            let mut touched = 0u64;
            for (&j, &aij) in idx.iter().zip(vals) {
                touched += 1;
                let xj = x.get(j);
                if xj != ident {
                    acc = s.combine(acc, s.multiply(aij, xj));
                    if early {
                        break;
                    }
                }
            }
            (acc, touched)
        })
        .collect();

    let mut out = DenseVector::new(a.num_rows(), ident);
    for (&i, &(value, touched)) in pass_list.iter().zip(&folds) {
        c.matrix_reads += touched;
        c.vector_reads += touched;
        let value = if desc.accum {
            match prev {
                Some((w, op)) => op.unwrap_or(s.add()).combine(w.get(i), value),
                None => value,
            }
        } else {
            value
        };
        out.set(i, value);
    }
    Ok(out)
}

/// Column-based matvec: gather the columns selected by the sparse input,
/// scale them with ⊗, multiway-merge, then ⊕-reduce equal indices.
///
/// `matrix_reads` grows by the gathered element count (Σ nnz of frontier
/// columns); `merge_comparisons` by the merge moves, halved when the
/// structure-only toggle applies (indices only travel through the merge).
pub fn col_mxv<T: Scalar>(
    a: &MatrixView<T>,
    x: &SparseVector<T>,
    s: &Semiring<T>,
    desc: &Descriptor,
    c: &mut AccessCounter,
) -> Result<SparseVector<T>> {
    check_row_dims(a, x.len())?;
    let ident = s.identity();

    let lists: Vec<Vec<(usize, T)>> = x
        .entries()
        .par_iter()
        .map(|&(i, xi)| {
            let (idx, vals) = a.col(i);
            idx.iter()
                .zip(vals)
                .map(|(&r, &aij)| (r, s.multiply(aij, xi)))
                .collect()
        })
        .collect();
    let gathered: usize = lists.iter().map(Vec::len).sum();
    c.matrix_reads += gathered as u64;
    c.vector_reads += x.nnz() as u64;

    let (merged, moves) = multiway_merge(lists);
    let structure_only = desc.toggles.structure_only && s.is_boolean();
    c.merge_comparisons += if structure_only { moves / 2 } else { moves };

    // segmented reduction over runs of equal index, in merge order
    let mut entries: Vec<(usize, T)> = Vec::new();
    for (i, v) in merged {
        match entries.last_mut() {
            Some(last) if last.0 == i => last.1 = s.combine(last.1, v),
            _ => entries.push((i, v)),
        }
    }
    entries.retain(|&(_, v)| v != ident);
    SparseVector::from_entries(x.len(), entries, ident)
}

/// Column-based masked matvec: [`col_mxv`] followed by the mask filter.
/// Gather and merge costs are identical to the unmasked kernel; masking in
/// this direction saves nothing, it only drops failing output candidates.
pub fn col_masked_mxv<T: Scalar, T2: Scalar>(
    a: &MatrixView<T>,
    x: &SparseVector<T>,
    m: &Mask<T2>,
    desc: &Descriptor,
    s: &Semiring<T>,
    c: &mut AccessCounter,
    prev: Option<(&SparseVector<T>, Option<&Monoid<T>>)>,
) -> Result<SparseVector<T>> {
    if m.len() != a.num_rows() {
        return Err(Error::DimensionMismatch {
            expected: a.num_rows(),
            got: m.len(),
            context: "mask length",
        });
    }
    let w = col_mxv(a, x, s, desc, c)?;
    c.mask_checks += w.nnz() as u64;
    let ident = s.identity();
    let filtered: Vec<(usize, T)> = w
        .entries()
        .iter()
        .copied()
        .filter(|&(i, _)| m.passes(i, desc.scmp))
        .collect();
    let filtered = SparseVector::from_entries(x.len(), filtered, ident)?;
    if !desc.accum {
        return Ok(filtered);
    }
    match prev {
        None => Ok(filtered),
        Some((w0, op)) => {
            let op = op.unwrap_or(s.add());
            let (merged, _) = multiway_merge(vec![w0.entries().to_vec(), filtered.entries().to_vec()]);
            let mut entries: Vec<(usize, T)> = Vec::new();
            for (i, v) in merged {
                match entries.last_mut() {
                    Some(last) if last.0 == i => last.1 = op.combine(last.1, v),
                    _ => entries.push((i, v)),
                }
            }
            entries.retain(|&(_, v)| v != ident);
            SparseVector::from_entries(x.len(), entries, ident)
        }
    }
}

/// Format- and mask-driven dispatch to exactly one of the four kernels.
///
/// With `direction: Auto` the vector first goes through the convert rule
/// (tracking `prev_nnz`), then its format selects the kernel family; a
/// forced direction coerces the format instead.
pub fn mxv<T: Scalar, T2: Scalar>(
    mask: Option<&Mask<T2>>,
    a: &MatrixView<T>,
    v: Vector<T>,
    s: &Semiring<T>,
    desc: &Descriptor,
    c: &mut AccessCounter,
    prev_nnz: &mut usize,
) -> Result<Vector<T>> {
    if !(desc.switchpoint > 0.0 && desc.switchpoint <= 1.0) {
        return Err(Error::BadSwitchpoint(desc.switchpoint));
    }
    let v = match desc.direction {
        Direction::Push => {
            let sv = v.into_sparse();
            *prev_nnz = sv.nnz();
            Vector::Sparse(sv)
        }
        Direction::Pull => {
            let dv = v.into_dense(s.identity());
            *prev_nnz = dv.nnz();
            Vector::Dense(dv)
        }
        Direction::Auto => {
            let (v, p) = convert(v, s.identity(), desc.switchpoint, *prev_nnz)?;
            *prev_nnz = p;
            v
        }
    };
    match (v, mask) {
        (Vector::Sparse(sv), None) => Ok(Vector::Sparse(col_mxv(a, &sv, s, desc, c)?)),
        (Vector::Sparse(sv), Some(m)) => {
            Ok(Vector::Sparse(col_masked_mxv(a, &sv, m, desc, s, c, None)?))
        }
        (Vector::Dense(dv), None) => Ok(Vector::Dense(row_mxv(a, &dv, s, c)?)),
        (Vector::Dense(dv), Some(m)) => {
            // the cached complement is exactly the pass-set under scmp
            let candidates = if desc.scmp { m.complement_list() } else { None };
            Ok(Vector::Dense(row_masked_mxv(
                a, &dv, m, desc, s, c, candidates, None,
            )?))
        }
    }
}
