//! Adjacency matrix stored in both row-major and column-major compressed
//! form, so either traversal direction reads contiguous memory.

use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// One compressed form: `offsets` of length `major + 1`, with sorted unique
/// minor indices and values per major slot.
#[derive(Clone, Debug, PartialEq)]
pub struct CompressedForm<T: Scalar> {
    pub offsets: Vec<usize>,
    pub indices: Vec<usize>,
    pub values: Vec<T>,
}

impl<T: Scalar> CompressedForm<T> {
    fn from_sorted_triples(triples: &[(usize, usize, T)], major_dim: usize) -> Self {
        let mut offsets = vec![0usize; major_dim + 1];
        for &(maj, _, _) in triples {
            offsets[maj + 1] += 1;
        }
        for i in 0..major_dim {
            offsets[i + 1] += offsets[i];
        }
        let indices = triples.iter().map(|&(_, min, _)| min).collect();
        let values = triples.iter().map(|&(_, _, v)| v).collect();
        CompressedForm {
            offsets,
            indices,
            values,
        }
    }

    #[inline]
    pub fn slot(&self, major: usize) -> (&[usize], &[T]) {
        let lo = self.offsets[major];
        let hi = self.offsets[major + 1];
        (&self.indices[lo..hi], &self.values[lo..hi])
    }

    #[inline]
    pub fn slot_nnz(&self, major: usize) -> usize {
        self.offsets[major + 1] - self.offsets[major]
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }
}

/// Adjacency matrix kept in both compressed forms.
#[derive(Clone, Debug)]
pub struct DualMatrix<T: Scalar> {
    num_rows: usize,
    num_cols: usize,
    row_form: CompressedForm<T>,
    col_form: CompressedForm<T>,
    symmetric: bool,
}

impl<T: Scalar> DualMatrix<T> {
    /// Build both forms from an edge list. Explicit identity-valued entries
    /// are dropped; duplicate (src, dst) pairs are rejected.
    pub fn from_edges(
        edges: &[(usize, usize, T)],
        num_rows: usize,
        num_cols: usize,
        identity: T,
    ) -> Result<Self> {
        for &(src, dst, _) in edges {
            if src >= num_rows || dst >= num_cols {
                return Err(Error::EdgeOutOfBounds {
                    src,
                    dst,
                    num_rows,
                    num_cols,
                });
            }
        }
        let mut by_row: Vec<(usize, usize, T)> = edges
            .iter()
            .copied()
            .filter(|&(_, _, v)| v != identity)
            .collect();
        by_row.sort_unstable_by_key(|&(s, d, _)| (s, d));
        for w in by_row.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::DuplicateEdge {
                    src: w[0].0,
                    dst: w[0].1,
                });
            }
        }
        let mut by_col: Vec<(usize, usize, T)> =
            by_row.iter().map(|&(s, d, v)| (d, s, v)).collect();
        by_col.sort_unstable_by_key(|&(d, s, _)| (d, s));

        let row_form = CompressedForm::from_sorted_triples(&by_row, num_rows);
        let col_form = CompressedForm::from_sorted_triples(&by_col, num_cols);

        // A is symmetric exactly when its CSR and CSC arrays coincide.
        let symmetric = num_rows == num_cols && row_form == col_form;

        Ok(DualMatrix {
            num_rows,
            num_cols,
            row_form,
            col_form,
            symmetric,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    pub fn nnz(&self) -> usize {
        self.row_form.nnz()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Average nonzeros per row, nnz/M.
    pub fn avg_degree(&self) -> f64 {
        self.nnz() as f64 / self.num_rows.max(1) as f64
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.row_form.slot_nnz(i)
    }

    pub fn in_degree(&self, j: usize) -> usize {
        self.col_form.slot_nnz(j)
    }

    /// View of the matrix as given.
    pub fn view(&self) -> MatrixView<'_, T> {
        MatrixView {
            rows: &self.row_form,
            cols: &self.col_form,
            num_rows: self.num_rows,
            num_cols: self.num_cols,
        }
    }

    /// Transposed view: rows become columns. No data is copied; the dual
    /// storage already holds both orientations.
    pub fn t(&self) -> MatrixView<'_, T> {
        MatrixView {
            rows: &self.col_form,
            cols: &self.row_form,
            num_rows: self.num_cols,
            num_cols: self.num_rows,
        }
    }

    /// Enumerate all (row, col, value) triples from the row form.
    pub fn triples(&self) -> Vec<(usize, usize, T)> {
        let mut out = Vec::with_capacity(self.nnz());
        for i in 0..self.num_rows {
            let (idx, vals) = self.row_form.slot(i);
            for (&j, &v) in idx.iter().zip(vals) {
                out.push((i, j, v));
            }
        }
        out
    }
}

/// Borrowed orientation of a [`DualMatrix`]; kernels operate on this.
#[derive(Clone, Copy)]
pub struct MatrixView<'a, T: Scalar> {
    rows: &'a CompressedForm<T>,
    cols: &'a CompressedForm<T>,
    num_rows: usize,
    num_cols: usize,
}

impl<'a, T: Scalar> MatrixView<'a, T> {
    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.nnz()
    }

    #[inline]
    pub fn row(&self, i: usize) -> (&'a [usize], &'a [T]) {
        self.rows.slot(i)
    }

    #[inline]
    pub fn col(&self, j: usize) -> (&'a [usize], &'a [T]) {
        self.cols.slot(j)
    }

    #[inline]
    pub fn row_nnz(&self, i: usize) -> usize {
        self.rows.slot_nnz(i)
    }

    #[inline]
    pub fn col_nnz(&self, j: usize) -> usize {
        self.cols.slot_nnz(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> DualMatrix<bool> {
        // 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3
        DualMatrix::from_edges(
            &[(0, 1, true), (0, 2, true), (1, 3, true), (2, 3, true)],
            4,
            4,
            false,
        )
        .unwrap()
    }

    #[test]
    fn diamond_builds_both_forms() {
        let a = diamond();
        assert_eq!(a.nnz(), 4);
        let (r0, _) = a.view().row(0);
        assert_eq!(r0, &[1, 2]);
        let (c3, _) = a.view().col(3);
        assert_eq!(c3, &[1, 2]);
        // brute-force check: the transposed view's rows are the columns
        let (t3, _) = a.t().row(3);
        assert_eq!(t3, &[1, 2]);
    }

    #[test]
    fn empty_edge_list() {
        let a = DualMatrix::<bool>::from_edges(&[], 3, 3, false).unwrap();
        assert_eq!(a.nnz(), 0);
        assert!(a.view().rows.offsets.iter().all(|&o| o == 0));
    }

    #[test]
    fn symmetric_pair_detected() {
        let a = DualMatrix::from_edges(&[(0, 1, true), (1, 0, true)], 2, 2, false).unwrap();
        assert!(a.is_symmetric());
        assert!(!diamond().is_symmetric());
    }

    #[test]
    fn out_of_bounds_edge_rejected() {
        let err = DualMatrix::from_edges(&[(0, 5, true)], 3, 3, false).unwrap_err();
        assert!(matches!(err, Error::EdgeOutOfBounds { dst: 5, .. }));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err =
            DualMatrix::from_edges(&[(0, 1, true), (0, 1, true)], 3, 3, false).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { src: 0, dst: 1 }));
    }

    #[test]
    fn identity_valued_entries_dropped() {
        let a = DualMatrix::from_edges(&[(0, 1, 5i64), (1, 2, 0i64)], 3, 3, 0).unwrap();
        assert_eq!(a.nnz(), 1);
    }

    #[test]
    fn dual_consistency_triples_match() {
        let a = diamond();
        let mut from_rows = a.triples();
        let mut from_cols: Vec<(usize, usize, bool)> = (0..a.num_cols())
            .flat_map(|j| {
                let (idx, vals) = a.view().col(j);
                idx.iter()
                    .zip(vals)
                    .map(|(&i, &v)| (i, j, v))
                    .collect::<Vec<_>>()
            })
            .collect();
        from_rows.sort_unstable_by_key(|&(i, j, _)| (i, j));
        from_cols.sort_unstable_by_key(|&(i, j, _)| (i, j));
        assert_eq!(from_rows, from_cols);
    }

    #[test]
    fn avg_degree() {
        assert!((diamond().avg_degree() - 1.0).abs() < 1e-12);
    }
}
