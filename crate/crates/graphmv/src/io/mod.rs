//! Graph ingestion: Matrix Market and plain edge-list files, dataset
//! preprocessing, and an RMAT generator for desk-scale scale-free inputs.

mod edgelist;
mod mtx;
mod rmat;

pub use edgelist::{load_edge_list, write_edge_list};
pub use mtx::{load_matrix_market, write_matrix_market};
pub use rmat::generate_rmat;

use crate::error::Result;
use crate::matrix::DualMatrix;

/// Raw (src, dst, weight) triples plus dimensions. Pattern inputs carry
/// weight 1 so the same loader serves BFS and SSSP.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeList {
    pub num_rows: usize,
    pub num_cols: usize,
    pub edges: Vec<(usize, usize, f64)>,
    /// True when the source had no stored values (pattern format).
    pub pattern: bool,
}

impl EdgeList {
    pub fn to_bool_matrix(&self) -> Result<DualMatrix<bool>> {
        let edges: Vec<(usize, usize, bool)> = self
            .edges
            .iter()
            .map(|&(s, d, _)| (s, d, true))
            .collect();
        DualMatrix::from_edges(&edges, self.num_rows, self.num_cols, false)
    }

    /// Weighted matrix over min-plus; zero-weight edges would be dropped as
    /// identity entries under plus-times, so they are clamped to 1.
    pub fn to_weighted_matrix(&self) -> Result<DualMatrix<f64>> {
        let edges: Vec<(usize, usize, f64)> = self
            .edges
            .iter()
            .map(|&(s, d, w)| (s, d, if w == 0.0 { 1.0 } else { w }))
            .collect();
        DualMatrix::from_edges(&edges, self.num_rows, self.num_cols, f64::INFINITY)
    }
}

/// Dataset preprocessing: drop self-loops, optionally mirror every edge,
/// collapse duplicates keeping the first weight, sort by (src, dst).
pub fn preprocess(e: &EdgeList, make_undirected: bool) -> EdgeList {
    let mut edges: Vec<(usize, usize, f64)> = Vec::with_capacity(e.edges.len() * 2);
    for &(s, d, w) in &e.edges {
        if s == d {
            continue;
        }
        edges.push((s, d, w));
        if make_undirected {
            edges.push((d, s, w));
        }
    }
    // stable by (src, dst) so "first weight" means first in input order
    edges.sort_by_key(|&(s, d, _)| (s, d));
    edges.dedup_by_key(|&mut (s, d, _)| (s, d));
    EdgeList {
        num_rows: e.num_rows,
        num_cols: e.num_cols,
        edges,
        pattern: e.pattern,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preprocess_removes_loops_and_duplicates() {
        let e = EdgeList {
            num_rows: 2,
            num_cols: 2,
            edges: vec![(0, 0, 1.0), (0, 1, 1.0), (0, 1, 1.0), (1, 0, 1.0)],
            pattern: true,
        };
        let out = preprocess(&e, true);
        assert_eq!(out.edges, vec![(0, 1, 1.0), (1, 0, 1.0)]);
    }

    #[test]
    fn preprocess_keeps_clean_list() {
        let e = EdgeList {
            num_rows: 3,
            num_cols: 3,
            edges: vec![(0, 1, 2.0), (1, 2, 3.0)],
            pattern: false,
        };
        assert_eq!(preprocess(&e, false).edges, e.edges);
    }

    #[test]
    fn preprocess_keeps_first_weight() {
        let e = EdgeList {
            num_rows: 2,
            num_cols: 2,
            edges: vec![(0, 1, 5.0), (0, 1, 9.0)],
            pattern: false,
        };
        assert_eq!(preprocess(&e, false).edges, vec![(0, 1, 5.0)]);
    }

    #[test]
    fn preprocess_idempotent_on_random_lists() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..100 {
            let n = rng.gen_range(1..20);
            let edges: Vec<(usize, usize, f64)> = (0..rng.gen_range(0..60))
                .map(|_| {
                    (
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(1..5) as f64,
                    )
                })
                .collect();
            let e = EdgeList {
                num_rows: n,
                num_cols: n,
                edges,
                pattern: false,
            };
            let once = preprocess(&e, true);
            let twice = preprocess(&once, true);
            assert_eq!(once, twice);
            // invariants: no loops, no duplicates, sorted
            assert!(once.edges.iter().all(|&(s, d, _)| s != d));
            assert!(once
                .edges
                .windows(2)
                .all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        }
    }
}
