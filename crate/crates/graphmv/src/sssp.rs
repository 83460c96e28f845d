//! Single-source shortest paths as Bellman-Ford style relaxation over the
//! min-plus semiring, with a 2-phase direction switch: column-based while
//! the active set is small, row-based once it grows past alpha.
//!
//! Masking and early exit stay off here; both are boolean-only.

use crate::algebra::min_plus;
use crate::bfs::StepDirection;
use crate::descriptor::{Descriptor, Toggles};
use crate::error::{Error, Result};
use crate::kernels::{col_mxv, row_mxv, AccessCounter};
use crate::matrix::DualMatrix;
use crate::vector::{DenseVector, SparseVector};

#[derive(Clone, Copy, Debug)]
pub struct SsspOptions {
    /// Active-set fraction at which the traversal switches to row-based.
    pub alpha: f64,
}

impl Default for SsspOptions {
    fn default() -> Self {
        SsspOptions { alpha: 0.01 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SsspIteration {
    pub iteration: u32,
    pub direction: StepDirection,
    /// Vertices whose distance improved last iteration.
    pub active: usize,
    pub counter: AccessCounter,
}

#[derive(Clone, Debug)]
pub struct SsspResult {
    /// Shortest distances; unreachable vertices hold ∞.
    pub distances: Vec<f64>,
    pub trace: Vec<SsspIteration>,
}

pub fn sssp(a: &DualMatrix<f64>, source: usize, opts: &SsspOptions) -> Result<SsspResult> {
    let m = a.num_rows();
    if a.num_cols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: a.num_cols(),
            context: "sssp needs a square matrix",
        });
    }
    if source >= m {
        return Err(Error::SourceOutOfRange {
            vertex: source,
            num_vertices: m,
        });
    }
    for (src, dst, w) in a.triples() {
        if w < 0.0 {
            return Err(Error::NegativeWeight {
                src,
                dst,
                weight: w,
            });
        }
    }

    let s = min_plus::<f64>();
    let inf = f64::INFINITY;
    let desc = Descriptor {
        toggles: Toggles::all_off(),
        ..Descriptor::default()
    };
    let mut dist = vec![inf; m];
    dist[source] = 0.0;
    let mut active: Vec<(usize, f64)> = vec![(source, 0.0)];
    let mut direction = StepDirection::Push;
    let mut switched = false;
    let mut trace = Vec::new();

    // Bellman-Ford bound: at most M passes on any input
    for iteration in 1..=m as u32 {
        if active.is_empty() {
            break;
        }
        if !switched && active.len() as f64 / m as f64 > opts.alpha {
            direction = StepDirection::Pull;
            switched = true;
        }
        let active_count = active.len();
        let mut c = AccessCounter::default();
        let mut improved: Vec<(usize, f64)> = Vec::new();
        match direction {
            StepDirection::Push => {
                let x = SparseVector::from_entries(m, std::mem::take(&mut active), inf)?;
                let relaxed = col_mxv(&a.t(), &x, &s, &desc, &mut c)?;
                for &(i, v) in relaxed.entries() {
                    if v < dist[i] {
                        dist[i] = v;
                        improved.push((i, v));
                    }
                }
            }
            StepDirection::Pull => {
                let x = DenseVector::from_values(dist.clone(), inf);
                let relaxed = row_mxv(&a.t(), &x, &s, &mut c)?;
                for i in 0..m {
                    let v = relaxed.get(i);
                    if v < dist[i] {
                        dist[i] = v;
                        improved.push((i, v));
                    }
                }
            }
        }
        trace.push(SsspIteration {
            iteration,
            direction,
            active: active_count,
            counter: c,
        });
        active = improved;
    }

    Ok(SsspResult {
        distances: dist,
        trace,
    })
}

/// Binary-heap Dijkstra with the same ∞ sentinel; the independent oracle.
pub fn sssp_reference(a: &DualMatrix<f64>, source: usize) -> Result<Vec<f64>> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let m = a.num_rows();
    if source >= m {
        return Err(Error::SourceOutOfRange {
            vertex: source,
            num_vertices: m,
        });
    }

    #[derive(PartialEq)]
    struct Entry(f64, usize);
    impl Eq for Entry {}
    impl PartialOrd for Entry {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Entry {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
        }
    }

    let mut dist = vec![f64::INFINITY; m];
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(Entry(0.0, source)));
    while let Some(Reverse(Entry(d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        let (idx, ws) = a.view().row(u);
        for (&v, &w) in idx.iter().zip(ws) {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse(Entry(nd, v)));
            }
        }
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn diamond_unit() -> DualMatrix<f64> {
        DualMatrix::from_edges(
            &[(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)],
            4,
            4,
            0.0,
        )
        .unwrap()
    }

    #[test]
    fn diamond_distances() {
        let a = diamond_unit();
        let res = sssp(&a, 0, &SsspOptions::default()).unwrap();
        assert_eq!(res.distances, vec![0.0, 1.0, 1.0, 2.0]);
        assert_eq!(sssp_reference(&a, 0).unwrap(), vec![0.0, 1.0, 1.0, 2.0]);
    }

    #[test]
    fn single_vertex() {
        let a = DualMatrix::<f64>::from_edges(&[], 1, 1, 0.0).unwrap();
        let res = sssp(&a, 0, &SsspOptions::default()).unwrap();
        assert_eq!(res.distances, vec![0.0]);
    }

    #[test]
    fn disconnected_vertex_is_infinite() {
        let a = DualMatrix::from_edges(&[(0, 1, 2.0)], 3, 3, 0.0).unwrap();
        let d = sssp_reference(&a, 0).unwrap();
        assert_eq!(d[1], 2.0);
        assert!(d[2].is_infinite());
        let res = sssp(&a, 0, &SsspOptions::default()).unwrap();
        assert!(res.distances[2].is_infinite());
    }

    #[test]
    fn negative_weight_rejected() {
        let a = DualMatrix::from_edges(&[(0, 1, -1.0)], 2, 2, 0.0).unwrap();
        assert!(matches!(
            sssp(&a, 0, &SsspOptions::default()),
            Err(Error::NegativeWeight { .. })
        ));
    }

    fn random_graph(rng: &mut StdRng, n: usize) -> DualMatrix<f64> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.1) {
                    edges.push((u, v, rng.gen_range(1..=10) as f64));
                }
            }
        }
        DualMatrix::from_edges(&edges, n, n, 0.0).unwrap()
    }

    #[test]
    fn agrees_with_dijkstra_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..50 {
            let n = rng.gen_range(2..64);
            let a = random_graph(&mut rng, n);
            let src = rng.gen_range(0..n);
            let got = sssp(&a, src, &SsspOptions::default()).unwrap().distances;
            let want = sssp_reference(&a, src).unwrap();
            assert_eq!(got, want);
        }
    }

    /// Second independent oracle: brute-force Bellman-Ford over edge triples.
    #[test]
    fn dijkstra_agrees_with_brute_force_bellman_ford() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(2..32);
            let a = random_graph(&mut rng, n);
            let src = rng.gen_range(0..n);
            let triples = a.triples();
            let mut dist = vec![f64::INFINITY; n];
            dist[src] = 0.0;
            for _ in 0..n {
                for &(u, v, w) in &triples {
                    if dist[u] + w < dist[v] {
                        dist[v] = dist[u] + w;
                    }
                }
            }
            assert_eq!(sssp_reference(&a, src).unwrap(), dist);
        }
    }

    #[test]
    fn direction_switch_changes_no_distance() {
        let mut rng = StdRng::seed_from_u64(17);
        let a = random_graph(&mut rng, 100);
        // alpha tiny forces an early switch; alpha 1.0 never switches
        let early = sssp(&a, 0, &SsspOptions { alpha: 0.0001 }).unwrap();
        let never = sssp(&a, 0, &SsspOptions { alpha: 1.0 }).unwrap();
        assert_eq!(early.distances, never.distances);
        assert!(early.trace.iter().any(|t| t.direction == StepDirection::Pull));
        assert!(never.trace.iter().all(|t| t.direction == StepDirection::Push));
    }
}
