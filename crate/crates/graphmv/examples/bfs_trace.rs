//! Direction-optimized BFS on a generated scale-free graph, printing the
//! per-iteration trace: direction taken, frontier size, and access counts.

use graphmv::io::{generate_rmat, preprocess};
use graphmv::{bfs, BfsOptions};

fn main() {
    let edges = preprocess(&generate_rmat(12, 16, 42).unwrap(), true);
    let a = edges.to_bool_matrix().unwrap();
    println!(
        "graph: {} vertices, {} edges, avg degree {:.1}",
        a.num_rows(),
        a.nnz(),
        a.avg_degree()
    );

    let res = bfs(&a, 0, &BfsOptions::default()).unwrap();
    println!("iter  dir   frontier  unvisited         r  mat_reads  merges  mask_checks");
    for t in &res.trace {
        println!(
            "{:>4}  {:<4} {:>9} {:>10} {:>9.4} {:>10} {:>7} {:>12}",
            t.iteration,
            t.direction.to_string(),
            t.frontier_nnz,
            t.unvisited,
            t.r,
            t.counter.matrix_reads,
            t.counter.merge_comparisons,
            t.counter.mask_checks,
        );
    }

    let reached = (0..a.num_rows()).filter(|&i| res.depths.get(i) > 0).count();
    let max_depth = (0..a.num_rows()).map(|i| res.depths.get(i)).max().unwrap();
    println!("reached {reached} vertices, eccentricity {}", max_depth - 1);
}
