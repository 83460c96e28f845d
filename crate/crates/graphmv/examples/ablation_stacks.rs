//! Cumulative optimization ablation: start from an unoptimized push-only
//! traversal and stack one optimization at a time, reporting the total
//! access count and the speedup each layer adds.

use graphmv::harness::{ablation, pick_sources};
use graphmv::io::{generate_rmat, preprocess};

fn main() {
    let a = preprocess(&generate_rmat(14, 16, 9).unwrap(), true)
        .to_bool_matrix()
        .unwrap();
    let source = pick_sources(&a, 1, 9, true)[0];
    println!(
        "graph: {} vertices, {} edges; source {source}",
        a.num_rows(),
        a.nnz()
    );

    let rows = ablation(&a, source, 0.01, 0.01).unwrap();
    println!("{:<22} {:>14} {:>9} {:>11}", "stack", "total_accesses", "speedup", "cumulative");
    let baseline = rows[0].total_accesses as f64;
    for r in &rows {
        println!(
            "{:<22} {:>14} {:>8.2}x {:>10.2}x",
            r.stack,
            r.total_accesses,
            r.speedup,
            baseline / r.total_accesses as f64
        );
    }
}
