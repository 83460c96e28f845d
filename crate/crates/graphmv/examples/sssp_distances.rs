//! Shortest paths by semiring relaxation: the same push/pull machinery run
//! over min-plus instead of the boolean semiring, checked against Dijkstra.

use graphmv::{sssp, sssp_reference, DualMatrix, SsspOptions, StepDirection};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() {
    // random sparse digraph with integer weights 1..=10
    let n = 2000;
    let mut rng = StdRng::seed_from_u64(13);
    let mut edges = Vec::new();
    for u in 0..n {
        for _ in 0..6 {
            let v = rng.gen_range(0..n);
            if v != u {
                edges.push((u, v, rng.gen_range(1..=10) as f64));
            }
        }
    }
    edges.sort_by_key(|&(u, v, _)| (u, v));
    edges.dedup_by_key(|&mut (u, v, _)| (u, v));
    let a = DualMatrix::from_edges(&edges, n, n, f64::INFINITY).unwrap();

    let res = sssp(&a, 0, &SsspOptions::default()).unwrap();
    let want = sssp_reference(&a, 0).unwrap();
    assert_eq!(res.distances, want, "relaxation must match Dijkstra");

    let reachable = res.distances.iter().filter(|d| d.is_finite()).count();
    let far = res
        .distances
        .iter()
        .cloned()
        .filter(|d| d.is_finite())
        .fold(0.0f64, f64::max);
    println!("{n} vertices, {} edges", a.nnz());
    println!("reachable from 0: {reachable}, farthest distance {far}");
    println!("iterations:");
    for t in &res.trace {
        println!(
            "  {:>2} {:<4} active {:>5}  matrix_reads {:>8}",
            t.iteration,
            match t.direction {
                StepDirection::Push => "push",
                StepDirection::Pull => "pull",
            },
            t.active,
            t.counter.matrix_reads
        );
    }
}
