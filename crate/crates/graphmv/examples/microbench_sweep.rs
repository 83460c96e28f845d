//! Sweep the four kernel variants over growing vector densities and print
//! the access counts as CSV, both for random vectors and for frontiers
//! harvested from real traversals.

use graphmv::harness::{microbench_bfs, microbench_csv, microbench_random};
use graphmv::io::{generate_rmat, preprocess};

fn main() {
    let a = preprocess(&generate_rmat(12, 16, 3).unwrap(), true)
        .to_bool_matrix()
        .unwrap();
    let mut rows = microbench_random(&a, 10, 3).unwrap();
    rows.extend(microbench_bfs(&a, 2, 3).unwrap());
    print!("{}", microbench_csv(&rows));
}
