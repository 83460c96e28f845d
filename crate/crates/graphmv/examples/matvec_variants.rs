//! The four matvec kernels on the same frontier, side by side: identical
//! results, very different access counts. Shows why a traversal wants the
//! column kernel for small frontiers and the masked row kernel for large
//! ones.

use graphmv::io::{generate_rmat, preprocess};
use graphmv::{
    boolean_lor_land, col_masked_mxv, col_mxv, row_masked_mxv, row_mxv, sparse_to_dense,
    AccessCounter, DenseVector, Descriptor, Mask, SparseVector, Toggles,
};

fn main() {
    let a = preprocess(&generate_rmat(12, 16, 7).unwrap(), true)
        .to_bool_matrix()
        .unwrap();
    let m = a.num_rows();
    let s = boolean_lor_land();
    let desc = Descriptor {
        toggles: Toggles::all_off(),
        ..Descriptor::default()
    };

    // a 64-vertex frontier and a half-visited mask
    let mut frontier: Vec<(usize, bool)> = (0..64).map(|i| (i * 7 % m, true)).collect();
    frontier.sort_by_key(|&(i, _)| i);
    frontier.dedup_by_key(|&mut (i, _)| i);
    let xs = SparseVector::from_entries(m, frontier, false).unwrap();
    let xd = sparse_to_dense(&xs, false);
    let visited = DenseVector::from_values((0..m).map(|i| i64::from(i % 2 == 0)).collect(), 0);
    let mask = Mask::from_indicator(visited);
    let scmp_desc = Descriptor { scmp: true, ..desc };

    println!("matrix nnz = {}, frontier nnz = {}", a.nnz(), xs.nnz());
    println!("{:<12} {:>10} {:>8} {:>12} {:>8}", "variant", "mat_reads", "merges", "mask_checks", "out_nnz");

    let mut c = AccessCounter::default();
    let y = row_mxv(&a.t(), &xd, &s, &mut c).unwrap();
    print_row("row", &c, y.nnz());

    let mut c = AccessCounter::default();
    let y = row_masked_mxv(&a.t(), &xd, &mask, &scmp_desc, &s, &mut c, None, None).unwrap();
    print_row("row_masked", &c, y.nnz());

    let mut c = AccessCounter::default();
    let y = col_mxv(&a.t(), &xs, &s, &desc, &mut c).unwrap();
    print_row("col", &c, y.nnz());

    let mut c = AccessCounter::default();
    let y = col_masked_mxv(&a.t(), &xs, &mask, &scmp_desc, &s, &mut c, None).unwrap();
    print_row("col_masked", &c, y.nnz());
}

fn print_row(name: &str, c: &AccessCounter, nnz: usize) {
    println!(
        "{name:<12} {:>10} {:>8} {:>12} {:>8}",
        c.matrix_reads, c.merge_comparisons, c.mask_checks, nnz
    );
}
