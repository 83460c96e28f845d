//! The kernels are generic over the semiring: build one from scratch
//! (max-times, a "widest path score" algebra) and push it through the row
//! and column kernels unchanged.

use graphmv::{
    col_mxv, row_mxv, sparse_to_dense, AccessCounter, Descriptor, DualMatrix, Monoid, Semiring,
    SparseVector, Toggles,
};

fn main() {
    // ⊕ = max with identity 0, ⊗ = ×: score of a path is the product of its
    // edge reliabilities, and we keep the best one per target
    let max_times: Semiring<f64> = Semiring::new(Monoid::new(f64::max, 0.0), |a, b| a * b, None);

    let edges = [
        (0usize, 1usize, 0.9),
        (0, 2, 0.5),
        (1, 3, 0.8),
        (2, 3, 0.99),
        (1, 2, 0.7),
    ];
    let a = DualMatrix::from_edges(&edges, 4, 4, 0.0).unwrap();
    let x = SparseVector::from_entries(4, vec![(0, 1.0)], 0.0).unwrap();
    let desc = Descriptor {
        toggles: Toggles::all_off(),
        ..Descriptor::default()
    };

    // one relaxation step from vertex 0, both kernel families
    let mut c = AccessCounter::default();
    let col = col_mxv(&a.t(), &x, &max_times, &desc, &mut c).unwrap();
    let row = row_mxv(&a.t(), &sparse_to_dense(&x, 0.0), &max_times, &mut c).unwrap();
    assert_eq!(sparse_to_dense(&col, 0.0).values(), row.values());

    println!("one-hop best reliability from vertex 0:");
    for &(i, v) in col.entries() {
        println!("  -> {i}: {v}");
    }
    println!(
        "early exit supported: {} (max is not an OR, so folds must run to completion)",
        max_times.supports_early_exit()
    );
}
