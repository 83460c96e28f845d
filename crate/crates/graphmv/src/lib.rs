//! Masked, semiring-generalized sparse matrix-vector kernels and the
//! direction-optimized graph traversals built from them, instrumented with
//! exact RAM-model access counts.
//!
//! The row-based kernel touches every stored nonzero; the column-based
//! kernel scales with the edges leaving the frontier; masking lets the
//! row-based kernel skip rows whose output is known to be zero. A BFS that
//! switches between the two per iteration, plus masking, early exit,
//! operand reuse and structure-only accounting, each independently
//! toggleable, reproduces the classic push-pull traversal entirely in
//! linear-algebra terms.
//!
//! See the `examples/` directory for one runnable example per capability
//! and the `graphmv` binary for the benchmark harness.

pub mod algebra;
pub mod bfs;
pub mod descriptor;
mod error;
pub mod harness;
pub mod io;
pub mod kernels;
pub mod mask;
pub mod matrix;
pub mod sssp;
pub mod vector;

pub use algebra::{boolean_lor_land, min_plus, plus_times, Monoid, Scalar, Semiring};
pub use bfs::{bfs, bfs_reference, direction_decision, BfsMode, BfsOptions, BfsResult, StepDirection};
pub use descriptor::{Descriptor, Direction, Toggles};
pub use error::{Error, Result};
pub use kernels::{
    col_masked_mxv, col_mxv, frontier_edge_count, mxv, row_masked_mxv, row_mxv, AccessCounter,
    EdgeDirection,
};
pub use mask::{elementwise_mask_apply, Mask};
pub use matrix::{DualMatrix, MatrixView};
pub use sssp::{sssp, sssp_reference, SsspOptions, SsspResult};
pub use vector::{convert, dense_to_sparse, sparse_to_dense, DenseVector, SparseVector, Vector};
