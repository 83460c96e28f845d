//! RMAT recursive-quadrant generator with the Graph500 probabilities
//! (a, b, c, d) = (0.57, 0.19, 0.19, 0.05). Output is the raw sample list;
//! run [`super::preprocess`] before building a matrix.

use super::EdgeList;
use crate::error::{Error, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MAX_SCALE: u32 = 24;
const PROB_A: f64 = 0.57;
const PROB_B: f64 = 0.19;
const PROB_C: f64 = 0.19;

/// Sample `edge_factor * 2^scale` edges over `2^scale` vertices.
/// Deterministic for a fixed seed.
pub fn generate_rmat(scale: u32, edge_factor: usize, seed: u64) -> Result<EdgeList> {
    if scale > MAX_SCALE {
        return Err(Error::ScaleTooLarge {
            scale,
            limit: MAX_SCALE,
        });
    }
    let n = 1usize << scale;
    let num_edges = edge_factor * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(num_edges);
    for _ in 0..num_edges {
        let mut src = 0usize;
        let mut dst = 0usize;
        for _ in 0..scale {
            src <<= 1;
            dst <<= 1;
            let p: f64 = rng.gen();
            if p < PROB_A {
                // top-left quadrant
            } else if p < PROB_A + PROB_B {
                dst |= 1;
            } else if p < PROB_A + PROB_B + PROB_C {
                src |= 1;
            } else {
                src |= 1;
                dst |= 1;
            }
        }
        edges.push((src, dst, 1.0));
    }
    Ok(EdgeList {
        num_rows: n,
        num_cols: n,
        edges,
        pattern: true,
    })
}
