//! Direction-optimized BFS over the boolean semiring.
//!
//! Each iteration runs f ← Aᵀf .* ¬v as either a push (column-based) or a
//! pull (row-based) step. The five optimizations are independent toggles
//! that change only access counts, never the computed depths.

use crate::algebra::boolean_lor_land;
use crate::descriptor::{Descriptor, Direction, Toggles};
use crate::error::{Error, Result};
use crate::kernels::{col_masked_mxv, col_mxv, row_masked_mxv, row_mxv, AccessCounter};
use crate::mask::{elementwise_mask_apply, Mask};
use crate::matrix::DualMatrix;
use crate::vector::{DenseVector, SparseVector, Vector};

/// Direction taken by one traversal step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepDirection {
    Push,
    Pull,
}

impl std::fmt::Display for StepDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StepDirection::Push => write!(f, "push"),
            StepDirection::Pull => write!(f, "pull"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfsMode {
    PushOnly,
    PullOnly,
    DirectionOptimized,
}

#[derive(Clone, Copy, Debug)]
pub struct BfsOptions {
    /// Push-to-pull threshold on the frontier fraction r.
    pub alpha: f64,
    /// Pull-to-push threshold.
    pub beta: f64,
    pub mode: BfsMode,
    pub toggles: Toggles,
    /// Sparse/dense format-switch threshold, forwarded to the kernels.
    pub switchpoint: f64,
}

impl Default for BfsOptions {
    fn default() -> Self {
        BfsOptions {
            alpha: 0.01,
            beta: 0.01,
            mode: BfsMode::DirectionOptimized,
            toggles: Toggles::all_on(),
            switchpoint: 0.01,
        }
    }
}

/// One row of the traversal trace.
#[derive(Clone, Copy, Debug)]
pub struct IterationRecord {
    /// Depth assigned this iteration (source iteration is 1).
    pub iteration: u32,
    pub direction: StepDirection,
    /// Size of the frontier processed this iteration.
    pub frontier_nnz: usize,
    /// Unvisited vertices remaining when the step ran.
    pub unvisited: usize,
    /// Frontier fraction nnz(f)/M.
    pub r: f64,
    pub counter: AccessCounter,
    /// Wall time of this iteration's kernel step.
    pub time_ns: u64,
    /// Set when the early-exit toggle was requested but the semiring cannot
    /// honor it. Never set for BFS itself (boolean semiring).
    pub early_exit_ignored: bool,
}

/// Traversal output: 1-based depths (0 = unvisited) plus the per-iteration
/// trace.
#[derive(Clone, Debug)]
pub struct BfsResult {
    pub depths: DenseVector<i64>,
    pub trace: Vec<IterationRecord>,
}

impl BfsResult {
    /// Depth as hop count: source 0, unreachable stays 0 alongside, so
    /// callers wanting hops should also consult `depths` for reachability.
    pub fn hops(&self, i: usize) -> i64 {
        let d = self.depths.get(i);
        if d > 0 {
            d - 1
        } else {
            d
        }
    }
}

/// Switch rule on the frontier fraction r: leave push when r is rising above
/// alpha, return to push when r is falling below beta, otherwise hold.
pub fn direction_decision(
    r_prev: f64,
    r: f64,
    current: StepDirection,
    alpha: f64,
    beta: f64,
) -> StepDirection {
    match current {
        StepDirection::Push if r > r_prev && r > alpha => StepDirection::Pull,
        StepDirection::Pull if r < r_prev && r < beta => StepDirection::Push,
        other => other,
    }
}

pub fn bfs(a: &DualMatrix<bool>, source: usize, opts: &BfsOptions) -> Result<BfsResult> {
    let m = a.num_rows();
    if a.num_cols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: a.num_cols(),
            context: "bfs needs a square matrix",
        });
    }
    if source >= m {
        return Err(Error::SourceOutOfRange {
            vertex: source,
            num_vertices: m,
        });
    }
    for p in [opts.alpha, opts.beta] {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::BadSwitchpoint(p));
        }
    }

    let s = boolean_lor_land();
    let toggles = opts.toggles;
    // visited vector doubles as the depth output and the pull mask
    let mut mask: Mask<i64> = Mask::from_indicator(DenseVector::new(m, 0));
    let mut f = Vector::Sparse(SparseVector::from_entries(m, vec![(source, true)], false)?);
    let mut depth: i64 = 1;
    let mut current = StepDirection::Push;
    let mut r_prev = 0.0;
    let mut r_cur = 1.0 / m as f64;
    let mut trace = Vec::new();

    while f.nnz() > 0 && depth <= m as i64 {
        let frontier_nnz = f.nnz();
        // v <- f x d + v, shrinking the unvisited candidate list in step
        let newly = f.support();
        mask.assign_batch(&newly, depth);
        let unvisited = mask
            .complement_list()
            .expect("complement kept fresh by assign_batch")
            .len();

        let dir = match opts.mode {
            BfsMode::PushOnly => StepDirection::Push,
            BfsMode::PullOnly => StepDirection::Pull,
            BfsMode::DirectionOptimized => {
                if depth == 1 {
                    // single-vertex frontier: r is minimal, always push
                    StepDirection::Push
                } else if !toggles.change_of_direction {
                    current
                } else {
                    direction_decision(r_prev, r_cur, current, opts.alpha, opts.beta)
                }
            }
        };
        current = dir;

        let started = std::time::Instant::now();
        let mut c = AccessCounter::default();
        let desc = Descriptor {
            scmp: true,
            accum: false,
            switchpoint: opts.switchpoint,
            direction: Direction::Auto,
            toggles,
        };
        f = match dir {
            StepDirection::Push => {
                let sv = f.into_sparse();
                if toggles.masking {
                    Vector::Sparse(col_masked_mxv(&a.t(), &sv, &mask, &desc, &s, &mut c, None)?)
                } else {
                    let w = col_mxv(&a.t(), &sv, &s, &desc, &mut c)?;
                    elementwise_mask_apply(&Vector::Sparse(w), &mask, true, false)?
                }
            }
            StepDirection::Pull => {
                let x = if toggles.operand_reuse {
                    // the visited pattern stands in for the frontier; this
                    // also skips the sparse-to-dense frontier conversion
                    DenseVector::from_values(
                        mask.indicator().values().iter().map(|&v| v != 0).collect(),
                        false,
                    )
                } else {
                    f.into_dense(false)
                };
                if toggles.masking {
                    let cands = mask.complement_list().map(|c| c.to_vec());
                    Vector::Dense(row_masked_mxv(
                        &a.t(),
                        &x,
                        &mask,
                        &desc,
                        &s,
                        &mut c,
                        cands.as_deref(),
                        None,
                    )?)
                } else {
                    let w = row_mxv(&a.t(), &x, &s, &mut c)?;
                    elementwise_mask_apply(&Vector::Dense(w), &mask, true, false)?
                }
            }
        };

        let new_nnz = f.nnz();
        trace.push(IterationRecord {
            iteration: depth as u32,
            direction: dir,
            frontier_nnz,
            unvisited,
            r: frontier_nnz as f64 / m as f64,
            counter: c,
            time_ns: started.elapsed().as_nanos() as u64,
            early_exit_ignored: toggles.early_exit && !s.supports_early_exit(),
        });
        r_prev = r_cur;
        r_cur = new_nnz as f64 / m as f64;
        depth += 1;
    }

    Ok(BfsResult {
        depths: mask.indicator().clone(),
        trace,
    })
}

/// Textbook queue-based BFS over out-edges, with the same 1-based depth
/// convention. Independent of the matvec path; used to check it.
pub fn bfs_reference(a: &DualMatrix<bool>, source: usize) -> Result<Vec<i64>> {
    let m = a.num_rows();
    if source >= m {
        return Err(Error::SourceOutOfRange {
            vertex: source,
            num_vertices: m,
        });
    }
    let mut depths = vec![0i64; m];
    let mut queue = std::collections::VecDeque::new();
    depths[source] = 1;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let (children, _) = a.view().row(u);
        for &v in children {
            if depths[v] == 0 {
                depths[v] = depths[u] + 1;
                queue.push_back(v);
            }
        }
    }
    Ok(depths)
}
