//! Benchmark machinery behind the CLI: timed BFS runs with MTEPS, the
//! four-variant matvec microbenchmark (random-vector and BFS-derived
//! protocols), and the cumulative optimization-stack ablation. Everything
//! reports deterministic access counts next to wall time, since only the
//! former are reproducible across machines.

use crate::algebra::boolean_lor_land;
use crate::bfs::{bfs, bfs_reference, BfsMode, BfsOptions, BfsResult};
use crate::descriptor::{Descriptor, Toggles};
use crate::error::Result;
use crate::kernels::{col_masked_mxv, col_mxv, row_masked_mxv, row_mxv, AccessCounter};
use crate::mask::Mask;
use crate::matrix::DualMatrix;
use crate::vector::{sparse_to_dense, DenseVector, SparseVector};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// One source's averaged traversal measurements.
#[derive(Clone, Debug)]
pub struct SourceRun {
    pub source: usize,
    /// Mean wall time over the repeats.
    pub time_ns: u64,
    /// Millions of traversed edges per second, from the mean time.
    pub mteps: f64,
    pub edges_traversed: u64,
    pub result: BfsResult,
}

/// Per-source records plus aggregate MTEPS statistics.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub runs: Vec<SourceRun>,
    pub mean_mteps: f64,
    pub min_mteps: f64,
    pub max_mteps: f64,
}

/// Σ out-degree over visited vertices: the edges a traversal inspects.
pub fn edges_traversed(a: &DualMatrix<bool>, depths: &DenseVector<i64>) -> u64 {
    (0..a.num_rows())
        .filter(|&i| depths.get(i) > 0)
        .map(|i| a.out_degree(i) as u64)
        .sum()
}

/// Vertices of the largest component found by a BFS sweep.
pub fn largest_component(a: &DualMatrix<bool>) -> Vec<usize> {
    let m = a.num_rows();
    let mut seen = vec![false; m];
    let mut best: Vec<usize> = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let depths = bfs_reference(a, start).expect("start in range");
        let members: Vec<usize> = (0..m).filter(|&i| depths[i] > 0).collect();
        for &i in &members {
            seen[i] = true;
        }
        if members.len() > best.len() {
            best = members;
        }
    }
    best
}

/// Uniformly random sources drawn from the largest component (or from all
/// vertices when `restrict` is off).
pub fn pick_sources(a: &DualMatrix<bool>, count: usize, seed: u64, restrict: bool) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<usize> = if restrict {
        largest_component(a)
    } else {
        (0..a.num_rows()).collect()
    };
    (0..count)
        .map(|_| *pool.choose(&mut rng).expect("non-empty graph"))
        .collect()
}

/// Run BFS `repeats` times per source and average the wall time.
pub fn run_bfs(
    a: &DualMatrix<bool>,
    sources: &[usize],
    opts: &BfsOptions,
    repeats: usize,
) -> Result<RunReport> {
    let repeats = repeats.max(1);
    let mut runs = Vec::with_capacity(sources.len());
    for &source in sources {
        let mut total_ns = 0u64;
        let mut result = None;
        for _ in 0..repeats {
            let started = Instant::now();
            let r = bfs(a, source, opts)?;
            total_ns += started.elapsed().as_nanos() as u64;
            result = Some(r);
        }
        let result = result.unwrap();
        let time_ns = total_ns / repeats as u64;
        let edges = edges_traversed(a, &result.depths);
        let mteps = if time_ns > 0 {
            edges as f64 / (time_ns as f64 / 1e9) / 1e6
        } else {
            0.0
        };
        runs.push(SourceRun {
            source,
            time_ns,
            mteps,
            edges_traversed: edges,
            result,
        });
    }
    let mteps: Vec<f64> = runs.iter().map(|r| r.mteps).collect();
    let mean = mteps.iter().sum::<f64>() / mteps.len().max(1) as f64;
    Ok(RunReport {
        mean_mteps: mean,
        min_mteps: mteps.iter().copied().fold(f64::INFINITY, f64::min),
        max_mteps: mteps.iter().copied().fold(0.0, f64::max),
        runs,
    })
}

pub const BFS_CSV_HEADER: &str =
    "source,iteration,direction,nnz_f,unvisited,r,matrix_reads,merge_comparisons,mask_checks,time_ns";

pub fn bfs_csv(report: &RunReport, hops: bool) -> String {
    let _ = hops;
    let mut out = String::from(BFS_CSV_HEADER);
    out.push('\n');
    for run in &report.runs {
        for t in &run.result.trace {
            out.push_str(&format!(
                "{},{},{},{},{},{:.6},{},{},{},{}\n",
                run.source,
                t.iteration,
                t.direction,
                t.frontier_nnz,
                t.unvisited,
                t.r,
                t.counter.matrix_reads,
                t.counter.merge_comparisons,
                t.counter.mask_checks,
                t.time_ns,
            ));
        }
    }
    out
}

pub fn depths_csv(result: &BfsResult, hops: bool) -> String {
    let mut out = String::from(if hops { "vertex,hops\n" } else { "vertex,depth\n" });
    for i in 0..result.depths.len() {
        let v = if hops {
            result.hops(i)
        } else {
            result.depths.get(i)
        };
        out.push_str(&format!("{i},{v}\n"));
    }
    out
}

/// One measured point of the matvec microbenchmark.
#[derive(Clone, Debug)]
pub struct MicrobenchRow {
    /// "random" (random vectors) or "bfs" (frontiers sampled from runs).
    pub protocol: &'static str,
    pub variant: &'static str,
    pub nnz_f: usize,
    pub nnz_m: usize,
    pub counter: AccessCounter,
    pub time_ns: u64,
}

pub const MICROBENCH_CSV_HEADER: &str =
    "protocol,variant,nnz_f,nnz_m,matrix_reads,merge_comparisons,mask_checks,vector_reads,time_ns";

pub fn microbench_csv(rows: &[MicrobenchRow]) -> String {
    let mut out = String::from(MICROBENCH_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.protocol,
            r.variant,
            r.nnz_f,
            r.nnz_m,
            r.counter.matrix_reads,
            r.counter.merge_comparisons,
            r.counter.mask_checks,
            r.counter.vector_reads,
            r.time_ns,
        ));
    }
    out
}

fn bool_mask_of(indices: &[usize], len: usize) -> Mask<bool> {
    let mut d = DenseVector::new(len, false);
    for &i in indices {
        d.set(i, true);
    }
    Mask::from_indicator(d)
}

fn logspace(max: usize, points: usize) -> Vec<usize> {
    let points = points.max(2);
    let mut out: Vec<usize> = (0..points)
        .map(|i| {
            let e = i as f64 / (points - 1) as f64;
            ((max as f64).powf(e).round() as usize).clamp(1, max)
        })
        .collect();
    out.dedup();
    out
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let started = Instant::now();
    let v = f();
    (v, started.elapsed().as_nanos() as u64)
}

/// Random-vector sweep of the four variants:
/// row (grow nnz(f)), row-masked (full f, grow nnz(m)),
/// col (grow nnz(f)), col-masked (mask at 2/3 of nnz(f)).
pub fn microbench_random(
    a: &DualMatrix<bool>,
    points: usize,
    seed: u64,
) -> Result<Vec<MicrobenchRow>> {
    let m = a.num_rows();
    let s = boolean_lor_land();
    let desc = Descriptor {
        toggles: Toggles::all_off(),
        ..Descriptor::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let random_subset = |k: usize, rng: &mut ChaCha8Rng| -> Vec<usize> {
        let mut all: Vec<usize> = (0..m).collect();
        all.shuffle(rng);
        all.truncate(k);
        all.sort_unstable();
        all
    };

    for nnz in logspace(m, points) {
        let picked = random_subset(nnz, &mut rng);
        let xs = SparseVector::from_entries(m, picked.iter().map(|&i| (i, true)).collect(), false)?;
        let xd = sparse_to_dense(&xs, false);

        let mut c = AccessCounter::default();
        let (_, t) = timed(|| row_mxv(&a.t(), &xd, &s, &mut c));
        rows.push(MicrobenchRow {
            protocol: "random",
            variant: "row",
            nnz_f: nnz,
            nnz_m: 0,
            counter: c,
            time_ns: t,
        });

        let mut c = AccessCounter::default();
        let (r, t) = timed(|| col_mxv(&a.t(), &xs, &s, &desc, &mut c));
        r?;
        rows.push(MicrobenchRow {
            protocol: "random",
            variant: "col",
            nnz_f: nnz,
            nnz_m: 0,
            counter: c,
            time_ns: t,
        });

        // row-masked: full input vector, mask grows
        let full = DenseVector::from_values(vec![true; m], false);
        let mask = bool_mask_of(&picked, m);
        let mut c = AccessCounter::default();
        let (r, t) =
            timed(|| row_masked_mxv(&a.t(), &full, &mask, &desc, &s, &mut c, None, None));
        r?;
        rows.push(MicrobenchRow {
            protocol: "random",
            variant: "row_masked",
            nnz_f: m,
            nnz_m: nnz,
            counter: c,
            time_ns: t,
        });

        // col-masked: mask at two thirds of the frontier size
        let mask_nnz = (2 * nnz / 3).max(1);
        let mask = bool_mask_of(&random_subset(mask_nnz, &mut rng), m);
        let mut c = AccessCounter::default();
        let (r, t) = timed(|| col_masked_mxv(&a.t(), &xs, &mask, &desc, &s, &mut c, None));
        r?;
        rows.push(MicrobenchRow {
            protocol: "random",
            variant: "col_masked",
            nnz_f: nnz,
            nnz_m: mask_nnz,
            counter: c,
            time_ns: t,
        });
    }
    Ok(rows)
}

/// BFS-derived sweep: frontiers and visited masks are sampled per level
/// from traversals out of random sources, then each variant runs on the
/// real vectors. Row-masked gets early exit, as in the pull phase.
pub fn microbench_bfs(
    a: &DualMatrix<bool>,
    num_sources: usize,
    seed: u64,
) -> Result<Vec<MicrobenchRow>> {
    let m = a.num_rows();
    let s = boolean_lor_land();
    let unmasked_desc = Descriptor {
        toggles: Toggles::all_off(),
        ..Descriptor::default()
    };
    let masked_desc = Descriptor {
        scmp: true,
        toggles: Toggles {
            early_exit: true,
            ..Toggles::all_off()
        },
        ..Descriptor::default()
    };
    let sources = pick_sources(a, num_sources, seed, true);
    let mut rows = Vec::new();
    for source in sources {
        let depths = bfs_reference(a, source)?;
        let max_depth = depths.iter().copied().max().unwrap_or(0);
        for level in 1..=max_depth {
            let frontier: Vec<usize> = (0..m).filter(|&i| depths[i] == level).collect();
            let visited = DenseVector::from_values(
                depths
                    .iter()
                    .map(|&d| if d > 0 && d <= level { d } else { 0 })
                    .collect(),
                0i64,
            );
            let nnz_f = frontier.len();
            let nnz_m = visited.nnz();
            let mask = Mask::from_indicator(visited);
            let xs =
                SparseVector::from_entries(m, frontier.iter().map(|&i| (i, true)).collect(), false)?;
            let xd = sparse_to_dense(&xs, false);

            let mut c = AccessCounter::default();
            let (_, t) = timed(|| row_mxv(&a.t(), &xd, &s, &mut c));
            rows.push(MicrobenchRow {
                protocol: "bfs",
                variant: "row",
                nnz_f,
                nnz_m,
                counter: c,
                time_ns: t,
            });

            let mut c = AccessCounter::default();
            let cands = mask.complement_list().map(|l| l.to_vec());
            let (r, t) = timed(|| {
                row_masked_mxv(
                    &a.t(),
                    &xd,
                    &mask,
                    &masked_desc,
                    &s,
                    &mut c,
                    cands.as_deref(),
                    None,
                )
            });
            r?;
            rows.push(MicrobenchRow {
                protocol: "bfs",
                variant: "row_masked",
                nnz_f,
                nnz_m,
                counter: c,
                time_ns: t,
            });

            let mut c = AccessCounter::default();
            let (r, t) = timed(|| col_mxv(&a.t(), &xs, &s, &unmasked_desc, &mut c));
            r?;
            rows.push(MicrobenchRow {
                protocol: "bfs",
                variant: "col",
                nnz_f,
                nnz_m,
                counter: c,
                time_ns: t,
            });

            let mut c = AccessCounter::default();
            let (r, t) =
                timed(|| col_masked_mxv(&a.t(), &xs, &mask, &masked_desc, &s, &mut c, None));
            r?;
            rows.push(MicrobenchRow {
                protocol: "bfs",
                variant: "col_masked",
                nnz_f,
                nnz_m,
                counter: c,
                time_ns: t,
            });
        }
    }
    Ok(rows)
}

/// One row of the cumulative optimization stack.
#[derive(Clone, Debug)]
pub struct AblationRow {
    pub stack: &'static str,
    pub counter: AccessCounter,
    pub total_accesses: u64,
    pub time_ns: u64,
    /// Standalone improvement over the previous row, from access counts.
    pub speedup: f64,
}

/// Names and option sets of the six stacks, in order: each adds one
/// optimization on top of the previous.
pub fn ablation_stacks(alpha: f64, beta: f64) -> Vec<(&'static str, BfsOptions)> {
    let base = BfsOptions {
        alpha,
        beta,
        mode: BfsMode::PushOnly,
        toggles: Toggles::all_off(),
        switchpoint: 0.01,
    };
    let mut stacks = Vec::new();
    let mut cur = base;
    stacks.push(("baseline", cur));
    cur.toggles.structure_only = true;
    stacks.push(("structure_only", cur));
    cur.toggles.change_of_direction = true;
    cur.mode = BfsMode::DirectionOptimized;
    stacks.push(("change_of_direction", cur));
    cur.toggles.masking = true;
    stacks.push(("masking", cur));
    cur.toggles.early_exit = true;
    stacks.push(("early_exit", cur));
    cur.toggles.operand_reuse = true;
    stacks.push(("operand_reuse", cur));
    stacks
}

/// Run the six-stack ablation from one source.
pub fn ablation(
    a: &DualMatrix<bool>,
    source: usize,
    alpha: f64,
    beta: f64,
) -> Result<Vec<AblationRow>> {
    let mut rows: Vec<AblationRow> = Vec::new();
    for (name, opts) in ablation_stacks(alpha, beta) {
        let started = Instant::now();
        let result = bfs(a, source, &opts)?;
        let time_ns = started.elapsed().as_nanos() as u64;
        let mut counter = AccessCounter::default();
        for t in &result.trace {
            counter.accumulate(&t.counter);
        }
        let total = counter.total();
        let speedup = match rows.last() {
            Some(prev) if total > 0 => prev.total_accesses as f64 / total as f64,
            _ => 1.0,
        };
        rows.push(AblationRow {
            stack: name,
            counter,
            total_accesses: total,
            time_ns,
            speedup,
        });
    }
    Ok(rows)
}

pub const ABLATION_CSV_HEADER: &str =
    "stack,matrix_reads,merge_comparisons,mask_checks,vector_reads,total_accesses,speedup,time_ns";

pub fn ablation_csv(rows: &[AblationRow]) -> String {
    let mut out = String::from(ABLATION_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{:.4},{}\n",
            r.stack,
            r.counter.matrix_reads,
            r.counter.merge_comparisons,
            r.counter.mask_checks,
            r.counter.vector_reads,
            r.total_accesses,
            r.speedup,
            r.time_ns,
        ));
    }
    out
}
