//! End-to-end acceptance checks. Each test prints one PASS/FAIL line so the
//! suite doubles as a release checklist:
//!
//! 1. all four kernels match a dense oracle across semirings
//! 2. access counts obey the cost model on a scale-free graph
//! 3. BFS depths are exact across graphs, modes and toggles
//! 4. pull beats push at the frontier peak
//! 5. ablation stacks never regress, masking and early exit strictly help
//! 6. direction-switch heuristic cases
//! 7. SSSP matches Dijkstra and ignores the direction switch
//! 8. format-convert hysteresis fires once per monotone crossing

use graphmv::harness::{ablation, largest_component, pick_sources};
use graphmv::io::{generate_rmat, preprocess};
use graphmv::{
    bfs, bfs_reference, boolean_lor_land, col_masked_mxv, col_mxv, convert, direction_decision,
    elementwise_mask_apply, frontier_edge_count, min_plus, plus_times, row_masked_mxv, row_mxv,
    sparse_to_dense, sssp, sssp_reference, AccessCounter, BfsMode, BfsOptions, DenseVector,
    Descriptor, DualMatrix, EdgeDirection, Mask, Scalar, Semiring, SparseVector, SsspOptions,
    StepDirection, Toggles, Vector,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::Instant;

fn report(name: &str, body: impl FnOnce() + UnwindSafe) {
    let started = Instant::now();
    match catch_unwind(body) {
        Ok(()) => println!("{name}: PASS ({:.2}s)", started.elapsed().as_secs_f64()),
        Err(e) => {
            println!("{name}: FAIL");
            resume_unwind(e);
        }
    }
}

fn rmat_bool(scale: u32, edge_factor: usize, seed: u64) -> DualMatrix<bool> {
    preprocess(&generate_rmat(scale, edge_factor, seed).unwrap(), true)
        .to_bool_matrix()
        .unwrap()
}

// ---------------------------------------------------------------- criterion 1

fn random_matrix<T: Scalar>(
    rng: &mut StdRng,
    n: usize,
    density: f64,
    mut val: impl FnMut(&mut StdRng) -> T,
    identity: T,
) -> DualMatrix<T> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(density) {
                edges.push((i, j, val(rng)));
            }
        }
    }
    DualMatrix::from_edges(&edges, n, n, identity).unwrap()
}

fn kernel_equivalence_trial<T: Scalar>(
    rng: &mut StdRng,
    s: &Semiring<T>,
    mut val: impl FnMut(&mut StdRng) -> T,
    approx: impl Fn(T, T) -> bool,
) {
    let n = rng.gen_range(2..=64);
    let density = rng.gen_range(0.05..0.5);
    let ident = s.identity();
    let a = random_matrix(rng, n, density, &mut val, ident);

    let mut entries = Vec::new();
    for i in 0..n {
        if rng.gen_bool(0.4) {
            entries.push((i, val(rng)));
        }
    }
    let xs = SparseVector::from_entries(n, entries, ident).unwrap();
    let xd = sparse_to_dense(&xs, ident);

    // dense triple loop over all n^2 positions; absent entries hold the
    // multiplicative identity, which every semiring here maps to ⊕-identity
    let mut dense = vec![vec![ident; n]; n];
    for (i, j, v) in a.triples() {
        dense[i][j] = v;
    }
    let expect: Vec<T> = (0..n)
        .map(|i| {
            let mut acc = ident;
            for j in 0..n {
                acc = s.combine(acc, s.multiply(dense[i][j], xd.get(j)));
            }
            acc
        })
        .collect();
    let same = |got: &DenseVector<T>| {
        for i in 0..n {
            assert!(
                approx(got.get(i), expect[i]),
                "row {i}: {:?} vs {:?}",
                got.get(i),
                expect[i]
            );
        }
    };

    let desc = Descriptor {
        scmp: rng.gen_bool(0.5),
        toggles: Toggles::all_off(),
        ..Descriptor::default()
    };
    let mvals: Vec<i64> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    let mask = Mask::from_indicator(DenseVector::from_values(mvals, 0i64));

    let mut c = AccessCounter::default();
    let y_row = row_mxv(&a.view(), &xd, s, &mut c).unwrap();
    same(&y_row);

    let y_col = col_mxv(&a.view(), &xs, s, &desc, &mut c).unwrap();
    same(&sparse_to_dense(&y_col, ident));

    // masked kernels must equal mask ∘ unmasked
    let y_rm = row_masked_mxv(&a.view(), &xd, &mask, &desc, s, &mut c, None, None).unwrap();
    let filtered = elementwise_mask_apply(&Vector::Dense(y_row), &mask, desc.scmp, ident)
        .unwrap()
        .into_dense(ident);
    for i in 0..n {
        assert!(approx(y_rm.get(i), filtered.get(i)), "masked row {i}");
    }

    let y_cm = col_masked_mxv(&a.view(), &xs, &mask, &desc, s, &mut c, None).unwrap();
    let filtered = elementwise_mask_apply(&Vector::Sparse(y_col), &mask, desc.scmp, ident)
        .unwrap()
        .into_dense(ident);
    let y_cm = sparse_to_dense(&y_cm, ident);
    for i in 0..n {
        assert!(approx(y_cm.get(i), filtered.get(i)), "masked col {i}");
    }
}

#[test]
fn criterion_1_kernel_equivalence() {
    report("acceptance 1 (kernel equivalence)", || {
        let mut rng = StdRng::seed_from_u64(1);
        let started = Instant::now();
        for _ in 0..500 {
            kernel_equivalence_trial(
                &mut rng,
                &boolean_lor_land(),
                |r| r.gen_bool(0.9),
                |a, b| a == b,
            );
            kernel_equivalence_trial(
                &mut rng,
                &plus_times::<i64>(),
                |r| r.gen_range(1..8),
                |a, b| a == b,
            );
            kernel_equivalence_trial(
                &mut rng,
                &min_plus::<f64>(),
                |r| r.gen_range(0.1..10.0),
                |a: f64, b: f64| {
                    if a.is_infinite() || b.is_infinite() {
                        a == b
                    } else {
                        (a - b).abs() <= 1e-10 * a.abs().max(b.abs()).max(1.0)
                    }
                },
            );
        }
        assert!(started.elapsed().as_secs() < 10, "over the 10s budget");
    });
}

// ---------------------------------------------------------------- criterion 2

#[test]
fn criterion_2_access_counts() {
    report("acceptance 2 (access-count laws)", || {
        let started = Instant::now();
        let a = rmat_bool(12, 8, 2);
        let m = a.num_rows();
        let nnz = a.nnz() as u64;
        let s = boolean_lor_land();
        let desc = Descriptor {
            toggles: Toggles::all_off(),
            ..Descriptor::default()
        };
        let mut rng = StdRng::seed_from_u64(2);

        // row kernel: exactly nnz(A) matrix reads, whatever the input
        for _ in 0..3 {
            let x = DenseVector::from_values((0..m).map(|_| rng.gen_bool(0.3)).collect(), false);
            let mut c = AccessCounter::default();
            row_mxv(&a.t(), &x, &s, &mut c).unwrap();
            assert_eq!(c.matrix_reads, nnz);
        }

        let full = DenseVector::from_values(vec![true; m], false);
        let random_mask = |rng: &mut StdRng, frac: f64| {
            let vals: Vec<i64> = (0..m).map(|_| i64::from(rng.gen_bool(frac))).collect();
            Mask::from_indicator(DenseVector::from_values(vals, 0i64))
        };

        // masked row kernel: exactly the in-degree sum over the pass-set
        for _ in 0..3 {
            let mask = random_mask(&mut rng, 0.2);
            let expect: u64 = (0..m)
                .filter(|&i| mask.passes(i, false))
                .map(|i| a.in_degree(i) as u64)
                .sum();
            let mut c = AccessCounter::default();
            row_masked_mxv(&a.t(), &full, &mask, &desc, &s, &mut c, None, None).unwrap();
            assert_eq!(c.matrix_reads, expect);
        }

        // and in aggregate, the reads ratio tracks the mask fraction
        for frac in [0.01, 0.1, 0.5] {
            let trials = 32;
            let mut total_reads = 0u64;
            for _ in 0..trials {
                let mask = random_mask(&mut rng, frac);
                let mut c = AccessCounter::default();
                row_masked_mxv(&a.t(), &full, &mask, &desc, &s, &mut c, None, None).unwrap();
                total_reads += c.matrix_reads;
            }
            let ratio = total_reads as f64 / (trials as f64 * nnz as f64);
            assert!(
                (ratio - frac).abs() <= 0.2 * frac,
                "fraction {frac}: mean reads ratio {ratio}"
            );
        }

        // column kernel: gather reads = out-degree sum over the frontier,
        // and merge moves stay within n * ceil(log2 max(k, 2))
        for _ in 0..20 {
            let k = rng.gen_range(1..200);
            let mut picks: Vec<(usize, bool)> = Vec::new();
            for i in 0..m {
                if picks.len() < k && rng.gen_bool(k as f64 / m as f64) {
                    picks.push((i, true));
                }
            }
            if picks.is_empty() {
                picks.push((rng.gen_range(0..m), true));
            }
            let x = SparseVector::from_entries(m, picks, false).unwrap();
            let expect =
                frontier_edge_count(&a, &Vector::Sparse(x.clone()), EdgeDirection::Outgoing)
                    .unwrap();
            let mut c = AccessCounter::default();
            col_mxv(&a.t(), &x, &s, &desc, &mut c).unwrap();
            assert_eq!(c.matrix_reads, expect);
            let bound = expect * (x.nnz().max(2) as f64).log2().ceil() as u64;
            assert!(
                c.merge_comparisons <= bound,
                "moves {} over bound {bound}",
                c.merge_comparisons
            );
        }
        assert!(started.elapsed().as_secs() < 30, "over the 30s budget");
    });
}

// ---------------------------------------------------------------- criterion 3

fn grid_64() -> DualMatrix<bool> {
    let side = 64usize;
    let mut edges = Vec::new();
    for r in 0..side {
        for c in 0..side {
            let u = r * side + c;
            if c + 1 < side {
                edges.push((u, u + 1, true));
                edges.push((u + 1, u, true));
            }
            if r + 1 < side {
                edges.push((u, u + side, true));
                edges.push((u + side, u, true));
            }
        }
    }
    DualMatrix::from_edges(&edges, side * side, side * side, false).unwrap()
}

fn diamond() -> DualMatrix<bool> {
    DualMatrix::from_edges(
        &[(0, 1, true), (0, 2, true), (1, 3, true), (2, 3, true)],
        4,
        4,
        false,
    )
    .unwrap()
}

fn two_components() -> DualMatrix<bool> {
    let mut edges = Vec::new();
    for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)] {
        edges.push((u, v, true));
        edges.push((v, u, true));
    }
    DualMatrix::from_edges(&edges, 7, 7, false).unwrap()
}

#[test]
fn criterion_3_bfs_exactness() {
    report("acceptance 3 (BFS depths exact everywhere)", || {
        let started = Instant::now();
        let graphs = [rmat_bool(12, 8, 3), grid_64(), diamond(), two_components()];
        let mut rng = StdRng::seed_from_u64(3);
        let combos = Toggles::all_combinations();
        for a in &graphs {
            let m = a.num_rows();
            for _ in 0..100 {
                let source = rng.gen_range(0..m);
                let expect = bfs_reference(a, source).unwrap();
                for mode in [
                    BfsMode::PushOnly,
                    BfsMode::PullOnly,
                    BfsMode::DirectionOptimized,
                ] {
                    for &toggles in &combos {
                        let opts = BfsOptions {
                            mode,
                            toggles,
                            ..BfsOptions::default()
                        };
                        let got = bfs(a, source, &opts).unwrap();
                        assert_eq!(
                            got.depths.values(),
                            expect.as_slice(),
                            "source {source}, {mode:?}, {toggles:?}"
                        );
                    }
                }
            }
        }
        assert!(started.elapsed().as_secs() < 120, "over the 2min budget");
    });
}

// ---------------------------------------------------------------- criterion 4

#[test]
fn criterion_4_pull_wins_at_peak() {
    report("acceptance 4 (pull beats push at the frontier peak)", || {
        let started = Instant::now();
        let a = rmat_bool(14, 16, 4);
        let source = *largest_component(&a).first().unwrap();
        let opts = BfsOptions::default(); // alpha = beta = 0.01, all toggles

        let res = bfs(&a, source, &opts).unwrap();
        let dirs: Vec<StepDirection> = res.trace.iter().map(|t| t.direction).collect();
        assert_eq!(dirs[0], StepDirection::Push, "traversal must start pushing");
        assert!(
            dirs.windows(2)
                .any(|w| w[0] == StepDirection::Push && w[1] == StepDirection::Pull),
            "no push-to-pull transition in {dirs:?}"
        );

        let peak = res
            .trace
            .iter()
            .enumerate()
            .max_by_key(|(_, t)| t.frontier_nnz)
            .map(|(i, _)| i)
            .unwrap();

        // same frontier both ways: depths are toggle-invariant, so the
        // iteration at index `peak` processes identical vectors
        let push = bfs(
            &a,
            source,
            &BfsOptions {
                mode: BfsMode::PushOnly,
                toggles: Toggles::all_off(),
                ..opts
            },
        )
        .unwrap();
        let mut pull_toggles = Toggles::all_off();
        pull_toggles.masking = true;
        pull_toggles.early_exit = true;
        let pull = bfs(
            &a,
            source,
            &BfsOptions {
                mode: BfsMode::PullOnly,
                toggles: pull_toggles,
                ..opts
            },
        )
        .unwrap();
        let push_reads = push.trace[peak].counter.matrix_reads;
        let pull_reads = pull.trace[peak].counter.matrix_reads;
        assert!(
            pull_reads < push_reads,
            "at peak iteration {peak}: pull {pull_reads} vs push {push_reads}"
        );
        assert!(started.elapsed().as_secs() < 60, "over the 1min budget");
    });
}

// ---------------------------------------------------------------- criterion 5

#[test]
fn criterion_5_ablation_ordering() {
    report("acceptance 5 (optimization stacks never regress)", || {
        let started = Instant::now();
        let a = rmat_bool(14, 16, 5);
        let source = pick_sources(&a, 1, 5, true)[0];
        let rows = ablation(&a, source, 0.01, 0.01).unwrap();
        assert_eq!(rows.len(), 6);
        for w in rows.windows(2) {
            assert!(
                w[1].total_accesses <= w[0].total_accesses,
                "{} regressed: {} -> {}",
                w[1].stack,
                w[0].total_accesses,
                w[1].total_accesses
            );
        }
        let total = |name: &str| {
            rows.iter()
                .find(|r| r.stack == name)
                .unwrap()
                .total_accesses
        };
        assert!(total("masking") < total("change_of_direction"));
        assert!(total("early_exit") < total("masking"));
        assert!(started.elapsed().as_secs() < 120, "over the 2min budget");
    });
}

// ---------------------------------------------------------------- criterion 6

#[test]
fn criterion_6_direction_heuristic() {
    report("acceptance 6 (direction-switch heuristic)", || {
        use StepDirection::*;
        // growing frontier past alpha: push hands over to pull
        assert_eq!(direction_decision(0.004, 0.02, Push, 0.01, 0.01), Pull);
        // shrinking frontier below beta: pull hands back to push
        assert_eq!(direction_decision(0.05, 0.004, Pull, 0.01, 0.01), Push);
        // otherwise hold the current direction
        assert_eq!(direction_decision(0.004, 0.008, Push, 0.01, 0.01), Push);
        assert_eq!(direction_decision(0.02, 0.05, Pull, 0.01, 0.01), Pull);
        assert_eq!(direction_decision(0.05, 0.02, Pull, 0.01, 0.01), Pull);
    });
}

// ---------------------------------------------------------------- criterion 7

#[test]
fn criterion_7_sssp_matches_dijkstra() {
    report("acceptance 7 (SSSP equals Dijkstra)", || {
        let started = Instant::now();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..=512);
            let density = (4.0 / n as f64).min(0.5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(density) {
                        edges.push((u, v, rng.gen_range(1..=10) as f64));
                    }
                }
            }
            let a = DualMatrix::from_edges(&edges, n, n, f64::INFINITY).unwrap();
            let source = rng.gen_range(0..n);
            let want = sssp_reference(&a, source).unwrap();
            let got = sssp(&a, source, &SsspOptions::default()).unwrap();
            assert_eq!(got.distances, want);
            // the direction switch is pure bookkeeping
            let never = sssp(&a, source, &SsspOptions { alpha: 1.0 }).unwrap();
            assert_eq!(never.distances, want);
        }
        assert!(started.elapsed().as_secs() < 30, "over the 30s budget");
    });
}

// ---------------------------------------------------------------- criterion 8

#[test]
fn criterion_8_convert_hysteresis() {
    report("acceptance 8 (convert hysteresis)", || {
        let len = 1000usize; // switchpoint 0.01 puts the boundary at nnz 10
        let run = |trajectory: &[usize]| -> Vec<bool> {
            let mut v = Vector::Sparse(SparseVector::<i64>::new(len));
            let mut prev = 0usize;
            let mut formats = Vec::new();
            for &nnz in trajectory {
                let entries: Vec<(usize, i64)> = (0..nnz).map(|i| (i, 1)).collect();
                v = if v.is_sparse() {
                    Vector::Sparse(SparseVector::from_entries(len, entries, 0).unwrap())
                } else {
                    let mut d = DenseVector::new(len, 0);
                    for (i, x) in entries {
                        d.set(i, x);
                    }
                    Vector::Dense(d)
                };
                let (out, p) = convert(v, 0, 0.01, prev).unwrap();
                prev = p;
                formats.push(out.is_sparse());
                v = out;
            }
            formats
        };
        let conversions = |formats: &[bool]| {
            formats.windows(2).filter(|w| w[0] != w[1]).count()
        };

        // one rising and one falling crossing: exactly two conversions
        let f = run(&[2, 5, 9, 15, 30, 15, 9, 5, 2]);
        assert!(f[..3].iter().all(|&s| s), "below the boundary stays sparse");
        assert!(!f[3] && !f[4], "crossing up goes dense");
        assert!(f[6] && f[7], "crossing back down returns to sparse");
        assert_eq!(conversions(&f), 2);

        // monotone rise: exactly one conversion at the crossing
        let f = run(&[1, 4, 8, 12, 20, 40]);
        assert_eq!(conversions(&f), 1);

        // sitting exactly on the boundary is a tie: no conversion ever
        let f = run(&[10, 10, 10, 10]);
        assert_eq!(conversions(&f), 0);

        // hovering at the boundary from below, never strictly over: none
        let f = run(&[9, 10, 9, 10, 9]);
        assert_eq!(conversions(&f), 0);
    });
}
