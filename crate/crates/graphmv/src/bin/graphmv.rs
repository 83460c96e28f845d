//! Thin CLI over the library: traversals, the matvec microbenchmark, the
//! optimization ablation, and the RMAT generator. All heavy lifting lives
//! in `graphmv::harness`; this file only parses flags and writes files.

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphmv::harness::{
    ablation, ablation_csv, bfs_csv, depths_csv, microbench_bfs, microbench_csv, microbench_random,
    pick_sources, run_bfs,
};
use graphmv::io::{
    generate_rmat, load_edge_list, load_matrix_market, preprocess, write_edge_list,
    write_matrix_market, EdgeList,
};
use graphmv::{
    bfs_reference, sssp, sssp_reference, BfsMode, BfsOptions, DualMatrix, SsspOptions, Toggles,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "graphmv", about = "Masked push-pull matvec kernels and traversals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Mtx,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Push,
    Pull,
    Do,
}

#[derive(Args)]
struct GraphArgs {
    /// Input graph file.
    #[arg(long)]
    graph: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Mirror every edge before building the matrix.
    #[arg(long)]
    undirected: bool,
    /// Rayon thread-pool size (0 = default).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct TuningArgs {
    #[arg(long, default_value_t = 0.01)]
    alpha: f64,
    #[arg(long, default_value_t = 0.01)]
    beta: f64,
    #[arg(long, default_value_t = 0.01)]
    switchpoint: f64,
}

#[derive(Args)]
struct ToggleArgs {
    #[arg(long)]
    no_masking: bool,
    #[arg(long)]
    no_early_exit: bool,
    #[arg(long)]
    no_operand_reuse: bool,
    #[arg(long)]
    no_structure_only: bool,
    #[arg(long)]
    no_direction: bool,
}

impl ToggleArgs {
    fn toggles(&self) -> Toggles {
        Toggles {
            masking: !self.no_masking,
            early_exit: !self.no_early_exit,
            operand_reuse: !self.no_operand_reuse,
            structure_only: !self.no_structure_only,
            change_of_direction: !self.no_direction,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Breadth-first search with a per-iteration trace.
    Bfs {
        #[command(flatten)]
        graph: GraphArgs,
        /// Fixed source vertex; overrides --sources.
        #[arg(long)]
        source: Option<usize>,
        /// Number of random sources from the largest component.
        #[arg(long, default_value_t = 1)]
        sources: usize,
        /// Run all 32 toggle combinations and report agreement.
        #[arg(long)]
        all_toggles_matrix: bool,
        #[arg(long, value_enum, default_value = "do")]
        mode: Mode,
        #[command(flatten)]
        tuning: TuningArgs,
        #[command(flatten)]
        toggles: ToggleArgs,
        /// Check depths against a queue-based reference.
        #[arg(long)]
        verify: bool,
        /// Report hop counts (source 0) instead of 1-based depths.
        #[arg(long)]
        hops: bool,
        #[arg(long, default_value_t = 10)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trace CSV output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Single-source shortest paths over min-plus.
    Sssp {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 0)]
        source: usize,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        /// Check distances against Dijkstra.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the four matvec variants and report access counts.
    Microbench {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vector protocol: random subsets or frontiers from real traversals.
        #[arg(long, value_enum, default_value = "random")]
        protocol: Protocol,
        /// Sweep points (random protocol) or traversal sources (bfs protocol).
        #[arg(long, default_value_t = 12)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cumulative optimization stacks, baseline to fully optimized.
    Ablation {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        source: Option<usize>,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        #[arg(long, default_value_t = 0.01)]
        beta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write an RMAT graph to a file.
    Generate {
        #[arg(long, default_value_t = 10)]
        scale: u32,
        #[arg(long, default_value_t = 16)]
        edge_factor: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Drop loops/duplicates and mirror edges before writing.
        #[arg(long)]
        undirected: bool,
        #[arg(long, value_enum, default_value = "mtx")]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Protocol {
    Random,
    Bfs,
}

fn load(args: &GraphArgs) -> Result<EdgeList, String> {
    if args.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(args.threads)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))?;
    }
    let format = args.format.unwrap_or_else(|| {
        match args.graph.extension().and_then(|e| e.to_str()) {
            Some("mtx") => Format::Mtx,
            _ => Format::Edgelist,
        }
    });
    let e = match format {
        Format::Mtx => load_matrix_market(&args.graph),
        Format::Edgelist => load_edge_list(&args.graph),
    }
    .map_err(|e| e.to_string())?;
    Ok(preprocess(&e, args.undirected))
}

fn load_bool(args: &GraphArgs) -> Result<DualMatrix<bool>, String> {
    load(args)?.to_bool_matrix().map_err(|e| e.to_string())
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run() -> Result<(), String> {
    match Cli::parse().command {
        Command::Bfs {
            graph,
            source,
            sources,
            all_toggles_matrix,
            mode,
            tuning,
            toggles,
            verify,
            hops,
            repeats,
            seed,
            out,
        } => {
            let a = load_bool(&graph)?;
            let srcs = match source {
                Some(s) => vec![s],
                None => pick_sources(&a, sources, seed, true),
            };
            let mode = match mode {
                Mode::Push => BfsMode::PushOnly,
                Mode::Pull => BfsMode::PullOnly,
                Mode::Do => BfsMode::DirectionOptimized,
            };
            let opts = BfsOptions {
                alpha: tuning.alpha,
                beta: tuning.beta,
                mode,
                toggles: toggles.toggles(),
                switchpoint: tuning.switchpoint,
            };

            if all_toggles_matrix {
                let s = srcs[0];
                let expect = bfs_reference(&a, s).map_err(|e| e.to_string())?;
                for t in Toggles::all_combinations() {
                    let o = BfsOptions { toggles: t, ..opts };
                    let r = graphmv::bfs(&a, s, &o).map_err(|e| e.to_string())?;
                    let ok = r.depths.values() == expect.as_slice();
                    println!(
                        "masking={} early_exit={} operand_reuse={} structure_only={} direction={} iters={} accesses={} {}",
                        t.masking as u8,
                        t.early_exit as u8,
                        t.operand_reuse as u8,
                        t.structure_only as u8,
                        t.change_of_direction as u8,
                        r.trace.len(),
                        r.trace.iter().map(|i| i.counter.total()).sum::<u64>(),
                        if ok { "OK" } else { "MISMATCH" },
                    );
                    if !ok {
                        return Err(format!("toggle combination {t:?} changed the depths"));
                    }
                }
                return Ok(());
            }

            let report = run_bfs(&a, &srcs, &opts, repeats).map_err(|e| e.to_string())?;
            if verify {
                for run in &report.runs {
                    let expect = bfs_reference(&a, run.source).map_err(|e| e.to_string())?;
                    if run.result.depths.values() != expect.as_slice() {
                        println!("FAIL source {}", run.source);
                        return Err("depths disagree with the reference traversal".into());
                    }
                }
                println!("PASS ({} sources verified)", report.runs.len());
            }
            eprintln!(
                "mteps mean {:.3} min {:.3} max {:.3} over {} sources x {} repeats",
                report.mean_mteps,
                report.min_mteps,
                report.max_mteps,
                report.runs.len(),
                repeats
            );
            let mut text = bfs_csv(&report, hops);
            if srcs.len() == 1 {
                text.push('\n');
                text.push_str(&depths_csv(&report.runs[0].result, hops));
            }
            emit(&out, &text)
        }
        Command::Sssp {
            graph,
            source,
            alpha,
            verify,
            out,
        } => {
            let a = load(&graph)?.to_weighted_matrix().map_err(|e| e.to_string())?;
            let res = sssp(&a, source, &SsspOptions { alpha }).map_err(|e| e.to_string())?;
            if verify {
                let want = sssp_reference(&a, source).map_err(|e| e.to_string())?;
                if res.distances != want {
                    println!("FAIL");
                    return Err("distances disagree with Dijkstra".into());
                }
                println!("PASS");
            }
            let mut text = String::from("vertex,distance\n");
            for (i, d) in res.distances.iter().enumerate() {
                text.push_str(&format!("{i},{d}\n"));
            }
            emit(&out, &text)
        }
        Command::Microbench {
            graph,
            protocol,
            points,
            seed,
            out,
        } => {
            let a = load_bool(&graph)?;
            let rows = match protocol {
                Protocol::Random => microbench_random(&a, points, seed),
                Protocol::Bfs => microbench_bfs(&a, points, seed),
            }
            .map_err(|e| e.to_string())?;
            emit(&out, &microbench_csv(&rows))
        }
        Command::Ablation {
            graph,
            source,
            alpha,
            beta,
            seed,
            out,
        } => {
            let a = load_bool(&graph)?;
            let source = match source {
                Some(s) => s,
                None => pick_sources(&a, 1, seed, true)[0],
            };
            let rows = ablation(&a, source, alpha, beta).map_err(|e| e.to_string())?;
            emit(&out, &ablation_csv(&rows))
        }
        Command::Generate {
            scale,
            edge_factor,
            seed,
            undirected,
            format,
            out,
        } => {
            let e = generate_rmat(scale, edge_factor, seed).map_err(|e| e.to_string())?;
            let e = if undirected { preprocess(&e, true) } else { e };
            match format {
                Format::Mtx => write_matrix_market(&out, &e),
                Format::Edgelist => write_edge_list(&out, &e),
            }
            .map_err(|e| e.to_string())?;
            eprintln!(
                "wrote {} vertices, {} edges to {}",
                e.num_rows,
                e.edges.len(),
                out.display()
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
