use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ramseykit::bundle::{Bundle, HostSidecar, InstanceSidecar};
use ramseykit::compose::{compose, witness_parameters, ComposeOutput, Strategy};
use ramseykit::construct::{embed, Instance};
use ramseykit::error::Error;
use ramseykit::graph::Graph;
use ramseykit::harness::{
    blowup_csv, blowup_report, gen_refinement_instance, verify_composition, Target,
    DEFAULT_FEASIBILITY_CAP,
};
use ramseykit::host::{host_from_graph, validate_host, HostGraph};
use ramseykit::ramsey::{compute_ramsey_exhaustive, ramsey_gap, verify_ramsey_witness, RamseyTable};
use ramseykit::solve::{has_homogeneous, max_clique, max_independent_set, WitnessKind};
use ramseykit::{dimacs, Error as KitError};

#[derive(Parser)]
#[command(name = "ramseykit", version, about = "Graph reductions, instance embeddings, host-graph search, and exact small Ramsey numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SolveMode {
    Clique,
    Indep,
    Either,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StrategyName {
    Turan,
    Witness,
    Random,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Yes,
    No,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReduceFrom {
    Clique,
    Ramsey,
}

#[derive(Args)]
struct StrategyArgs {
    #[arg(long, value_enum)]
    strategy: StrategyName,
    /// Host quality bound for the random strategy (defaults to the witness
    /// strategy's choice for the same t).
    #[arg(long)]
    ell: Option<usize>,
    /// Host vertex count for the random strategy (defaults to R(ell) + t).
    #[arg(long = "T")]
    t_vertices: Option<usize>,
    /// Trial budget for the random strategy's host search.
    #[arg(long = "host-trials", default_value_t = 1000)]
    host_trials: usize,
}

impl StrategyArgs {
    fn build(&self, t: usize, table: &RamseyTable) -> Result<Strategy, KitError> {
        Ok(match self.strategy {
            StrategyName::Turan => Strategy::Turan,
            StrategyName::Witness => Strategy::Witness,
            StrategyName::Random => {
                let ell = match self.ell {
                    Some(e) => e,
                    None => witness_parameters(t, table)?.0,
                };
                let t_vertices = match self.t_vertices {
                    Some(tv) => tv,
                    None => {
                        table.get(ell).ok_or(Error::TableInsufficient { t, max_t: 11 })? + t
                    }
                };
                Strategy::Random { ell, t_vertices, max_trials: self.host_trials }
            }
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph has a size-k clique / independent set / either.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "either")]
        mode: SolveMode,
    },
    /// Ramsey-number utilities: exhaustive computation, witness checks, gaps.
    Ramsey {
        /// Compute R(k) exhaustively over labeled graphs.
        #[arg(long)]
        compute: Option<usize>,
        /// Vertex cap for --compute.
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// Check a DIMACS graph as a Ramsey witness for --k.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        /// Find the smallest ell with R(ell+1) > R(ell) + t.
        #[arg(long)]
        gap: Option<usize>,
        /// Write the shipped exact table as JSON.
        #[arg(long)]
        emit_table: Option<PathBuf>,
    },
    /// Apply one of the two reductions; writes DIMACS + JSON sidecar.
    Reduce {
        #[arg(long, value_enum)]
        from: ReduceFrom,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Embed a bundle of instances into a supplied host graph.
    Embed {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Produce a host graph with the chosen strategy.
    Host {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compose a bundle of refinement instances into one instance.
    Compose {
        #[arg(long)]
        bundle: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a certified refinement instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify input-OR against the composed answer over random trials.
    Verify {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-instance vertex count (defaults to the smallest feasible).
        #[arg(long)]
        n: Option<usize>,
        /// Cap on the composed graph size the verifier will solve.
        #[arg(long, default_value_t = DEFAULT_FEASIBILITY_CAP)]
        cap: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Parameter-blowup table as CSV on stdout.
    Report {
        #[arg(long)]
        blowup: bool,
        #[arg(long, value_delimiter = ',')]
        t: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',', value_enum)]
        strategies: Vec<StrategyName>,
    },
}

fn load_graph(path: &Path) -> Result<Graph, KitError> {
    dimacs::parse(BufReader::new(File::open(path)?))
}

fn write_graph(g: &Graph, path: &Path) -> Result<(), KitError> {
    let mut f = File::create(path)?;
    dimacs::write(g, &mut f)?;
    Ok(())
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn write_json<T: serde::Serialize>(value: &T, path: &Path) -> Result<(), KitError> {
    let mut f = File::create(path)?;
    serde_json::to_writer_pretty(&mut f, value)?;
    writeln!(f)?;
    Ok(())
}

fn one_indexed(members: &[usize]) -> String {
    members.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<(), KitError> {
    let table = RamseyTable::shipped();
    match cli.command {
        Command::Solve { graph, k, mode } => {
            let g = load_graph(&graph)?;
            let witness = match mode {
                SolveMode::Clique => {
                    let w = max_clique(&g);
                    (w.size() >= k).then_some(w)
                }
                SolveMode::Indep => {
                    let w = max_independent_set(&g);
                    (w.size() >= k).then_some(w)
                }
                SolveMode::Either => has_homogeneous(&g, k),
            };
            match witness {
                Some(w) => {
                    let kind = match w.kind {
                        WitnessKind::Clique => "clique",
                        WitnessKind::IndependentSet => "independent-set",
                    };
                    println!("yes {kind} {}", one_indexed(w.members.members()));
                }
                None => println!("no"),
            }
        }
        Command::Ramsey { compute, cap, witness, k, gap, emit_table } => {
            let mut did_something = false;
            if let Some(kk) = compute {
                println!("R({kk}) = {}", compute_ramsey_exhaustive(kk, cap)?);
                did_something = true;
            }
            if let Some(path) = witness {
                let kk = k.ok_or(Error::KOutOfRange { k: 0, n: 0 })?;
                let g = load_graph(&path)?;
                if verify_ramsey_witness(&g, kk) {
                    println!("witness: certifies R({kk}) > {}", g.n());
                } else {
                    println!("not a witness for k={kk}");
                }
                did_something = true;
            }
            if let Some(t) = gap {
                let g = ramsey_gap(t, &table)?;
                println!("ell = {}, T = {}", g.ell, g.t_vertices);
                did_something = true;
            }
            if let Some(path) = emit_table {
                write_json(&table, &path)?;
                did_something = true;
            }
            if !did_something {
                eprintln!("nothing to do: pass --compute, --witness, --gap, or --emit-table");
            }
        }
        Command::Reduce { from, graph, k, out } => {
            let g = load_graph(&graph)?;
            let inst = match from {
                ReduceFrom::Clique => ramseykit::clique_to_ramsey(&g, k)?,
                ReduceFrom::Ramsey => ramseykit::ramsey_to_refinement(&g, k)?,
            };
            write_graph(&inst.graph, &out)?;
            write_json(&InstanceSidecar::of(&inst), &sidecar_path(&out))?;
            println!("wrote {} (k = {})", out.display(), inst.k);
        }
        Command::Embed { bundle, host, ell, out } => {
            let instances = Bundle::load(&bundle)?;
            let k = instances.first().map(|i| i.k).ok_or(Error::EmptyInstances)?;
            let host_graph = host_from_graph(load_graph(&host)?, ell)?;
            validate_host(&host_graph).map_err(|v| Error::HostInvalid(v.to_string()))?;
            let result = embed(&host_graph, k, &instances)?;
            write_graph(&result.g_prime, &out)?;
            write_json(&result.sidecar(), &sidecar_path(&out))?;
            println!("wrote {} (k' = {})", out.display(), result.k_prime);
        }
        Command::Host { t, strategy, seed, out } => {
            let strat = strategy.build(t, &table)?;
            let host: HostGraph = ramseykit::compose::build_host(t, &strat, seed, &table)?;
            write_graph(&host.h, &out)?;
            write_json(&HostSidecar::of(&host, strat.label()), &sidecar_path(&out))?;
            println!("wrote {} (ell = {}, {} cover sets)", out.display(), host.ell, host.cover.len());
        }
        Command::Compose { bundle, strategy, seed, out } => {
            let instances = Bundle::load(&bundle)?;
            let strat = strategy.build(instances.len(), &table)?;
            match compose(&instances, &strat, seed, &table)? {
                ComposeOutput::Direct(answer) => {
                    println!("{}", if answer { "yes" } else { "no" });
                }
                ComposeOutput::Composed(c) => {
                    write_graph(&c.embed.g_prime, &out)?;
                    #[derive(serde::Serialize)]
                    struct ComposeSidecar {
                        k_prime: usize,
                        ell: usize,
                        strategy: String,
                        assignment: Vec<usize>,
                        block_ranges: Vec<(usize, usize)>,
                    }
                    write_json(
                        &ComposeSidecar {
                            k_prime: c.embed.k_prime,
                            ell: c.host.ell,
                            strategy: c.strategy.label().to_string(),
                            assignment: c.embed.assignment.clone(),
                            block_ranges: c.embed.block_ranges.clone(),
                        },
                        &sidecar_path(&out),
                    )?;
                    println!("wrote {} (k' = {}, ell = {})", out.display(), c.embed.k_prime, c.host.ell);
                }
            }
        }
        Command::Gen { n, k, target, seed, out } => {
            let target = match target {
                TargetArg::Yes => Target::Yes,
                TargetArg::No => Target::No,
            };
            let inst: Instance = gen_refinement_instance(n, k, target, seed)?;
            write_graph(&inst.graph, &out)?;
            write_json(&InstanceSidecar::of(&inst), &sidecar_path(&out))?;
            println!("wrote {} (k = {})", out.display(), inst.k);
        }
        Command::Verify { t, k, strategy, trials, seed, n, cap, report } => {
            let strat = strategy.build(t, &table)?;
            let rep = verify_composition(t, k, &strat, trials, seed, n, cap)?;
            println!(
                "{}/{} trials agree (t={t}, k={k}, strategy={}, seed={seed})",
                rep.passes,
                rep.records.len(),
                strat.label()
            );
            if let Some(path) = report {
                std::fs::write(&path, rep.to_canonical_json())?;
                println!("report written to {}", path.display());
            }
            if !rep.all_pass() {
                return Err(Error::HostInvalid(format!(
                    "{} trial(s) disagreed; see the report",
                    rep.failures
                )));
            }
        }
        Command::Report { blowup, t, k, strategies } => {
            if !blowup {
                eprintln!("only --blowup reports are available");
                return Ok(());
            }
            let strategies: Vec<Strategy> = strategies
                .iter()
                .map(|s| match s {
                    StrategyName::Turan => Ok(Strategy::Turan),
                    StrategyName::Witness => Ok(Strategy::Witness),
                    StrategyName::Random => Err(Error::HostInvalid(
                        "blowup reports cover the deterministic strategies".into(),
                    )),
                })
                .collect::<Result<_, _>>()?;
            let rows = blowup_report(&t, &k, &strategies)?;
            print!("{}", blowup_csv(&rows));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
