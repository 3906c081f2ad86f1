//! The `topo-compat` command line.
//!
//! Exit status is 0 on success (including a definitive "no embedding"), 1
//! when a search ran out of budget and the answer is unknown, and 2 for bad
//! arguments or input.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::compat::{self, Reach, TaskKind};
use crate::edgelist;
use crate::embedding::{self, SearchBudget};
use crate::error::Error;
use crate::graph::Graph;
use crate::topology::TopologySpec;

/// Environment variable holding the default search time limit in seconds.
pub const TIME_LIMIT_ENV: &str = "TOPO_COMPAT_TIME_LIMIT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNKNOWN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "topo-compat",
    version,
    about = "Topological compatibility of parallel tasks and interconnect topologies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a topology as an edge list.
    Gen {
        /// hypercube:s, ring:p, star:p, complete:n or file:PATH
        spec: TopologySpec,
        /// Output file (standard output if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the reachability transform of a topology as an edge list.
    Power {
        spec: TopologySpec,
        #[arg(long, value_parser = parse_reach)]
        reach: Reach,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Parallelism potential and compatibility index of a ring or star task.
    Potential {
        #[arg(long)]
        task: TaskKind,
        #[arg(long)]
        system: TopologySpec,
        #[arg(long, value_parser = parse_reach)]
        reach: Reach,
        /// Print a certificate: the cycle or the star mapping.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compatibility table over hypercube dimensions and reachabilities.
    Table {
        #[arg(long)]
        task: TaskKind,
        /// Dimension range, `A..B` or `A`.
        #[arg(long = "s", value_parser = parse_range)]
        s: RangeInclusive<u32>,
        /// Reachability range, `A..B` or `A`.
        #[arg(long, value_parser = parse_range)]
        reach: RangeInclusive<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether a task graph embeds in a transformed system graph.
    Embed {
        #[arg(long)]
        task: TopologySpec,
        #[arg(long)]
        system: TopologySpec,
        #[arg(long, value_parser = parse_reach)]
        reach: Reach,
        /// Print the mapping, one `task -> host` pair per line.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Markdown,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Maximum number of search nodes.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Wall-time limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Largest host order accepted by the generic embedding search.
    #[arg(long)]
    max_host_order: Option<usize>,
}

impl BudgetArgs {
    fn resolve(&self) -> Result<SearchBudget, String> {
        let mut budget = SearchBudget::default();
        let env_limit = std::env::var(TIME_LIMIT_ENV).ok();
        let seconds = match (self.time_limit, env_limit) {
            (Some(secs), _) => Some(secs),
            (None, Some(text)) => Some(
                text.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("{TIME_LIMIT_ENV}: `{text}` is not a number"))?,
            ),
            (None, None) => None,
        };
        if let Some(secs) = seconds {
            budget.wall_time_limit = Duration::try_from_secs_f64(secs)
                .ok()
                .filter(|d| !d.is_zero())
                .ok_or_else(|| {
                    format!("time limit must be a positive number of seconds, got {secs}")
                })?;
        }
        if let Some(nodes) = self.max_nodes {
            budget.max_nodes_expanded = nodes;
        }
        if let Some(order) = self.max_host_order {
            budget.max_host_order = order;
        }
        Ok(budget)
    }
}

fn parse_reach(text: &str) -> Result<Reach, String> {
    let value: u32 = text
        .parse()
        .map_err(|_| format!("`{text}` is not a positive integer"))?;
    Reach::new(value).map_err(|e| e.to_string())
}

/// Parses `a..b` (inclusive) or a single integer `a`.
///
/// ```
/// use topo_compat::cli::parse_range;
/// assert_eq!(parse_range("2..8").unwrap(), 2..=8);
/// assert_eq!(parse_range("3").unwrap(), 3..=3);
/// assert!(parse_range("5..2").is_err());
/// ```
pub fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let number = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (number(lo)?, number(hi)?),
        None => {
            let v = number(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok(lo..=hi)
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI, writing results to `out` and diagnostics to `err`. Returns
/// the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded(_) | Error::HostTooLarge { .. } => EXIT_UNKNOWN,
                _ => EXIT_USAGE,
            }
        }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("writing output: {e}"))
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Gen { spec, output } => emit_graph(&spec.build()?, output, out),
        Command::Power {
            spec,
            reach,
            output,
        } => emit_graph(&spec.build()?.power(reach.get())?, output, out),
        Command::Potential {
            task,
            system,
            reach,
            witness,
            budget,
        } => {
            let budget = budget.resolve().map_err(Failure::Usage)?;
            let report = compat::evaluate(&system, task, reach, &budget)?;
            writeln!(out, "p={} c={}", report.potential_p, report.index_rounded())?;
            if witness {
                write_potential_witness(&system, task, reach, &budget, out)?;
            }
            Ok(())
        }
        Command::Table {
            task,
            s,
            reach,
            format,
        } => {
            let reports = compat::compatibility_table(s, reach, task)?;
            match format {
                Format::Text => write!(out, "{}", compat::render_text(&reports))?,
                Format::Markdown => write!(out, "{}", compat::render_markdown(&reports))?,
                Format::Csv => compat::write_csv(&reports, out)?,
            }
            Ok(())
        }
        Command::Embed {
            task,
            system,
            reach,
            witness,
            budget,
        } => {
            let budget = budget.resolve().map_err(Failure::Usage)?;
            let task = task.build()?;
            let host = system.build()?.power(reach.get())?;
            match embedding::find_embedding(&task, &host, &budget)? {
                Some(found) => {
                    writeln!(out, "embedding found")?;
                    if witness {
                        for (t, h) in found.mapping().iter().enumerate() {
                            writeln!(out, "{t} -> {h}")?;
                        }
                    }
                }
                None => writeln!(out, "no embedding")?,
            }
            Ok(())
        }
    }
}

fn emit_graph(graph: &Graph, output: Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => edgelist::write_file(&path, graph)?,
        None => out.write_all(edgelist::render(graph).as_bytes())?,
    }
    Ok(())
}

fn write_potential_witness(
    system: &TopologySpec,
    task: TaskKind,
    reach: Reach,
    budget: &SearchBudget,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let graph = system.build()?;
    match task {
        TaskKind::Ring => {
            let cycle = compat::ring_potential_witness(&graph, reach, budget)?;
            match cycle.witness {
                Some(vertices) => {
                    let text: Vec<String> = vertices.iter().map(usize::to_string).collect();
                    writeln!(out, "cycle: {}", text.join(" "))?;
                }
                None => writeln!(out, "cycle: none")?,
            }
        }
        TaskKind::Star => {
            let host = graph.power(reach.get())?;
            let center = (0..host.order())
                .max_by_key(|&v| (host.degree(v), std::cmp::Reverse(v)))
                .expect("graphs are non-empty");
            writeln!(out, "0 -> {center}")?;
            for (leaf, &h) in host.neighbors(center).iter().enumerate() {
                writeln!(out, "{} -> {h}", leaf + 1)?;
            }
        }
    }
    Ok(())
}
