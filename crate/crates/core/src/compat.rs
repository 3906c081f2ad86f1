//! Parallelism potentials and compatibility indexes.
//!
//! The potential `p` of a task topology on a system at reachability `reach`
//! is the largest order of that task graph that embeds in the system graph
//! after the reachability transform ([`Graph::power`]). The compatibility
//! index is `p / n`, where `n` is the system order; an index of 1 means the
//! task can use every processor.
//!
//! Stars and rings have dedicated routes:
//!
//! * a star `K_{1,k}` embeds iff some vertex has degree `k`, so its potential
//!   is one plus the maximum degree of the transformed graph. On the
//!   hypercube `H_s` that is the Hamming-ball size `sum_{i<=reach} C(s, i)`
//!   ([`hypercube_star_potential`]);
//! * a ring's potential is the longest cycle of the transformed graph. The
//!   reflected Gray code is a Hamiltonian cycle of `H_s`, so every hypercube
//!   with `s >= 2` has ring potential `2^s` at any reachability.

use std::fmt;
use std::io;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::embedding::{self, LongestCycle, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::topology::{self, TopologySpec};

/// Largest hypercube dimension the closed forms handle (`2^s` must fit in
/// `u64`).
pub const MAX_CLOSED_FORM_DIM: u32 = 63;

/// Task topologies with a named potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TaskKind {
    Ring,
    Star,
}

impl TaskKind {
    /// Subscript used in table labels (`p_R`, `p_Z`).
    fn symbol(self) -> char {
        match self {
            TaskKind::Ring => 'R',
            TaskKind::Star => 'Z',
        }
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TaskKind::Ring => "ring",
            TaskKind::Star => "star",
        })
    }
}

impl FromStr for TaskKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ring" => Ok(TaskKind::Ring),
            "star" => Ok(TaskKind::Star),
            other => Err(Error::InvalidParameter(format!(
                "task kind must be `ring` or `star`, got `{other}`"
            ))),
        }
    }
}

/// A reachability value, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Reach(u32);

impl Reach {
    pub fn new(reach: u32) -> Result<Reach> {
        if reach == 0 {
            Err(Error::InvalidReachability)
        } else {
            Ok(Reach(reach))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Exact binomial coefficient `C(n, k)`, zero for `k > n`.
///
/// # Panics
///
/// If the result does not fit in `u64`.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=u128::from(k) {
        // acc * (n - k + i) is divisible by i: acc is C(n-k+i-1, i-1).
        acc = acc * (u128::from(n - k) + i) / i;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Star potential of the hypercube `H_s` at reachability `reach`: the number
/// of bit strings within Hamming distance `reach` of a fixed one,
/// `sum_{i=0}^{reach} C(s, i)`. Saturates at `2^s` once `reach >= s`.
///
/// ```
/// use topo_compat::compat::hypercube_star_potential;
/// assert_eq!(hypercube_star_potential(5, 2).unwrap(), 16);
/// assert_eq!(hypercube_star_potential(8, 3).unwrap(), 93);
/// assert_eq!(hypercube_star_potential(2, 3).unwrap(), 4);
/// ```
pub fn hypercube_star_potential(s: u32, reach: u32) -> Result<u64> {
    check_dimension(s)?;
    Reach::new(reach)?;
    Ok((0..=reach.min(s)).map(|i| binomial(s, i)).sum())
}

fn check_dimension(s: u32) -> Result<()> {
    if (1..=MAX_CLOSED_FORM_DIM).contains(&s) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "hypercube dimension must be in 1..={MAX_CLOSED_FORM_DIM}, got {s}"
        )))
    }
}

/// Largest star that embeds in `system` transformed to reachability `reach`.
///
/// Disconnected systems are fine: the best vertex of any component wins.
pub fn star_potential(system: &Graph, reach: Reach) -> Result<usize> {
    Ok(embedding::max_star_order(&system.power(reach.get())?))
}

/// Longest ring that embeds in `system` transformed to reachability `reach`,
/// or 0 if the transformed graph is acyclic.
pub fn ring_potential(system: &Graph, reach: Reach, budget: &SearchBudget) -> Result<usize> {
    Ok(ring_potential_witness(system, reach, budget)?.length)
}

/// Like [`ring_potential`], also returning the cycle.
///
/// Cheap Hamiltonian certificates (the Gray-code order when the order is a
/// power of two, and the identity order) are tried before the exact
/// longest-cycle search.
pub fn ring_potential_witness(
    system: &Graph,
    reach: Reach,
    budget: &SearchBudget,
) -> Result<LongestCycle> {
    let host = system.power(reach.get())?;
    let n = host.order();
    if n < 3 {
        return Ok(LongestCycle {
            length: 0,
            witness: None,
        });
    }
    let mut certificates = Vec::new();
    if n.is_power_of_two() {
        certificates.push(topology::gray_code_cycle(n.trailing_zeros())?);
    }
    certificates.push((0..n).collect());
    for cycle in certificates {
        if (0..n).all(|i| host.has_edge(cycle[i], cycle[(i + 1) % n])) {
            return Ok(LongestCycle {
                length: n,
                witness: Some(cycle),
            });
        }
    }
    embedding::longest_cycle(&host, budget)
}

/// The index `p / n` as an exact fraction.
///
/// `p = 0` is accepted: it is the ring potential of an acyclic system.
pub fn compatibility_index(potential: u64, order: u64) -> Result<Ratio<u64>> {
    if order == 0 {
        return Err(Error::EmptyGraph);
    }
    if potential > order {
        return Err(Error::InvalidPotential { potential, order });
    }
    Ok(Ratio::new(potential, order))
}

/// Renders a non-negative fraction with four decimals, rounding half up.
///
/// ```
/// use num_rational::Ratio;
/// use topo_compat::compat::round_half_up_4;
/// assert_eq!(round_half_up_4(Ratio::new(22, 64)), "0.3438");
/// assert_eq!(round_half_up_4(Ratio::new(1, 1)), "1.0000");
/// ```
pub fn round_half_up_4(value: Ratio<u64>) -> String {
    let num = u128::from(*value.numer());
    let den = u128::from(*value.denom());
    let scaled = (2 * num * 10_000 + den) / (2 * den);
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

/// One cell of a compatibility table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub system: TopologySpec,
    pub task: TaskKind,
    pub reach: Reach,
    pub order_n: u64,
    pub potential_p: u64,
    pub index: Ratio<u64>,
}

impl CompatibilityReport {
    fn new(
        system: TopologySpec,
        task: TaskKind,
        reach: Reach,
        order_n: u64,
        potential_p: u64,
    ) -> Result<Self> {
        Ok(CompatibilityReport {
            index: compatibility_index(potential_p, order_n)?,
            system,
            task,
            reach,
            order_n,
            potential_p,
        })
    }

    /// The index with four decimals, half-up.
    pub fn index_rounded(&self) -> String {
        round_half_up_4(self.index)
    }

    /// Hypercube dimension for hypercube systems, the system order otherwise.
    pub fn s_or_n(&self) -> u64 {
        match self.system {
            TopologySpec::Hypercube(s) => u64::from(s),
            _ => self.order_n,
        }
    }
}

/// Computes the report for one system and task.
///
/// Hypercubes take the closed forms and never reach the generic search, so
/// any dimension up to [`MAX_CLOSED_FORM_DIM`] is answered instantly. Other
/// systems are generated (or read) and evaluated exactly.
pub fn evaluate(
    system: &TopologySpec,
    task: TaskKind,
    reach: Reach,
    budget: &SearchBudget,
) -> Result<CompatibilityReport> {
    if let TopologySpec::Hypercube(s) = *system {
        return hypercube_report(s, task, reach);
    }
    let graph = system.build()?;
    let potential = match task {
        TaskKind::Star => star_potential(&graph, reach)?,
        TaskKind::Ring => ring_potential(&graph, reach, budget)?,
    };
    CompatibilityReport::new(
        system.clone(),
        task,
        reach,
        graph.order() as u64,
        potential as u64,
    )
}

fn hypercube_report(s: u32, task: TaskKind, reach: Reach) -> Result<CompatibilityReport> {
    check_dimension(s)?;
    let n = 1u64 << s;
    let potential = match task {
        TaskKind::Star => hypercube_star_potential(s, reach.get())?,
        // H_1 is a single edge; from s = 2 on the Gray code closes a
        // Hamiltonian cycle, which survives any reachability transform.
        TaskKind::Ring if s == 1 => 0,
        TaskKind::Ring => n,
    };
    CompatibilityReport::new(TopologySpec::Hypercube(s), task, reach, n, potential)
}

/// Hypercube compatibility table, one report per `(s, reach)` pair, ordered
/// by reachability first and then by ascending `s`.
pub fn compatibility_table(
    s_range: RangeInclusive<u32>,
    reach_range: RangeInclusive<u32>,
    task: TaskKind,
) -> Result<Vec<CompatibilityReport>> {
    if s_range.is_empty() || reach_range.is_empty() {
        return Err(Error::InvalidParameter("empty table range".into()));
    }
    let mut reports = Vec::new();
    for reach in reach_range {
        let reach = Reach::new(reach)?;
        for s in s_range.clone() {
            reports.push(hypercube_report(s, task, reach)?);
        }
    }
    Ok(reports)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    task: String,
    system: &'a str,
    s_or_n: u64,
    reach: u32,
    n: u64,
    p: u64,
    c_exact_num: u64,
    c_exact_den: u64,
    c_rounded: String,
}

/// Writes reports as CSV with a header row.
pub fn write_csv<W: io::Write>(reports: &[CompatibilityReport], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for r in reports {
        writer.serialize(CsvRow {
            task: r.task.to_string(),
            system: r.system.kind(),
            s_or_n: r.s_or_n(),
            reach: r.reach.get(),
            n: r.order_n,
            p: r.potential_p,
            c_exact_num: *r.index.numer(),
            c_exact_den: *r.index.denom(),
            c_rounded: r.index_rounded(),
        })?;
    }
    if reports.is_empty() {
        writer.write_record([
            "task",
            "system",
            "s_or_n",
            "reach",
            "n",
            "p",
            "c_exact_num",
            "c_exact_den",
            "c_rounded",
        ])?;
    }
    writer.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Markdown table with one column per system and one row per reachability,
/// each cell `p; C`. Hypercube tables get `s` and `n = 2^s` header rows.
pub fn render_markdown(reports: &[CompatibilityReport]) -> String {
    let mut columns: Vec<&TopologySpec> = Vec::new();
    let mut rows: Vec<(TaskKind, Reach)> = Vec::new();
    for r in reports {
        if !columns.contains(&&r.system) {
            columns.push(&r.system);
        }
        if !rows.contains(&(r.task, r.reach)) {
            rows.push((r.task, r.reach));
        }
    }
    let all_cubes = columns
        .iter()
        .all(|c| matches!(c, TopologySpec::Hypercube(_)));
    let order_of = |spec: &TopologySpec| {
        reports
            .iter()
            .find(|r| &r.system == spec)
            .map_or(0, |r| r.order_n)
    };

    let mut lines = Vec::new();
    let line = |first: String, cells: Vec<String>| format!("| {} | {} |", first, cells.join(" | "));
    if all_cubes {
        lines.push(line(
            "s".into(),
            columns
                .iter()
                .map(|c| match c {
                    TopologySpec::Hypercube(s) => s.to_string(),
                    _ => unreachable!(),
                })
                .collect(),
        ));
    } else {
        lines.push(line(
            "system".into(),
            columns.iter().map(|c| c.to_string()).collect(),
        ));
    }
    lines.push(format!("|{}", "---|".repeat(columns.len() + 1)));
    lines.push(line(
        if all_cubes { "n = 2^s" } else { "n" }.into(),
        columns.iter().map(|c| order_of(c).to_string()).collect(),
    ));
    let graph = if all_cubes { "H_s" } else { "G" };
    for (task, reach) in rows {
        let label = format!(
            "p_{t}({graph})_{d}; C_{t}({graph})_{d}",
            t = task.symbol(),
            d = reach.get()
        );
        let cells = columns
            .iter()
            .map(|c| {
                reports
                    .iter()
                    .find(|r| &r.system == *c && r.task == task && r.reach == reach)
                    .map_or_else(String::new, |r| {
                        format!("{}; {}", r.potential_p, r.index_rounded())
                    })
            })
            .collect();
        lines.push(line(label, cells));
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// One line per report, e.g. `star hypercube:5 reach=2 n=32 p=16 c=0.5000`.
pub fn render_text(reports: &[CompatibilityReport]) -> String {
    reports
        .iter()
        .map(|r| {
            format!(
                "{} {} reach={} n={} p={} c={}\n",
                r.task,
                r.system,
                r.reach.get(),
                r.order_n,
                r.potential_p,
                r.index_rounded()
            )
        })
        .collect()
}
