//! Exact embedding search.
//!
//! [`find_embedding`] decides whether a task graph is isomorphic to some
//! subgraph of a host graph (not necessarily induced). [`longest_cycle`]
//! finds the longest simple cycle of a graph. Both are exponential in the
//! worst case and run under a [`SearchBudget`]; running out of budget is
//! reported as [`Error::BudgetExceeded`] and never as a negative answer.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::error::{BudgetKind, Error, Result};
use crate::graph::Graph;
use crate::topology;

/// Caps for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Hosts with more vertices are refused by [`find_embedding`].
    pub max_host_order: usize,
    pub max_nodes_expanded: u64,
    pub wall_time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_host_order: 64,
            max_nodes_expanded: 100_000_000,
            wall_time_limit: Duration::from_secs(60),
        }
    }
}

impl SearchBudget {
    fn validate(&self) -> Result<()> {
        if self.max_host_order == 0
            || self.max_nodes_expanded == 0
            || self.wall_time_limit.is_zero()
        {
            return Err(Error::InvalidParameter(
                "search budget limits must be strictly positive".into(),
            ));
        }
        Ok(())
    }
}

/// Counts expanded search nodes against a budget.
struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
    limit: Duration,
}

impl Meter {
    const CLOCK_INTERVAL: u64 = 1 << 12;

    fn new(budget: &SearchBudget) -> Meter {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes_expanded,
            deadline: Instant::now() + budget.wall_time_limit,
            limit: budget.wall_time_limit,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(BudgetKind::Nodes(self.max_nodes)));
        }
        if self.nodes.is_multiple_of(Self::CLOCK_INTERVAL) && Instant::now() >= self.deadline {
            return Err(Error::BudgetExceeded(BudgetKind::Time(self.limit)));
        }
        Ok(())
    }
}

/// Injective map from task vertices to host vertices; entry `i` is the image
/// of task vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding(Vec<usize>);

impl Embedding {
    pub fn new(mapping: Vec<usize>) -> Embedding {
        Embedding(mapping)
    }

    pub fn mapping(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

/// Checks that `embedding` is injective into the host's vertices and maps
/// every task edge onto a host edge.
pub fn verify_embedding(task: &Graph, host: &Graph, embedding: &Embedding) -> bool {
    let map = embedding.mapping();
    if map.len() != task.order() {
        return false;
    }
    let mut used = vec![false; host.order()];
    for &h in map {
        if h >= host.order() || std::mem::replace(&mut used[h], true) {
            return false;
        }
    }
    task.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
}

/// Searches for a subgraph of `host` isomorphic to `task`.
///
/// Returns `Ok(None)` only when the search has proved that no embedding
/// exists. Hosts larger than `budget.max_host_order` are refused with
/// [`Error::HostTooLarge`].
pub fn find_embedding(
    task: &Graph,
    host: &Graph,
    budget: &SearchBudget,
) -> Result<Option<Embedding>> {
    budget.validate()?;
    if host.order() > budget.max_host_order {
        return Err(Error::HostTooLarge {
            order: host.order(),
            max: budget.max_host_order,
        });
    }
    if task.order() > host.order() || task.size() > host.size() || !degrees_dominated(task, host) {
        return Ok(None);
    }

    let plan = SearchPlan::new(task);
    let mut state = Matcher {
        task,
        host,
        plan: &plan,
        mapping: vec![usize::MAX; task.order()],
        used: vec![false; host.order()],
        meter: Meter::new(budget),
    };
    if state.extend(0)? {
        let embedding = Embedding(state.mapping);
        debug_assert!(verify_embedding(task, host, &embedding));
        Ok(Some(embedding))
    } else {
        Ok(None)
    }
}

/// Necessary condition: the i-th largest task degree never exceeds the i-th
/// largest host degree.
fn degrees_dominated(task: &Graph, host: &Graph) -> bool {
    let sorted = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    };
    sorted(task).iter().zip(sorted(host)).all(|(&t, h)| t <= h)
}

/// Order in which task vertices are matched, with each vertex's
/// already-matched neighbors.
struct SearchPlan {
    order: Vec<usize>,
    /// For `order[i]`, the neighbors appearing in `order[..i]`.
    matched_neighbors: Vec<Vec<usize>>,
}

impl SearchPlan {
    /// Greedy ordering: start from a maximum-degree vertex, then repeatedly
    /// take the vertex with the most already-ordered neighbors, breaking ties
    /// by degree.
    fn new(task: &Graph) -> SearchPlan {
        let n = task.order();
        let mut placed = vec![false; n];
        let mut links = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut matched_neighbors = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (links[v], task.degree(v), std::cmp::Reverse(v)))
                .expect("an unplaced vertex remains");
            placed[next] = true;
            matched_neighbors.push(
                task.neighbors(next)
                    .iter()
                    .copied()
                    .filter(|&u| placed[u] && u != next)
                    .collect(),
            );
            for &u in task.neighbors(next) {
                links[u] += 1;
            }
            order.push(next);
        }
        SearchPlan {
            order,
            matched_neighbors,
        }
    }
}

struct Matcher<'a> {
    task: &'a Graph,
    host: &'a Graph,
    plan: &'a SearchPlan,
    mapping: Vec<usize>,
    used: Vec<bool>,
    meter: Meter,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        let Some(&t) = self.plan.order.get(depth) else {
            return Ok(true);
        };
        let plan = self.plan;
        let anchors = &plan.matched_neighbors[depth];
        let need = self.task.degree(t);
        // Candidates adjacent to the image of one matched neighbor, or every
        // host vertex when t starts a new component.
        let candidates: Vec<usize> = match anchors.first() {
            Some(&u) => self.host.neighbors(self.mapping[u]).to_vec(),
            None => (0..self.host.order()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.host.degree(h) < need {
                continue;
            }
            if !anchors
                .iter()
                .all(|&u| self.host.has_edge(self.mapping[u], h))
            {
                continue;
            }
            self.meter.tick()?;
            self.mapping[t] = h;
            self.used[h] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[h] = false;
            self.mapping[t] = usize::MAX;
        }
        Ok(false)
    }
}

/// Result of [`longest_cycle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestCycle {
    /// Number of vertices on the cycle; 0 when the graph is acyclic.
    pub length: usize,
    /// The cycle's vertices in traversal order, present when `length >= 3`.
    pub witness: Option<Vec<usize>>,
}

/// Length of the longest simple cycle of `graph`, with a witness.
///
/// Each cycle is searched from its smallest vertex, and a branch is cut when
/// the unvisited vertices still reachable from the path end cannot lift the
/// cycle above the best one found.
pub fn longest_cycle(graph: &Graph, budget: &SearchBudget) -> Result<LongestCycle> {
    budget.validate()?;
    let mut search = CycleSearch {
        graph,
        even_only: graph.is_bipartite(),
        meter: Meter::new(budget),
        visited: vec![false; graph.order()],
        path: Vec::new(),
        best: Vec::new(),
        anchor: 0,
        limit: usize::MAX,
    };
    search.run()?;
    let length = search.best.len();
    Ok(LongestCycle {
        length,
        witness: (length >= 3).then_some(search.best),
    })
}

/// Whether `graph` contains a simple cycle of exactly `length` vertices.
/// Returns a witness when it does.
pub fn cycle_of_length(
    graph: &Graph,
    length: usize,
    budget: &SearchBudget,
) -> Result<Option<Vec<usize>>> {
    budget.validate()?;
    if length < 3 || length > graph.order() {
        return Ok(None);
    }
    if length % 2 == 1 && graph.is_bipartite() {
        return Ok(None);
    }
    let task = topology::ring(length)?;
    let unbounded = SearchBudget {
        max_host_order: usize::MAX,
        ..*budget
    };
    Ok(find_embedding(&task, graph, &unbounded)?.map(Embedding::into_inner))
}

struct CycleSearch<'a> {
    graph: &'a Graph,
    even_only: bool,
    meter: Meter,
    visited: Vec<bool>,
    path: Vec<usize>,
    best: Vec<usize>,
    anchor: usize,
    /// Upper bound on any cycle length; the search stops once reached.
    limit: usize,
}

impl CycleSearch<'_> {
    fn run(&mut self) -> Result<()> {
        let n = self.graph.order();
        self.limit = if self.even_only { n & !1 } else { n };
        for anchor in 0..n {
            // Cycles whose smallest vertex is `anchor` only use vertices >= anchor.
            if n - anchor <= self.best.len() || self.best.len() == self.limit {
                break;
            }
            if self.graph.degree(anchor) < 2 {
                continue;
            }
            self.anchor = anchor;
            self.visited[anchor] = true;
            self.path.push(anchor);
            let outcome = self.walk(anchor);
            self.path.pop();
            self.visited[anchor] = false;
            outcome?;
        }
        Ok(())
    }

    fn walk(&mut self, end: usize) -> Result<()> {
        self.meter.tick()?;
        let len = self.path.len();
        if len >= 3 && len > self.best.len() && self.graph.has_edge(end, self.anchor) {
            self.best.clone_from(&self.path);
            if self.best.len() == self.limit {
                return Ok(());
            }
        }
        if self.bound(end) <= self.best.len() {
            return Ok(());
        }
        for &next in self.graph.neighbors(end) {
            if next <= self.anchor || self.visited[next] {
                continue;
            }
            self.visited[next] = true;
            self.path.push(next);
            let outcome = self.walk(next);
            self.path.pop();
            self.visited[next] = false;
            outcome?;
            if self.best.len() == self.limit {
                break;
            }
        }
        Ok(())
    }

    /// Upper bound on the length of any cycle extending the current path:
    /// the path plus every unvisited vertex reachable from `end` through
    /// unvisited vertices above the anchor. Returns 0 when the anchor can no
    /// longer be reached.
    fn bound(&self, end: usize) -> usize {
        let g = self.graph;
        let mut seen = vec![false; g.order()];
        let mut stack = vec![end];
        let mut extra = 0;
        let mut closable = false;
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if v > self.anchor && !self.visited[v] && !seen[v] {
                    seen[v] = true;
                    extra += 1;
                    closable |= g.has_edge(v, self.anchor);
                    stack.push(v);
                }
            }
        }
        if !closable {
            return 0;
        }
        let bound = self.path.len() + extra;
        if self.even_only {
            bound & !1
        } else {
            bound
        }
    }
}

/// Order of the largest star `K_{1,k}` that embeds in `graph`: one plus the
/// maximum degree.
pub fn max_star_order(graph: &Graph) -> usize {
    1 + graph.max_degree()
}

/// The ring orders `p` in `3..=up_to` for which `C_p` embeds in `graph`.
///
/// Each order is decided by its own search, since a graph with a cycle of
/// length `p` need not have one of length `p - 1`.
pub fn embeddable_ring_orders(
    graph: &Graph,
    up_to: usize,
    budget: &SearchBudget,
) -> Result<BTreeSet<usize>> {
    if up_to > graph.order() {
        return Err(Error::InvalidParameter(format!(
            "ring order bound {up_to} exceeds graph order {}",
            graph.order()
        )));
    }
    let mut orders = BTreeSet::new();
    for p in 3..=up_to {
        let task = topology::ring(p)?;
        if find_embedding(&task, graph, budget)?.is_some() {
            orders.insert(p);
        }
    }
    Ok(orders)
}
