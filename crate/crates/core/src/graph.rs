//! Simple undirected graphs, BFS distances and the reachability transform.
//!
//! A [`Graph`] is immutable once built. Vertices are the contiguous range
//! `0..order`, neighbor lists are kept sorted, and for graphs up to
//! [`DENSE_LIMIT`] vertices a bit matrix answers adjacency queries in
//! constant time. Larger graphs fall back to binary search over the sorted
//! neighbor list.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order for which the adjacency bit matrix is materialized.
pub const DENSE_LIMIT: usize = 4096;

const WORD: usize = u64::BITS as usize;

/// Immutable simple undirected graph on vertices `0..order`.
#[derive(Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    bits: Option<BitMatrix>,
}

#[derive(Clone)]
struct BitMatrix {
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    fn new(order: usize) -> Self {
        let words_per_row = order.div_ceil(WORD);
        BitMatrix {
            words_per_row,
            words: vec![0; words_per_row * order],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.words[u * self.words_per_row + v / WORD] |= 1 << (v % WORD);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.words[u * self.words_per_row + v / WORD] & (1 << (v % WORD)) != 0
    }
}

impl Graph {
    /// Builds a graph from an edge sequence.
    ///
    /// `(u, v)` and `(v, u)` denote the same edge and repeated pairs collapse.
    /// Endpoints outside `0..order` fail with [`Error::InvalidVertex`] and
    /// self-loops with [`Error::InvalidEdge`].
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); order];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= order {
                    return Err(Error::InvalidVertex { vertex, order });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Graph::from_adjacency(adjacency))
    }

    /// Builds from per-vertex neighbor lists that are already symmetric and
    /// loop-free. Lists are sorted and deduplicated here.
    pub(crate) fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Graph {
        let order = adjacency.len();
        let mut offsets = Vec::with_capacity(order + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            debug_assert!(list.iter().all(|&v| v < order));
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let bits = (order <= DENSE_LIMIT).then(|| {
            let mut bits = BitMatrix::new(order);
            for (u, list) in adjacency.iter().enumerate() {
                for &v in list {
                    bits.set(u, v);
                }
            }
            bits
        });
        Graph {
            offsets,
            targets,
            bits,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Whether `u` and `v` are joined by an edge. Out-of-range ids are simply
    /// not adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.order();
        if u >= n || v >= n {
            return false;
        }
        match &self.bits {
            Some(bits) => bits.get(u, v),
            None => self.neighbors(u).binary_search(&v).is_ok(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex,
                order: self.order(),
            })
        }
    }

    /// BFS distances from `source`, stopping after depth `limit` when given.
    /// Vertices not reached are `None`.
    fn bfs(&self, source: usize, limit: Option<u32>) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            if limit.is_some_and(|l| du >= l) {
                continue;
            }
            for &v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path lengths between every pair of vertices, one BFS per
    /// source.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.order();
        let mut entries = Vec::with_capacity(n * n);
        for source in 0..n {
            entries.extend(self.bfs(source, None));
        }
        DistanceMatrix { order: n, entries }
    }

    /// Largest finite distance, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for source in 0..self.order() {
            for d in self.bfs(source, None) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0, None).iter().all(Option::is_some)
    }

    /// The reachability transform: same vertices, `u` and `v` adjacent iff
    /// their distance in `self` is between 1 and `reach`.
    ///
    /// `reach == 0` is rejected with [`Error::InvalidReachability`].
    pub fn power(&self, reach: u32) -> Result<Graph> {
        if reach == 0 {
            return Err(Error::InvalidReachability);
        }
        if reach == 1 {
            return Ok(self.clone());
        }
        let adjacency = (0..self.order())
            .map(|u| {
                self.bfs(u, Some(reach))
                    .into_iter()
                    .enumerate()
                    .filter(|&(v, d)| v != u && d.is_some())
                    .map(|(v, _)| v)
                    .collect()
            })
            .collect();
        Ok(Graph::from_adjacency(adjacency))
    }

    /// Two-colors the graph by BFS; `true` iff it has no odd cycle.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring (`false`/`true` per vertex) if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u]?;
                for &v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        color.into_iter().collect()
    }

    /// Number of vertices within distance `reach` of `center`, the center
    /// included.
    pub fn ball_size(&self, center: usize, reach: u32) -> Result<usize> {
        self.check_vertex(center)?;
        Ok(self
            .bfs(center, Some(reach))
            .iter()
            .filter(|d| d.is_some())
            .count())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.offsets == other.offsets && self.targets == other.targets
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Pairwise shortest-path lengths; `None` marks unreachable pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance from `u` to `v`, `None` if unreachable.
    ///
    /// # Panics
    ///
    /// If either vertex is out of range.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        assert!(u < self.order && v < self.order, "vertex out of range");
        self.entries[u * self.order + v]
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.entries[u * self.order..(u + 1) * self.order]
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for u in 0..self.order {
            list.entry(&self.row(u));
        }
        list.finish()
    }
}
