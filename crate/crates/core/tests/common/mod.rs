//! Brute-force oracles shared by the integration suites. None of them call
//! into the search or BFS code they are used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use topo_compat::topology::{complete, hypercube, ring, star};
use topo_compat::Graph;

/// Adjacency matrix read straight from the edge list.
pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Floyd-Warshall distances; `None` is unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let adj = adjacency(g);
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if adj[u][v] {
                d[u][v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    if d[i][j].is_none_or(|ij| ik + kj < ij) {
                        d[i][j] = Some(ik + kj);
                    }
                }
            }
        }
    }
    d
}

/// Whether some injective map sends every task edge to a host edge, found by
/// enumerating injective maps and testing the complete map only.
pub fn brute_force_embeds(task: &Graph, host: &Graph) -> bool {
    let t = task.order();
    let h = host.order();
    if t > h {
        return false;
    }
    let host_adj = adjacency(host);
    let edges: Vec<(usize, usize)> = task.edges().collect();
    let mut map = vec![0; t];
    let mut used = vec![false; h];
    fn go(
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        edges: &[(usize, usize)],
        host_adj: &[Vec<bool>],
    ) -> bool {
        if i == map.len() {
            return edges.iter().all(|&(u, v)| host_adj[map[u]][map[v]]);
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                map[i] = x;
                let found = go(i + 1, map, used, edges, host_adj);
                used[x] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    go(0, &mut map, &mut used, &edges, &host_adj)
}

/// Every simple-cycle length of `g`, by unpruned DFS from each start vertex.
pub fn all_cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    let adj = adjacency(g);
    let n = g.order();
    let mut lengths = BTreeSet::new();
    fn dfs(
        start: usize,
        end: usize,
        len: usize,
        visited: &mut Vec<bool>,
        adj: &[Vec<bool>],
        lengths: &mut BTreeSet<usize>,
    ) {
        for next in 0..adj.len() {
            if !adj[end][next] {
                continue;
            }
            if next == start && len >= 3 {
                lengths.insert(len);
            } else if next > start && !visited[next] {
                visited[next] = true;
                dfs(start, next, len + 1, visited, adj, lengths);
                visited[next] = false;
            }
        }
    }
    let mut visited = vec![false; n];
    for start in 0..n {
        visited[start] = true;
        dfs(start, start, 1, &mut visited, &adj, &mut lengths);
        visited[start] = false;
    }
    lengths
}

/// Checks that `cycle` is a simple cycle of `g`.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let mut seen = BTreeSet::new();
    cycle.len() >= 3
        && cycle.iter().all(|&v| v < g.order() && seen.insert(v))
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// The generated topologies with at most 256 vertices used by the sweeps.
pub fn generated_topologies() -> Vec<(String, Graph)> {
    let mut all = Vec::new();
    for s in 1..=8 {
        all.push((format!("hypercube:{s}"), hypercube(s).unwrap()));
    }
    for p in (3..=32).chain([64, 100, 256]) {
        all.push((format!("ring:{p}"), ring(p).unwrap()));
    }
    for p in (2..=32).chain([64, 256]) {
        all.push((format!("star:{p}"), star(p).unwrap()));
    }
    for n in (1..=16).chain([64, 256]) {
        all.push((format!("complete:{n}"), complete(n).unwrap()));
    }
    all
}

/// Small hand-made graphs that force the exact search: no cheap
/// Hamiltonian certificate applies to them.
pub fn irregular_graphs() -> Vec<(String, Graph)> {
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )
    .unwrap();
    let lollipop =
        Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]).unwrap();
    let path = Graph::from_edges(6, (0..5).map(|i| (i, i + 1))).unwrap();
    let grid = Graph::from_edges(
        9,
        [
            (0, 1),
            (1, 2),
            (3, 4),
            (4, 5),
            (6, 7),
            (7, 8),
            (0, 3),
            (3, 6),
            (1, 4),
            (4, 7),
            (2, 5),
            (5, 8),
        ],
    )
    .unwrap();
    vec![
        ("petersen".into(), petersen),
        ("lollipop".into(), lollipop),
        ("path:6".into(), path),
        ("grid:3x3".into(), grid),
    ]
}
