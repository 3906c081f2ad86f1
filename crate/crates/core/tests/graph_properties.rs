#![allow(clippy::needless_range_loop)]

mod common;

use proptest::prelude::*;

use topo_compat::topology::{complete, hypercube};
use topo_compat::Graph;

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

#[test]
fn hypercube_distance_is_hamming() {
    for s in 1..=6 {
        let d = hypercube(s).unwrap().all_pairs_distances();
        let n = 1usize << s;
        for u in 0..n {
            for v in 0..n {
                assert_eq!(d.get(u, v), Some((u ^ v).count_ones()), "s={s} ({u},{v})");
            }
        }
        assert_eq!(d.max_finite(), s);
    }
}

#[test]
fn hypercube_diameter_matches_dimension() {
    for s in 1..=8 {
        assert_eq!(hypercube(s).unwrap().diameter(), Some(s));
    }
}

#[test]
fn squared_square_is_complete() {
    assert_eq!(
        hypercube(2).unwrap().power(2).unwrap(),
        complete(4).unwrap()
    );
    assert_eq!(
        hypercube(3).unwrap().power(3).unwrap(),
        complete(8).unwrap()
    );
}

#[test]
fn distance_matrices_of_generated_topologies() {
    for (name, g) in common::generated_topologies() {
        let d = g.all_pairs_distances();
        let n = g.order();
        for u in 0..n {
            assert_eq!(d.get(u, u), Some(0), "{name}");
            for v in 0..n {
                assert_eq!(d.get(u, v), d.get(v, u), "{name}");
                if u != v {
                    assert_ne!(d.get(u, v), Some(0), "{name}");
                }
            }
        }
        // Triangle inequality, sampled through every middle vertex on the
        // smaller graphs and through vertex 0 on the rest.
        let middles: Vec<usize> = if n <= 64 {
            (0..n).collect()
        } else {
            vec![0, n / 2]
        };
        for &w in &middles {
            for u in 0..n {
                for v in 0..n {
                    let (Some(uv), Some(uw), Some(wv)) = (d.get(u, v), d.get(u, w), d.get(w, v))
                    else {
                        continue;
                    };
                    assert!(uv <= uw + wv, "{name}: ({u},{v}) via {w}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn bfs_distances_match_floyd_warshall(g in arb_graph(12)) {
        let d = g.all_pairs_distances();
        let oracle = common::floyd_warshall(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(d.get(u, v), oracle[u][v]);
            }
        }
    }

    #[test]
    fn power_adjacency_follows_distance(g in arb_graph(12), reach in 1u32..6) {
        let powered = g.power(reach).unwrap();
        let oracle = common::floyd_warshall(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                let expected = u != v && oracle[u][v].is_some_and(|d| d <= reach);
                prop_assert_eq!(powered.has_edge(u, v), expected);
            }
        }
    }

    #[test]
    fn power_is_monotone(g in arb_graph(12), reach in 1u32..5) {
        let small = g.power(reach).unwrap();
        let large = g.power(reach + 1).unwrap();
        prop_assert!(small.edges().all(|(u, v)| large.has_edge(u, v)));
        prop_assert_eq!(g.power(1).unwrap(), g);
    }

    #[test]
    fn saturation_at_diameter(g in arb_graph(12)) {
        if let Some(d) = g.diameter() {
            let top = d.max(1);
            prop_assert_eq!(g.power(top).unwrap(), complete(g.order()).unwrap());
        }
    }

    #[test]
    fn ball_is_closed_neighborhood_in_power(g in arb_graph(12), reach in 1u32..5) {
        let powered = g.power(reach).unwrap();
        for v in 0..g.order() {
            prop_assert_eq!(g.ball_size(v, reach).unwrap(), 1 + powered.degree(v));
        }
    }

    #[test]
    fn bipartite_iff_no_odd_cycle(g in arb_graph(9)) {
        let odd = common::all_cycle_lengths(&g).iter().any(|l| l % 2 == 1);
        prop_assert_eq!(g.is_bipartite(), !odd);
        if let Some(colors) = g.two_coloring() {
            prop_assert!(g.edges().all(|(u, v)| colors[u] != colors[v]));
        }
    }
}
