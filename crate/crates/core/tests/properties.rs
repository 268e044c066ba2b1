//! Randomized invariants checked against the brute-force oracles.

#![allow(clippy::needless_range_loop)]

use std::collections::HashSet;

use proptest::prelude::*;
use rtspan::estimate::fractions_from_sample;
use rtspan::seed::stream;
use rtspan::verify::{
    certified_radius, check_stretch, oracle_linfty_all_pairs, oracle_one_way_all_pairs,
    oracle_round_trip_all_pairs,
};
use rtspan::{
    cluster, contract, linfty_merge_tree, parse_edge_list, recursive_cover, round_trip_ball, sssp,
    stretch_bound, strongly_connected_components, swrt_spanner, write_edge_list, CoverParams, Direction,
    Graph, VertexSet,
};

/// Small multigraphs with integer weights, self-loops and parallel edges
/// allowed.
fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, 1u32..=20), 0..=max_m).prop_map(move |t| {
            Graph::from_triples(n, &t.iter().map(|&(u, v, w)| (u, v, w as f64)).collect::<Vec<_>>()).unwrap()
        })
    })
}

/// Graphs with a Hamiltonian cycle `0 -> 1 -> ... -> 0` plus random edges.
fn strong_graph(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        (prop::collection::vec(1u32..=20, n), prop::collection::vec((0..n, 0..n, 1u32..=20), 0..=max_extra))
            .prop_map(move |(cycle, extra)| {
                let mut t: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, cycle[i] as f64)).collect();
                t.extend(extra.iter().map(|&(u, v, w)| (u, v, w as f64)));
                Graph::from_triples(n, &t).unwrap()
            })
    })
}

fn subset(n: usize, mask: &[bool]) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask[v % mask.len()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sssp_matches_floyd_warshall(g in graph(14, 40)) {
        let fw = oracle_one_way_all_pairs(&g);
        let all = g.vertices();
        for u in 0..g.n() {
            let out = sssp(&g, &all, u, Direction::Out).unwrap();
            let inn = sssp(&g, &all, u, Direction::In).unwrap();
            for v in 0..g.n() {
                prop_assert_eq!(out.dist[v], fw[u][v]);
                prop_assert_eq!(inn.dist[v], fw[v][u]);
                if let Some(d) = out.dist[v] {
                    let path = out.path_edges(&g, v).unwrap();
                    prop_assert_eq!(path.iter().map(|&e| g.edge(e).weight).sum::<f64>(), d);
                }
            }
        }
    }

    #[test]
    fn real_weight_sssp_matches_to_rounding(g in graph(14, 40), scale in 0.001f64..10.0) {
        let g = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| (e.src, e.dst, e.weight * scale * (1.0 + (i % 7) as f64 / 13.0)))
            .collect::<Vec<_>>();
        let n = g.iter().map(|e| e.0.max(e.1) + 1).max().unwrap_or(1);
        let g = Graph::from_triples(n, &g).unwrap();
        let fw = oracle_round_trip_all_pairs(&g);
        let all = g.vertices();
        for u in 0..n {
            let out = sssp(&g, &all, u, Direction::Out).unwrap();
            let inn = sssp(&g, &all, u, Direction::In).unwrap();
            for v in 0..n {
                let got = out.dist[v].zip(inn.dist[v]).map(|(a, b)| a + b);
                match (got, fw[u][v]) {
                    (Some(a), Some(b)) => prop_assert!((a - b).abs() <= 1e-12 * b.max(1.0)),
                    (a, b) => prop_assert_eq!(a, b),
                }
            }
        }
    }

    #[test]
    fn restricted_sssp_matches_induced_subgraph(g in graph(12, 36), mask in prop::collection::vec(any::<bool>(), 1..12)) {
        let restrict = subset(g.n(), &mask);
        prop_assume!(!restrict.is_empty());
        let kept: Vec<usize> = (0..g.m())
            .filter(|&e| restrict.contains(g.edge(e).src) && restrict.contains(g.edge(e).dst))
            .collect();
        let fw = oracle_one_way_all_pairs(&g.edge_subgraph(&kept));
        for u in restrict.iter() {
            let out = sssp(&g, &restrict, u, Direction::Out).unwrap();
            for v in 0..g.n() {
                let want = if restrict.contains(v) { fw[u][v] } else { None };
                prop_assert_eq!(out.dist[v], want);
            }
        }
    }

    #[test]
    fn ball_is_monotone_and_certified(g in graph(12, 36), center in 0usize..12, r1 in 0u32..60, extra in 0u32..60) {
        let center = center % g.n();
        let all = g.vertices();
        let rt = oracle_round_trip_all_pairs(&g);
        let small = round_trip_ball(&g, &all, center, r1 as f64).unwrap();
        let big = round_trip_ball(&g, &all, center, (r1 + extra) as f64).unwrap();
        prop_assert!(small.members.iter().all(|v| big.contains(*v)));
        for ball in [&small, &big] {
            let want: Vec<usize> = (0..g.n()).filter(|&v| rt[center][v].is_some_and(|d| d <= ball.radius)).collect();
            prop_assert_eq!(&ball.members, &want);
            prop_assert_eq!(certified_radius(&g, ball), ball.max_round_trip);
            prop_assert!(ball.max_round_trip <= ball.radius);
            // the tree never leaves the ball
            for &e in &ball.rt_tree_edges {
                prop_assert!(ball.contains(g.edge(e).src) && ball.contains(g.edge(e).dst));
            }
        }
    }

    #[test]
    fn scc_classes_are_mutual_reachability(g in graph(14, 30)) {
        let fw = oracle_one_way_all_pairs(&g);
        let comps = strongly_connected_components(&g, &g.vertices());
        let mut id = vec![usize::MAX; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                prop_assert_eq!(id[v], usize::MAX);
                id[v] = i;
            }
        }
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(id[u] == id[v], fw[u][v].is_some() && fw[v][u].is_some());
            }
        }
    }

    #[test]
    fn clusters_partition_and_respect_radii(
        g in graph(14, 40),
        mask in prop::collection::vec(any::<bool>(), 1..14),
        r in 1.0f64..30.0,
        s in 2usize..20,
        seed in any::<u64>(),
        inward in any::<bool>(),
    ) {
        let centers = subset(g.n(), &mask);
        let dir = if inward { Direction::In } else { Direction::Out };
        let p = cluster(&g, &g.vertices(), &centers, r, s, dir, &mut stream(seed)).unwrap();
        let mut seen: Vec<usize> = p.parts().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
        prop_assert!(p.residual.len() <= g.n() - centers.len());
        let fw = oracle_one_way_all_pairs(&g);
        for c in &p.clusters {
            prop_assert!(centers.contains(c.center) && c.members.contains(&c.center));
            for &v in &c.members {
                let d = if inward { fw[v][c.center] } else { fw[c.center][v] };
                prop_assert!(d.is_some_and(|d| d < c.sampled_radius && d <= c.radius));
            }
        }
    }

    #[test]
    fn estimates_are_permutation_equivariant(
        g in graph(10, 30),
        perm_seed in any::<u64>(),
        sample in prop::collection::vec(0usize..10, 1..30),
        r in 0u32..40,
    ) {
        use rand::seq::SliceRandom;
        let n = g.n();
        let sample: Vec<usize> = sample.iter().map(|&v| v % n).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut stream(perm_seed));
        let relabeled = Graph::from_triples(
            n,
            &g.edges().iter().map(|e| (perm[e.src], perm[e.dst], e.weight)).collect::<Vec<_>>(),
        ).unwrap();
        let a = fractions_from_sample(&g, &g.vertices(), r as f64, &g.vertices(), &sample).unwrap();
        let mapped: Vec<usize> = sample.iter().map(|&v| perm[v]).collect();
        let b = fractions_from_sample(&relabeled, &relabeled.vertices(), r as f64, &relabeled.vertices(), &mapped).unwrap();
        for u in 0..n {
            prop_assert_eq!(a.get(u), b.get(perm[u]));
        }
    }

    #[test]
    fn linfty_oracle_is_an_ultrametric(g in graph(12, 36)) {
        let d = oracle_linfty_all_pairs(&g);
        let rt = oracle_round_trip_all_pairs(&g);
        let (tree, _) = linfty_merge_tree(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(d[u][v], d[v][u]);
                prop_assert_eq!(tree.linfty_distance(u, v), d[u][v]);
                // finite exactly when the round trip is
                prop_assert_eq!(d[u][v].is_some(), rt[u][v].is_some());
                for w in 0..g.n() {
                    if let (Some(a), Some(b)) = (d[u][v], d[v][w]) {
                        prop_assert!(d[u][w].is_some_and(|x| x <= a.max(b)));
                    }
                    if let (Some(a), Some(b)) = (rt[u][v], rt[v][w]) {
                        prop_assert!(rt[u][w].is_some_and(|x| x <= a + b));
                    }
                }
            }
        }
    }

    #[test]
    fn wide_window_contraction_is_a_fixed_point(g in graph(12, 36)) {
        let (tree, _) = linfty_merge_tree(&g);
        let w_max = g.max_weight().unwrap_or(1.0);
        let w_min = g.min_weight().unwrap_or(1.0);
        let b = contract(&g, &g.vertices(), w_min / 2.0, w_max, &tree).unwrap();
        // no merges: one original vertex per contracted vertex
        prop_assert!(b.groups.iter().all(|grp| grp.len() == 1));
        let cyclic: HashSet<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|e| e.src != e.dst && tree.linfty_distance(e.src, e.dst).is_some())
            .map(|e| (e.src, e.dst))
            .collect();
        prop_assert_eq!(b.graph.m(), cyclic.len());
        let rt = oracle_round_trip_all_pairs(&g);
        let rt_c = oracle_round_trip_all_pairs(&b.graph);
        for u in 0..g.n() {
            for v in 0..g.n() {
                if let (Some(cu), Some(cv)) = (b.vertex_map[u], b.vertex_map[v]) {
                    prop_assert_eq!(rt_c[cu][cv], rt[u][v]);
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trips(g in graph(10, 30), scale in 0.01f64..100.0) {
        let g = g.scaled(scale).unwrap();
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recursive_cover_balls_are_disjoint_and_bounded(
        g in strong_graph(20, 40),
        mask in prop::collection::vec(any::<bool>(), 1..20),
        r in 1.0f64..40.0,
        seed in any::<u64>(),
    ) {
        let sources = subset(g.n(), &mask);
        let params = CoverParams::default();
        let cover = recursive_cover(&g, &g.vertices(), r, &sources, &params, &mut stream(seed)).unwrap();
        prop_assert!(cover.trials_disjoint());
        for b in cover.iter_balls() {
            prop_assert!(b.max_round_trip <= params.max_ball_radius(r));
            prop_assert_eq!(certified_radius(&g, b), b.max_round_trip);
        }
        // every source ends up in a ball or a failure part
        for u in sources.iter() {
            prop_assert!(cover.iter_balls().any(|b| b.contains(u)) || cover.failures.iter().any(|f| f.members.contains(&u)));
        }
    }

    #[test]
    fn spanner_is_a_subgraph_within_the_bound(
        g in strong_graph(16, 40),
        mask in prop::collection::vec(any::<bool>(), 1..16),
        k in 2u32..4,
        seed in any::<u64>(),
    ) {
        let sources = subset(g.n(), &mask);
        prop_assume!(!sources.is_empty());
        let params = CoverParams::default();
        let h = swrt_spanner(&g, k, &sources, &params, &mut stream(seed)).unwrap();
        prop_assert!(h.edges.windows(2).all(|w| w[0] < w[1]) && h.edges.iter().all(|&e| e < g.m()));
        let rep = check_stretch(&g, &h.edges, &sources, stretch_bound(k, g.n(), params.c));
        prop_assert!(rep.pass, "{:?}", rep);
    }
}
