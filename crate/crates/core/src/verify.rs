//! Brute-force oracles and the checkers that compare constructions
//! against them.
//!
//! The oracles deliberately avoid the search code in [`crate::graph`]:
//! distances come from Floyd–Warshall, L∞ distances from a minimax
//! Floyd–Warshall or from threshold reachability.

use std::collections::VecDeque;

use rand::Rng;
use serde::Serialize;

use crate::cover::Cover;
use crate::graph::{sssp, Direction, EdgeId, Graph, VertexId, VertexSet};
use crate::partition::cluster;
use crate::seed;

pub type DistanceMatrix = Vec<Vec<Option<f64>>>;

fn add(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    Some(a? + b?)
}

/// All-pairs one-way distances by Floyd–Warshall.
pub fn oracle_one_way_all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d: DistanceMatrix = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0.0);
    }
    for e in g.edges() {
        let cur = &mut d[e.src][e.dst];
        if cur.is_none_or(|c| e.weight < c) {
            *cur = Some(e.weight);
        }
    }
    for k in 0..n {
        let via = d[k].clone();
        for row in d.iter_mut() {
            let Some(ik) = row[k] else { continue };
            for (j, kj) in via.iter().enumerate() {
                if let Some(kj) = kj {
                    let cand = ik + kj;
                    if row[j].is_none_or(|c| cand < c) {
                        row[j] = Some(cand);
                    }
                }
            }
        }
    }
    d
}

/// `d(u⇄v) = d(u, v) + d(v, u)` for all pairs; `None` when either leg is
/// unreachable.
pub fn oracle_round_trip_all_pairs(g: &Graph) -> DistanceMatrix {
    let d = oracle_one_way_all_pairs(g);
    let n = g.n();
    (0..n).map(|u| (0..n).map(|v| add(d[u][v], d[v][u])).collect()).collect()
}

/// All-pairs L∞ round-trip distances: with `B(u, v)` the minimax path
/// weight, `d∞(u, v) = max(B(u, v), B(v, u))`.
pub fn oracle_linfty_all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut b: DistanceMatrix = vec![vec![None; n]; n];
    for (v, row) in b.iter_mut().enumerate() {
        row[v] = Some(0.0);
    }
    for e in g.edges() {
        let cur = &mut b[e.src][e.dst];
        if cur.is_none_or(|c| e.weight < c) {
            *cur = Some(e.weight);
        }
    }
    for k in 0..n {
        let via = b[k].clone();
        for row in b.iter_mut() {
            let Some(ik) = row[k] else { continue };
            for (j, kj) in via.iter().enumerate() {
                if let Some(kj) = kj {
                    let cand = ik.max(*kj);
                    if row[j].is_none_or(|c| cand < c) {
                        row[j] = Some(cand);
                    }
                }
            }
        }
    }
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| match (b[u][v], b[v][u]) {
                    (Some(x), Some(y)) => Some(x.max(y)),
                    _ => None,
                })
                .collect()
        })
        .collect()
}

fn reach(g: &Graph, from: VertexId, max_w: f64, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        let ids = if forward { g.out_edges(x) } else { g.in_edges(x) };
        for &id in ids {
            let e = g.edge(id);
            if e.weight > max_w {
                continue;
            }
            let y = if forward { e.dst } else { e.src };
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// The smallest distinct edge weight `w` at which `u` and `v` are mutually
/// reachable using only edges of weight at most `w`. Zero for `u == v`.
pub fn oracle_linfty(g: &Graph, u: VertexId, v: VertexId) -> Option<f64> {
    if u == v {
        return Some(0.0);
    }
    let mut weights: Vec<f64> = g.edges().iter().map(|e| e.weight).collect();
    weights.sort_by(f64::total_cmp);
    weights.dedup();
    weights.into_iter().find(|&w| reach(g, u, w, true)[v] && reach(g, u, w, false)[v])
}

/// Exact out-/in-ball fractions at radius `r` over the whole vertex set,
/// from the Floyd–Warshall matrix.
pub fn exact_ball_fractions(g: &Graph, r: f64) -> (Vec<f64>, Vec<f64>) {
    let d = oracle_one_way_all_pairs(g);
    let n = g.n();
    let within = |x: Option<f64>| x.is_some_and(|x| x <= r);
    let out = (0..n).map(|u| (0..n).filter(|&v| within(d[u][v])).count() as f64 / n as f64).collect();
    let inn = (0..n).map(|u| (0..n).filter(|&v| within(d[v][u])).count() as f64 / n as f64).collect();
    (out, inn)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StretchReport {
    /// Pairs `(u, v)` in `S × V`, `u != v`, with finite round-trip distance
    /// in `G`.
    pub qualifying_pairs: usize,
    pub max_stretch: f64,
    pub worst_pair: Option<(VertexId, VertexId)>,
    /// Qualifying pairs whose round-trip distance in `H` is infinite.
    pub infinite_violations: usize,
    pub bound: f64,
    /// Finite pairs whose stretch exceeds `bound`.
    pub bound_violations: usize,
    pub pass: bool,
}

/// Compares round-trip distances of `(V, H)` against `G` over `S × V`.
pub fn check_stretch(g: &Graph, h: &[EdgeId], sources: &VertexSet, bound: f64) -> StretchReport {
    let sub = g.edge_subgraph(h);
    let all = g.vertices();
    let mut report = StretchReport {
        qualifying_pairs: 0,
        max_stretch: 1.0,
        worst_pair: None,
        infinite_violations: 0,
        bound,
        bound_violations: 0,
        pass: true,
    };
    for u in sources.iter() {
        let go = sssp(g, &all, u, Direction::Out).expect("u in V");
        let back = sssp(g, &all, u, Direction::In).expect("u in V");
        let h_go = sssp(&sub, &all, u, Direction::Out).expect("u in V");
        let h_back = sssp(&sub, &all, u, Direction::In).expect("u in V");
        for v in all.iter().filter(|&v| v != u) {
            let Some(dg) = add(go.dist[v], back.dist[v]) else {
                continue;
            };
            report.qualifying_pairs += 1;
            match add(h_go.dist[v], h_back.dist[v]) {
                None => report.infinite_violations += 1,
                Some(dh) => {
                    let ratio = dh / dg;
                    if ratio > report.max_stretch || report.worst_pair.is_none() {
                        report.max_stretch = report.max_stretch.max(ratio);
                        report.worst_pair = Some((u, v));
                    }
                    if ratio > bound {
                        report.bound_violations += 1;
                    }
                }
            }
        }
    }
    report.pass = report.infinite_violations == 0 && report.bound_violations == 0;
    report
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverReport {
    /// Pairs `(u, v)` in `S × V` with `d(u⇄v) <= R`, including `u == v`.
    pub qualifying_pairs: usize,
    pub uncovered_pairs: usize,
    /// Up to 20 uncovered pairs.
    pub uncovered_sample: Vec<(VertexId, VertexId)>,
    pub balls: usize,
    pub failure_exits: usize,
    /// Largest round-trip radius certified by a ball's own RT-tree.
    pub max_certified_radius: f64,
    pub max_balls_per_vertex: usize,
    pub trials_disjoint: bool,
}

impl CoverReport {
    pub fn all_covered(&self) -> bool {
        self.uncovered_pairs == 0
    }
}

/// Round-trip radius of a ball measured using only its RT-tree edges;
/// infinite if the tree does not reach every member both ways.
pub fn certified_radius(g: &Graph, ball: &crate::graph::BallResult) -> f64 {
    let tree = g.edge_subgraph(&ball.rt_tree_edges);
    let all = tree.vertices();
    let go = sssp(&tree, &all, ball.center, Direction::Out).expect("center in V");
    let back = sssp(&tree, &all, ball.center, Direction::In).expect("center in V");
    ball.members.iter().map(|&v| add(go.dist[v], back.dist[v]).unwrap_or(f64::INFINITY)).fold(0.0, f64::max)
}

/// Checks cover membership of every qualifying pair against the
/// Floyd–Warshall oracle. Failure-exit parts are not balls and cover
/// nothing.
pub fn check_cover(g: &Graph, cover: &Cover, sources: &VertexSet, target_radius: f64) -> CoverReport {
    let n = g.n();
    let rt = oracle_round_trip_all_pairs(g);
    let mut balls_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, b) in cover.iter_balls().enumerate() {
        for &v in &b.members {
            balls_of[v].push(i);
        }
    }
    let shares = |a: &[usize], b: &[usize]| {
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        false
    };

    let mut qualifying = 0;
    let mut uncovered = 0;
    let mut sample = Vec::new();
    for u in sources.iter() {
        for v in 0..n {
            if !rt[u][v].is_some_and(|d| d <= target_radius) {
                continue;
            }
            qualifying += 1;
            if !shares(&balls_of[u], &balls_of[v]) {
                uncovered += 1;
                if sample.len() < 20 {
                    sample.push((u, v));
                }
            }
        }
    }

    CoverReport {
        qualifying_pairs: qualifying,
        uncovered_pairs: uncovered,
        uncovered_sample: sample,
        balls: cover.ball_count(),
        failure_exits: cover.failures.len(),
        max_certified_radius: cover.iter_balls().map(|b| certified_radius(g, b)).fold(0.0, f64::max),
        max_balls_per_vertex: cover.max_balls_per_vertex(n),
        trials_disjoint: cover.trials_disjoint(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSense {
    /// The rate must be at least `bound - 3σ`.
    AtLeast,
    /// The rate must be at most `bound + 3σ`.
    AtMost,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbabilityReport {
    pub trials: usize,
    pub successes: usize,
    pub rate: f64,
    pub bound: f64,
    pub sense: BoundSense,
    /// Binomial standard deviation of the rate at `p = bound` (clamped to
    /// `[0, 1]`).
    pub sigma: f64,
    pub pass: bool,
}

impl ProbabilityReport {
    pub fn new(trials: usize, successes: usize, bound: f64, sense: BoundSense) -> Self {
        let rate = successes as f64 / trials as f64;
        let sigma = binomial_sigma(bound, trials);
        let pass = match sense {
            BoundSense::AtLeast => rate >= bound - 3.0 * sigma,
            BoundSense::AtMost => rate <= bound + 3.0 * sigma,
        };
        ProbabilityReport { trials, successes, rate, bound, sense, sigma, pass }
    }
}

pub fn binomial_sigma(p: f64, trials: usize) -> f64 {
    let p = p.clamp(0.0, 1.0);
    (p * (1.0 - p) / trials as f64).sqrt()
}

/// Repeats clustering of the whole graph around `centers` and counts runs
/// in which `u` and `v` share a part. The bound is
/// `exp(-(R / r)·ln s)` for a pair with `d(u⇄v) <= R`.
#[allow(clippy::too_many_arguments)]
pub fn partition_probability_trial<R: Rng + ?Sized>(
    g: &Graph,
    pair: (VertexId, VertexId),
    centers: &VertexSet,
    r: f64,
    s: usize,
    dir: Direction,
    target_radius: f64,
    trials: usize,
    rng: &mut R,
) -> crate::Result<ProbabilityReport> {
    let all = g.vertices();
    let base = seed::fork(rng);
    let mut hits = 0;
    for i in 0..trials {
        let mut rng = seed::child_stream(base, i as u64);
        let p = cluster(g, &all, centers, r, s, dir, &mut rng)?;
        if p.same_part(pair.0, pair.1) {
            hits += 1;
        }
    }
    let bound = (-(target_radius / r) * (s as f64).ln()).exp();
    Ok(ProbabilityReport::new(trials, hits, bound, BoundSense::AtLeast))
}

/// Repeats clustering and counts runs with some cluster of measured radius
/// above `c·r`. The bound is `n / s^c`.
#[allow(clippy::too_many_arguments)]
pub fn radius_tail_trial<R: Rng + ?Sized>(
    g: &Graph,
    centers: &VertexSet,
    r: f64,
    s: usize,
    c: f64,
    dir: Direction,
    trials: usize,
    rng: &mut R,
) -> crate::Result<ProbabilityReport> {
    let all = g.vertices();
    let base = seed::fork(rng);
    let mut hits = 0;
    for i in 0..trials {
        let mut rng = seed::child_stream(base, i as u64);
        let p = cluster(g, &all, centers, r, s, dir, &mut rng)?;
        if p.max_cluster_radius() > c * r {
            hits += 1;
        }
    }
    let bound = g.n() as f64 / (s as f64).powf(c);
    Ok(ProbabilityReport::new(trials, hits, bound, BoundSense::AtMost))
}

/// One-sided sign-test p-value: probability of at least `wins` successes
/// in `trials` fair coin flips.
pub fn sign_test_p(wins: usize, trials: usize) -> f64 {
    let mut total = 0.0;
    let mut binom = 1.0f64; // C(trials, 0)
    for i in 0..=trials {
        if i >= wins {
            total += binom;
        }
        binom = binom * (trials - i) as f64 / (i + 1) as f64;
    }
    total / 2f64.powi(trials as i32)
}
