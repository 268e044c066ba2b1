//! Source-wise round-trip spanners.
//!
//! [`swrt_spanner_weighted`] builds a cover for every radius `2^i`,
//! `1 <= i <= ⌈log₂(2 n w)⌉`, and keeps the RT-trees of all balls.
//! [`swrt_spanner`] removes the dependence on the weight range: it starts
//! from the certificate edges `H₁`, covers each non-empty contracted graph
//! `G^(t)` at radius `2^t`, and maps the RT-tree edges back to `G`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::cover::{swrt_cover, CoverParams};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexSet};
use crate::linfty::{build_scales, linfty_merge_tree, pow2};
use crate::seed;

/// Where a spanner edge first came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    /// The L∞ certificate set.
    Certificate,
    /// A ball's RT-tree in the contracted graph at scale `t`.
    ContractedScale { t: i32 },
    /// A ball's RT-tree in the weight-dependent construction at radius
    /// `2^i`.
    WeightedScale { i: i32 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScaleStats {
    pub scale: i32,
    pub radius: f64,
    pub vertices: usize,
    pub edges: usize,
    pub sources: usize,
    pub trials: usize,
    pub balls: usize,
    pub failure_exits: usize,
    pub max_ball_radius: f64,
    /// Spanner edges first contributed at this scale.
    pub new_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpannerResult {
    /// Sorted ids of the spanner edges in the input graph.
    pub edges: Vec<EdgeId>,
    pub provenance: BTreeMap<EdgeId, Provenance>,
    pub certificate_edges: usize,
    pub scales: Vec<ScaleStats>,
}

impl SpannerResult {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn failure_exits(&self) -> usize {
        self.scales.iter().map(|s| s.failure_exits).sum()
    }

    pub fn ball_count(&self) -> usize {
        self.scales.iter().map(|s| s.balls).sum()
    }

    /// The subgraph `(V, H)`.
    pub fn subgraph(&self, g: &Graph) -> Graph {
        g.edge_subgraph(&self.edges)
    }

    fn from_provenance(
        provenance: BTreeMap<EdgeId, Provenance>,
        certificate_edges: usize,
        scales: Vec<ScaleStats>,
    ) -> Self {
        SpannerResult { edges: provenance.keys().copied().collect(), provenance, certificate_edges, scales }
    }
}

/// `2·(2(c+1)·6k·ln n + 1)`: the stretch the construction guarantees for
/// every source pair whose cover membership held.
pub fn stretch_bound(k: u32, n: usize, c: u32) -> f64 {
    2.0 * (2.0 * (c as f64 + 1.0) * 6.0 * k as f64 * (n as f64).ln() + 1.0)
}

fn check_args(g: &Graph, k: u32, sources: &VertexSet) -> Result<()> {
    if sources.is_empty() {
        return Err(Error::EmptySources);
    }
    if k <= 1 {
        return Err(Error::param("k", format!("{k} must exceed 1")));
    }
    if !sources.is_subset(&g.vertices()) {
        return Err(Error::NotSubset { what: "source set" });
    }
    Ok(())
}

/// Weight-dependent spanner. Assumes round-trip distances of interest are
/// at least 1, i.e. edge weights of at least 1/2.
pub fn swrt_spanner_weighted<R: Rng + ?Sized>(
    g: &Graph,
    k: u32,
    sources: &VertexSet,
    params: &CoverParams,
    rng: &mut R,
) -> Result<SpannerResult> {
    check_args(g, k, sources)?;
    params.validate()?;
    let base = seed::fork(rng);
    let mut provenance = BTreeMap::new();
    let mut scales = Vec::new();
    let Some(w) = g.max_weight() else {
        return Ok(SpannerResult::from_provenance(provenance, 0, scales));
    };
    let top = (2.0 * g.n() as f64 * w).log2().ceil() as i32;
    for i in 1..=top {
        let radius = pow2(i);
        let mut rng = seed::child_stream(base, i as u64);
        let cover = swrt_cover(g, k, radius, sources, params, &mut rng)?;
        let mut new_edges = 0;
        for ball in cover.iter_balls() {
            for &e in &ball.rt_tree_edges {
                if let std::collections::btree_map::Entry::Vacant(slot) = provenance.entry(e) {
                    slot.insert(Provenance::WeightedScale { i });
                    new_edges += 1;
                }
            }
        }
        scales.push(ScaleStats {
            scale: i,
            radius,
            vertices: g.n(),
            edges: g.m(),
            sources: sources.len(),
            trials: cover.trials,
            balls: cover.ball_count(),
            failure_exits: cover.failures.len(),
            max_ball_radius: cover.max_measured_radius(),
            new_edges,
        });
    }
    Ok(SpannerResult::from_provenance(provenance, 0, scales))
}

/// Weight-independent spanner over the contracted scales.
pub fn swrt_spanner<R: Rng + ?Sized>(
    g: &Graph,
    k: u32,
    sources: &VertexSet,
    params: &CoverParams,
    rng: &mut R,
) -> Result<SpannerResult> {
    check_args(g, k, sources)?;
    params.validate()?;
    let base = seed::fork(rng);
    let (tree, h1) = linfty_merge_tree(g);
    let mut provenance: BTreeMap<EdgeId, Provenance> =
        h1.edges.iter().map(|&e| (e, Provenance::Certificate)).collect();

    let mut scales = Vec::new();
    for bundle in build_scales(g, sources, &tree)? {
        let t = bundle.scale.expect("scale set by build_scales");
        if bundle.sources.is_empty() {
            continue;
        }
        let radius = pow2(t);
        // offset keeps negative scales on distinct streams
        let mut rng = seed::child_stream(base, (t as i64 + (1 << 20)) as u64);
        let cover = swrt_cover(&bundle.graph, k, radius, &bundle.sources, params, &mut rng)?;
        let mut new_edges = 0;
        for ball in cover.iter_balls() {
            for &e in &ball.rt_tree_edges {
                let original = bundle.edge_map[e];
                if let std::collections::btree_map::Entry::Vacant(slot) = provenance.entry(original) {
                    slot.insert(Provenance::ContractedScale { t });
                    new_edges += 1;
                }
            }
        }
        scales.push(ScaleStats {
            scale: t,
            radius,
            vertices: bundle.graph.n(),
            edges: bundle.graph.m(),
            sources: bundle.sources.len(),
            trials: cover.trials,
            balls: cover.ball_count(),
            failure_exits: cover.failures.len(),
            max_ball_radius: cover.max_measured_radius(),
            new_edges,
        });
    }
    Ok(SpannerResult::from_provenance(provenance, h1.edges.len(), scales))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::stream;

    fn cycle(n: usize) -> Graph {
        let t: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1.0 + i as f64)).collect();
        Graph::from_triples(n, &t).unwrap()
    }

    #[test]
    fn cycle_keeps_every_edge() {
        let g = cycle(5);
        let s = VertexSet::from_vertices(5, [2]);
        let p = CoverParams::default();
        let h = swrt_spanner(&g, 2, &s, &p, &mut stream(1)).unwrap();
        assert_eq!(h.edges, vec![0, 1, 2, 3, 4]);
        let h = swrt_spanner_weighted(&g, 2, &s, &p, &mut stream(1)).unwrap();
        assert_eq!(h.edges, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn dag_gives_empty_spanner() {
        let g = Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let all = g.vertices();
        let p = CoverParams::default();
        assert!(swrt_spanner(&g, 2, &all, &p, &mut stream(0)).unwrap().edges.is_empty());
        assert!(swrt_spanner_weighted(&g, 2, &all, &p, &mut stream(0)).unwrap().edges.is_empty());
    }

    #[test]
    fn two_cycle_comes_from_certificate() {
        let g = Graph::from_triples(2, &[(0, 1, 3.0), (1, 0, 5.0)]).unwrap();
        let s = VertexSet::from_vertices(2, [0]);
        let h = swrt_spanner(&g, 2, &s, &CoverParams::default(), &mut stream(0)).unwrap();
        assert_eq!(h.edges, vec![0, 1]);
        assert_eq!(h.certificate_edges, 2);
        assert_eq!(h.provenance[&0], Provenance::Certificate);
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = cycle(3);
        let p = CoverParams::default();
        assert!(matches!(
            swrt_spanner(&g, 2, &VertexSet::empty(3), &p, &mut stream(0)),
            Err(Error::EmptySources)
        ));
        assert!(swrt_spanner(&g, 1, &g.vertices(), &p, &mut stream(0)).is_err());
    }

    #[test]
    fn bound_formula() {
        let b = stretch_bound(2, 100, 4);
        let expect = 2.0 * (2.0 * 5.0 * 12.0 * 100f64.ln() + 1.0);
        assert_eq!(b, expect);
    }
}
