//! Exponential-clock clustering around a set of centers.
//!
//! Every center `u` draws a radius `r_u ~ Exp(β)` with `β = ln(s) / r`, and
//! each vertex `v` joins the center maximizing `r_u - d(u, v)` (or
//! `r_u - d(v, u)` when clustering inward) provided that value is positive.
//! Vertices claimed by nobody form the residual part.
//!
//! The assignment is computed with one multi-source Dijkstra: a virtual root
//! reaches center `u` at offset `max_r - r_u`, so the search distance of `v`
//! is `max_r - max_u (r_u - d(u, v))`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{search, Direction, Graph, VertexId, VertexSet};

/// Inverse-transform sampler for `Exp(rate)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusSampler {
    rate: f64,
}

impl RadiusSampler {
    pub fn new(rate: f64) -> Result<Self> {
        if !(rate.is_finite() && rate > 0.0) {
            return Err(Error::param("beta", format!("rate {rate} must be positive")));
        }
        Ok(RadiusSampler { rate })
    }

    /// The rate `ln(s) / r` used by clustering at scale `r` for `s` sources.
    pub fn for_scale(r: f64, s: usize) -> Result<Self> {
        if s < 2 {
            return Err(Error::param("s", format!("{s} < 2")));
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::param("r", format!("{r} must be positive")));
        }
        RadiusSampler::new((s as f64).ln() / r)
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    /// `-ln(u) / rate` for `u` in `(0, 1]`.
    pub fn from_uniform(&self, u: f64) -> f64 {
        debug_assert!(u > 0.0 && u <= 1.0);
        if u >= 1.0 {
            0.0
        } else {
            -u.ln() / self.rate
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        // gen::<f64>() is in [0, 1)
        self.from_uniform(1.0 - rng.gen::<f64>())
    }
}

/// Draws one `Exp(β)` sample.
pub fn sample_exponential<R: Rng + ?Sized>(sampler: &RadiusSampler, rng: &mut R) -> f64 {
    sampler.sample(rng)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub center: VertexId,
    pub sampled_radius: f64,
    /// Sorted member ids.
    pub members: Vec<VertexId>,
    /// Largest one-way distance from the center to a member (towards the
    /// center for inward clustering).
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    pub direction: Direction,
    /// Non-empty clusters ordered by center id.
    pub clusters: Vec<Cluster>,
    /// Vertices assigned to no center.
    pub residual: Vec<VertexId>,
}

impl Partition {
    /// Cluster members followed by the residual part when it is non-empty.
    pub fn parts(&self) -> impl Iterator<Item = &[VertexId]> {
        self.clusters
            .iter()
            .map(|c| c.members.as_slice())
            .chain((!self.residual.is_empty()).then_some(self.residual.as_slice()))
    }

    /// Index of the cluster holding `v`; `None` for residual or absent
    /// vertices.
    pub fn cluster_of(&self, v: VertexId) -> Option<usize> {
        self.clusters.iter().position(|c| c.members.binary_search(&v).is_ok())
    }

    /// Whether `u` and `v` share a part (the residual counts as a part).
    pub fn same_part(&self, u: VertexId, v: VertexId) -> bool {
        match (self.cluster_of(u), self.cluster_of(v)) {
            (Some(a), Some(b)) => a == b,
            (None, None) => {
                self.residual.binary_search(&u).is_ok() && self.residual.binary_search(&v).is_ok()
            }
            _ => false,
        }
    }

    pub fn max_cluster_radius(&self) -> f64 {
        self.clusters.iter().map(|c| c.radius).fold(0.0, f64::max)
    }
}

/// Partitions `restrict` around `centers` with radii drawn from
/// `Exp(ln(s) / r)`, one per center in increasing id order.
pub fn cluster<R: Rng + ?Sized>(
    g: &Graph,
    restrict: &VertexSet,
    centers: &VertexSet,
    r: f64,
    s: usize,
    dir: Direction,
    rng: &mut R,
) -> Result<Partition> {
    let sampler = RadiusSampler::for_scale(r, s)?;
    if !centers.is_subset(restrict) {
        return Err(Error::NotSubset { what: "center set" });
    }
    let radii: Vec<(VertexId, f64)> = centers.iter().map(|u| (u, sampler.sample(rng))).collect();
    cluster_with_radii(g, restrict, &radii, dir)
}

/// Clustering with explicitly given `(center, radius)` pairs. Ties in
/// `r_u - d(u, v)` go to the smaller center id.
pub fn cluster_with_radii(
    g: &Graph,
    restrict: &VertexSet,
    radii: &[(VertexId, f64)],
    dir: Direction,
) -> Result<Partition> {
    for &(u, ru) in radii {
        if !restrict.contains(u) {
            return Err(Error::NotSubset { what: "center set" });
        }
        if !(ru >= 0.0 && ru.is_finite()) {
            return Err(Error::param("radius", format!("center {u} has radius {ru}")));
        }
    }
    let max_r = radii.iter().map(|&(_, ru)| ru).fold(0.0, f64::max);
    let mut sampled = vec![0.0; g.n()];
    let seeds: Vec<(VertexId, f64)> = radii
        .iter()
        .map(|&(u, ru)| {
            sampled[u] = ru;
            (u, max_r - ru)
        })
        .collect();
    let found = search(g, restrict, &seeds, dir, max_r);
    let exact = tree_distances(g, &found.parent, dir);

    let mut slot = vec![usize::MAX; g.n()];
    let mut clusters: Vec<Cluster> = Vec::new();
    let mut residual = Vec::new();
    let mut order: Vec<VertexId> = Vec::new();
    for v in restrict.iter() {
        match found.dist[v] {
            Some(d) if d < max_r => {
                let u = found.origin[v];
                if slot[u] == usize::MAX {
                    slot[u] = order.len();
                    order.push(u);
                    clusters.push(Cluster {
                        center: u,
                        sampled_radius: sampled[u],
                        members: Vec::new(),
                        radius: 0.0,
                    });
                }
                let c = &mut clusters[slot[u]];
                c.members.push(v);
                c.radius = c.radius.max(exact[v]);
            }
            _ => residual.push(v),
        }
    }
    clusters.sort_unstable_by_key(|c| c.center);
    Ok(Partition { direction: dir, clusters, residual })
}

/// Distance from each reached vertex's seed along the search tree, summed
/// edge by edge. Subtracting the seed offset from the search key would
/// lose the last bits.
fn tree_distances(g: &Graph, parent: &[Option<usize>], dir: Direction) -> Vec<f64> {
    let mut exact = vec![f64::NAN; g.n()];
    let mut chain = Vec::new();
    for v in 0..g.n() {
        let mut x = v;
        while exact[x].is_nan() {
            match parent[x] {
                Some(e) => {
                    chain.push((x, g.edge(e).weight));
                    x = g.head(e, dir.reverse());
                }
                None => {
                    exact[x] = 0.0;
                    break;
                }
            }
        }
        while let Some((y, w)) = chain.pop() {
            exact[y] = exact[x] + w;
            x = y;
        }
    }
    exact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::stream;

    #[test]
    fn inverse_transform_endpoints() {
        let s = RadiusSampler::new(3.7).unwrap();
        assert_eq!(s.from_uniform(1.0), 0.0);
        let s = RadiusSampler::new(1.0).unwrap();
        assert!((s.from_uniform((-1.0f64).exp()) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sampler_rejects_bad_rate() {
        assert!(RadiusSampler::new(0.0).is_err());
        assert!(RadiusSampler::new(-1.0).is_err());
        assert!(RadiusSampler::for_scale(1.0, 1).is_err());
        assert!(RadiusSampler::for_scale(0.0, 4).is_err());
    }

    #[test]
    fn sample_mean_matches_rate() {
        let s = RadiusSampler::new(2.0).unwrap();
        let mut rng = stream(11);
        let n = 1_000_000;
        let mean = (0..n).map(|_| sample_exponential(&s, &mut rng)).sum::<f64>() / n as f64;
        assert!((mean - 0.5).abs() < 0.005, "mean {mean}");
    }

    #[test]
    fn no_centers_means_all_residual() {
        let g = Graph::from_triples(3, &[(0, 1, 1.0)]).unwrap();
        let all = g.vertices();
        let p = cluster(&g, &all, &VertexSet::empty(3), 1.0, 2, Direction::Out, &mut stream(0)).unwrap();
        assert!(p.clusters.is_empty());
        assert_eq!(p.residual, vec![0, 1, 2]);
    }

    #[test]
    fn isolated_centers_keep_themselves() {
        let g = Graph::from_triples(2, &[]).unwrap();
        let all = g.vertices();
        let p = cluster(&g, &all, &all, 1.0, 2, Direction::Out, &mut stream(3)).unwrap();
        assert_eq!(p.clusters.len(), 2);
        assert!(p.residual.is_empty());
    }

    #[test]
    fn injected_radius_claims_neighbor() {
        let g = Graph::from_triples(2, &[(0, 1, 1.0)]).unwrap();
        let all = g.vertices();
        let p = cluster_with_radii(&g, &all, &[(0, 2.0)], Direction::Out).unwrap();
        assert_eq!(p.clusters.len(), 1);
        assert_eq!(p.clusters[0].members, vec![0, 1]);
        assert_eq!(p.clusters[0].radius, 1.0);
        assert!(p.residual.is_empty());

        // inward, vertex 1 cannot reach 0
        let p = cluster_with_radii(&g, &all, &[(0, 2.0)], Direction::In).unwrap();
        assert_eq!(p.clusters[0].members, vec![0]);
        assert_eq!(p.residual, vec![1]);
    }

    #[test]
    fn ties_go_to_smaller_center() {
        // 0 -> 2 <- 1, both at distance 1 with equal radii
        let g = Graph::from_triples(3, &[(0, 2, 1.0), (1, 2, 1.0)]).unwrap();
        let all = g.vertices();
        let p = cluster_with_radii(&g, &all, &[(1, 3.0), (0, 3.0)], Direction::Out).unwrap();
        assert_eq!(p.clusters[0].center, 0);
        assert_eq!(p.clusters[0].members, vec![0, 2]);
        assert_eq!(p.clusters[1].members, vec![1]);
    }

    #[test]
    fn stolen_center_and_exact_boundary() {
        // r_0 - d(0,1) = 5 - 1 = 4 > r_1 = 3, so 0 takes 1; vertex 2 sits at
        // distance exactly 5 from 0 and so is not claimed.
        let g = Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 4.0)]).unwrap();
        let all = g.vertices();
        let p = cluster_with_radii(&g, &all, &[(0, 5.0), (1, 3.0)], Direction::Out).unwrap();
        assert_eq!(p.clusters.len(), 1);
        assert_eq!(p.clusters[0].members, vec![0, 1]);
        assert_eq!(p.residual, vec![2]);
    }

    #[test]
    fn rejects_centers_outside_restrict() {
        let g = Graph::from_triples(2, &[]).unwrap();
        let r = VertexSet::from_vertices(2, [0]);
        let u = VertexSet::from_vertices(2, [1]);
        assert!(cluster(&g, &r, &u, 1.0, 2, Direction::Out, &mut stream(0)).is_err());
    }
}
