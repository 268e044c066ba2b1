//! Seeded random digraphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq)]
pub struct GraphSpec {
    pub n: usize,
    pub m: usize,
    pub min_weight: f64,
    pub max_weight: f64,
    /// Draw integer weights from `min_weight..=max_weight`.
    pub integer_weights: bool,
    /// Draw `ln w` uniformly instead of `w`, spreading weights over many
    /// scales. Ignored with integer weights.
    pub log_uniform: bool,
    /// Start from a random Hamiltonian cycle so the graph is one SCC;
    /// requires `m >= n`.
    pub strongly_connected: bool,
}

impl GraphSpec {
    pub fn new(n: usize, m: usize) -> Self {
        GraphSpec {
            n,
            m,
            min_weight: 1.0,
            max_weight: 10.0,
            integer_weights: false,
            log_uniform: false,
            strongly_connected: false,
        }
    }

    pub fn weights(mut self, min: f64, max: f64) -> Self {
        self.min_weight = min;
        self.max_weight = max;
        self
    }

    pub fn integer(mut self) -> Self {
        self.integer_weights = true;
        self
    }

    pub fn log_uniform(mut self) -> Self {
        self.log_uniform = true;
        self
    }

    pub fn strongly_connected(mut self) -> Self {
        self.strongly_connected = true;
        self
    }
}

fn weight<R: Rng + ?Sized>(spec: &GraphSpec, rng: &mut R) -> f64 {
    if spec.integer_weights {
        rng.gen_range(spec.min_weight.ceil() as i64..=spec.max_weight.floor() as i64) as f64
    } else if spec.min_weight == spec.max_weight {
        spec.min_weight
    } else if spec.log_uniform {
        let ratio = spec.max_weight / spec.min_weight;
        (spec.min_weight * ratio.powf(rng.gen::<f64>())).min(spec.max_weight)
    } else {
        rng.gen_range(spec.min_weight..spec.max_weight)
    }
}

/// A simple digraph: no self-loops and no repeated ordered pair. Edges are
/// listed in generation order (cycle edges first in strongly-connected
/// mode).
pub fn random_graph<R: Rng + ?Sized>(spec: &GraphSpec, rng: &mut R) -> Result<Graph> {
    let n = spec.n;
    let max_pairs = n.saturating_mul(n.saturating_sub(1));
    if spec.m > max_pairs {
        return Err(Error::param("m", format!("{} exceeds n(n-1) = {max_pairs}", spec.m)));
    }
    if !(spec.min_weight > 0.0 && spec.min_weight <= spec.max_weight && spec.max_weight.is_finite()) {
        return Err(Error::param(
            "weights",
            format!("need 0 < min <= max < inf, got [{}, {}]", spec.min_weight, spec.max_weight),
        ));
    }
    if spec.integer_weights && spec.min_weight.ceil() > spec.max_weight.floor() {
        return Err(Error::param("weights", "no integer in the weight range".to_string()));
    }

    let mut taken = HashSet::with_capacity(spec.m);
    let mut edges = Vec::with_capacity(spec.m);
    if spec.strongly_connected && n > 1 {
        if spec.m < n {
            return Err(Error::param("m", format!("{} is below n = {n} in strongly-connected mode", spec.m)));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for i in 0..n {
            let (u, v) = (order[i], order[(i + 1) % n]);
            taken.insert((u, v));
            edges.push(Edge { src: u, dst: v, weight: weight(spec, rng) });
        }
    }

    // rejection sampling while sparse, otherwise shuffle the complement
    if spec.m - edges.len() <= max_pairs / 2 {
        while edges.len() < spec.m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && taken.insert((u, v)) {
                edges.push(Edge { src: u, dst: v, weight: weight(spec, rng) });
            }
        }
    } else {
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !taken.contains(&(u, v)))
            .collect();
        rest.shuffle(rng);
        for (u, v) in rest.into_iter().take(spec.m - edges.len()) {
            edges.push(Edge { src: u, dst: v, weight: weight(spec, rng) });
        }
    }
    Graph::new(n, edges)
}

/// Dense random groups joined by much heavier bridge edges: a ring over
/// the groups plus `extra_bridges` random ones. Round-trip distances come
/// in two well-separated scales.
#[derive(Clone, Debug, PartialEq)]
pub struct PlantedSpec {
    pub groups: usize,
    pub group_size: usize,
    /// Edges inside each group, including its Hamiltonian cycle.
    pub inner_edges: usize,
    pub inner_weights: (f64, f64),
    pub bridge_weights: (f64, f64),
    pub extra_bridges: usize,
}

impl PlantedSpec {
    pub fn new(groups: usize, group_size: usize) -> Self {
        PlantedSpec {
            groups,
            group_size,
            inner_edges: 3 * group_size,
            inner_weights: (1.0, 3.0),
            bridge_weights: (2000.0, 4000.0),
            extra_bridges: 2 * groups,
        }
    }

    pub fn n(&self) -> usize {
        self.groups * self.group_size
    }
}

/// Vertex `i` belongs to group `i / group_size`. Strongly connected
/// whenever every group has more than one vertex or there is one group.
pub fn planted_groups<R: Rng + ?Sized>(spec: &PlantedSpec, rng: &mut R) -> Result<Graph> {
    let (k, size) = (spec.groups, spec.group_size);
    if k == 0 || size == 0 {
        return Err(Error::param("groups", "need at least one non-empty group".to_string()));
    }
    let inner = GraphSpec::new(size, spec.inner_edges.min(size * (size - 1)))
        .weights(spec.inner_weights.0, spec.inner_weights.1)
        .strongly_connected();
    let bridge = GraphSpec::new(2, 0).weights(spec.bridge_weights.0, spec.bridge_weights.1);

    let mut edges = Vec::new();
    for gi in 0..k {
        let g = random_graph(&inner, rng)?;
        edges.extend(g.edges().iter().map(|e| Edge {
            src: gi * size + e.src,
            dst: gi * size + e.dst,
            weight: e.weight,
        }));
    }
    let link = |a: usize, b: usize, rng: &mut R| Edge {
        src: a * size + rng.gen_range(0..size),
        dst: b * size + rng.gen_range(0..size),
        weight: weight(&bridge, rng),
    };
    let mut bridges = Vec::new();
    if k > 1 {
        for gi in 0..k {
            bridges.push(link(gi, (gi + 1) % k, rng));
        }
        for _ in 0..spec.extra_bridges {
            let a = rng.gen_range(0..k);
            let b = (a + rng.gen_range(1..k)) % k;
            bridges.push(link(a, b, rng));
        }
    }
    edges.extend(bridges);
    Graph::new(k * size, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::strongly_connected_components;
    use crate::seed::stream;

    #[test]
    fn simple_and_seeded() {
        let spec = GraphSpec::new(10, 30);
        let a = random_graph(&spec, &mut stream(1)).unwrap();
        let b = random_graph(&spec, &mut stream(1)).unwrap();
        assert_eq!(a.edges(), b.edges());
        let pairs: HashSet<_> = a.edges().iter().map(|e| (e.src, e.dst)).collect();
        assert_eq!(pairs.len(), 30);
        assert!(a.edges().iter().all(|e| e.src != e.dst && (1.0..10.0).contains(&e.weight)));
    }

    #[test]
    fn strongly_connected_mode() {
        for seed in 0..10 {
            let spec = GraphSpec::new(20, 25).strongly_connected();
            let g = random_graph(&spec, &mut stream(seed)).unwrap();
            assert_eq!(strongly_connected_components(&g, &g.vertices()).len(), 1);
        }
    }

    #[test]
    fn dense_and_complete() {
        let g = random_graph(&GraphSpec::new(6, 30).integer().weights(1.0, 3.0), &mut stream(0)).unwrap();
        assert_eq!(g.m(), 30);
        assert!(g.edges().iter().all(|e| e.weight.fract() == 0.0));
        assert!(random_graph(&GraphSpec::new(6, 31), &mut stream(0)).is_err());
    }

    #[test]
    fn planted_groups_are_one_scc() {
        let spec = PlantedSpec::new(8, 8);
        let g = planted_groups(&spec, &mut stream(4)).unwrap();
        assert_eq!(g.n(), 64);
        assert_eq!(strongly_connected_components(&g, &g.vertices()).len(), 1);
        let heavy = g.edges().iter().filter(|e| e.weight >= 2000.0).count();
        assert_eq!(heavy, 8 + 16);
        assert!(g.edges().iter().filter(|e| e.weight >= 2000.0).all(|e| e.src / 8 != e.dst / 8));
    }

    #[test]
    fn log_uniform_spans_the_range() {
        let spec = GraphSpec::new(100, 2000).weights(1.0, 1e4).log_uniform();
        let g = random_graph(&spec, &mut stream(2)).unwrap();
        let below_10 = g.edges().iter().filter(|e| e.weight < 10.0).count();
        // a quarter of the mass per decade
        assert!((400..600).contains(&below_10), "{below_10}");
        assert!(g.edges().iter().all(|e| (1.0..=1e4).contains(&e.weight)));
    }
}
