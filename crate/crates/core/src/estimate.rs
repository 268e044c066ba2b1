//! Sampling estimates of in-ball and out-ball size fractions.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{search, Direction, Graph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FractionEstimates {
    /// Queried vertices, in increasing id order.
    pub vertices: Vec<VertexId>,
    /// Estimated fraction of `restrict` within distance `radius` of each
    /// queried vertex.
    pub out_fraction: Vec<f64>,
    /// Estimated fraction of `restrict` within distance `radius` to each
    /// queried vertex.
    pub in_fraction: Vec<f64>,
    /// The sampled vertices, with repetitions.
    pub sample: Vec<VertexId>,
    pub radius: f64,
    pub epsilon: f64,
}

impl FractionEstimates {
    pub fn sample_count(&self) -> usize {
        self.sample.len()
    }

    pub fn get(&self, u: VertexId) -> Option<(f64, f64)> {
        let i = self.vertices.binary_search(&u).ok()?;
        Some((self.out_fraction[i], self.in_fraction[i]))
    }
}

/// `⌈5 ε⁻² ln n⌉`, and at least one.
pub fn sample_size(n: usize, epsilon: f64) -> usize {
    let t = (5.0 / (epsilon * epsilon) * (n as f64).ln()).ceil();
    (t as usize).max(1)
}

/// Samples vertices of `restrict` uniformly with replacement and estimates,
/// for every `u` in `queried`, the fractions of `restrict` inside
/// `out-ball(u, r)` and `in-ball(u, r)` of `G(restrict)`.
pub fn estimate_ball_fractions<R: Rng + ?Sized>(
    g: &Graph,
    restrict: &VertexSet,
    r: f64,
    epsilon: f64,
    queried: &VertexSet,
    rng: &mut R,
) -> Result<FractionEstimates> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::param("epsilon", format!("{epsilon} not in (0, 1)")));
    }
    if restrict.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let t = sample_size(restrict.len(), epsilon);
    let pool = restrict.as_slice();
    let sample: Vec<VertexId> = (0..t).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
    let mut est = fractions_from_sample(g, restrict, r, queried, &sample)?;
    est.epsilon = epsilon;
    Ok(est)
}

/// The estimator for a fixed sample. One bounded search per distinct
/// sampled vertex or per queried vertex in each direction, whichever side
/// is smaller.
pub fn fractions_from_sample(
    g: &Graph,
    restrict: &VertexSet,
    r: f64,
    queried: &VertexSet,
    sample: &[VertexId],
) -> Result<FractionEstimates> {
    if r.is_nan() || r < 0.0 {
        return Err(Error::param("r", format!("{r} is negative")));
    }
    if !queried.is_subset(restrict) {
        return Err(Error::NotSubset { what: "queried set" });
    }
    if let Some(&v) = sample.iter().find(|&&v| !restrict.contains(v)) {
        return Err(Error::NotInRestrict { vertex: v });
    }
    if sample.is_empty() {
        return Err(Error::EmptyVertexSet);
    }

    let n = g.n();
    let mut multiplicity = vec![0usize; n];
    let mut distinct = Vec::new();
    for &v in sample {
        if multiplicity[v] == 0 {
            distinct.push(v);
        }
        multiplicity[v] += 1;
    }
    distinct.sort_unstable();

    let mut slot = vec![usize::MAX; n];
    for (i, u) in queried.iter().enumerate() {
        slot[u] = i;
    }
    let mut out_hits = vec![0usize; queried.len()];
    let mut in_hits = vec![0usize; queried.len()];

    if distinct.len() < queried.len() {
        for &v in &distinct {
            let w = multiplicity[v];
            // searching inward from v finds every u with d(u, v) <= r
            let to_v = search(g, restrict, &[(v, 0.0)], Direction::In, r);
            let from_v = search(g, restrict, &[(v, 0.0)], Direction::Out, r);
            for u in queried.iter() {
                if to_v.dist[u].is_some() {
                    out_hits[slot[u]] += w;
                }
                if from_v.dist[u].is_some() {
                    in_hits[slot[u]] += w;
                }
            }
        }
    } else {
        for (i, u) in queried.iter().enumerate() {
            let from_u = search(g, restrict, &[(u, 0.0)], Direction::Out, r);
            let to_u = search(g, restrict, &[(u, 0.0)], Direction::In, r);
            for &v in &distinct {
                if from_u.dist[v].is_some() {
                    out_hits[i] += multiplicity[v];
                }
                if to_u.dist[v].is_some() {
                    in_hits[i] += multiplicity[v];
                }
            }
        }
    }

    let t = sample.len() as f64;
    Ok(FractionEstimates {
        vertices: queried.as_slice().to_vec(),
        out_fraction: out_hits.iter().map(|&h| h as f64 / t).collect(),
        in_fraction: in_hits.iter().map(|&h| h as f64 / t).collect(),
        sample: sample.to_vec(),
        radius: r,
        epsilon: f64::NAN,
    })
}
