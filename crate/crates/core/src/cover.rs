//! Recursive covers and source-wise round-trip covers.
//!
//! [`recursive_cover`] carves `G(restrict)` into disjoint round-trip balls:
//! when some vertex has both a large in-ball and a large out-ball it peels
//! off a ball around it, otherwise it clusters around the vertices with
//! small balls and recurses into every part. [`swrt_cover`] repeats this
//! with independent randomness and keeps the union of all balls.

use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimate::estimate_ball_fractions;
use crate::graph::{round_trip_ball, BallResult, Direction, Graph, VertexId, VertexSet};
use crate::partition::cluster;
use crate::seed;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverParams {
    /// The large constant `c`: estimation radius `c·r`, peeled ball radii in
    /// `[2c·r, 2(c+1)·r]`, and the trial count factor.
    pub c: u32,
    /// Estimation accuracy.
    pub epsilon: f64,
    /// Extra factor on the number of recursive-cover trials.
    pub trial_multiplier: f64,
}

impl Default for CoverParams {
    fn default() -> Self {
        CoverParams { c: 4, epsilon: 0.125, trial_multiplier: 1.0 }
    }
}

impl CoverParams {
    pub fn validate(&self) -> Result<()> {
        if self.c < 1 {
            return Err(Error::param("c", "must be at least 1"));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::param("epsilon", format!("{} not in (0, 1)", self.epsilon)));
        }
        if !(self.trial_multiplier.is_finite() && self.trial_multiplier > 0.0) {
            return Err(Error::param(
                "trial_multiplier",
                format!("{} must be positive", self.trial_multiplier),
            ));
        }
        Ok(())
    }

    /// Largest round-trip radius a peeled ball can have at exploration
    /// radius `r`.
    pub fn max_ball_radius(&self, r: f64) -> f64 {
        2.0 * (self.c as f64 + 1.0) * r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureExit {
    /// Vertices with large in- and out-balls exist but are fewer than a
    /// quarter of the vertex set.
    SmallIntersection,
    /// Clustering left a part holding more than 7/8 of the vertex set.
    OversizedPart,
}

/// A vertex set returned whole by a failure exit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailurePart {
    pub trial: usize,
    pub exit: FailureExit,
    pub members: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverBall {
    /// Which recursive-cover run produced the ball.
    pub trial: usize,
    pub ball: BallResult,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cover {
    pub balls: Vec<CoverBall>,
    pub failures: Vec<FailurePart>,
    /// Exploration radius handed to each recursive cover.
    pub r: f64,
    /// Covering radius `R`, when built by [`swrt_cover`].
    pub target_radius: Option<f64>,
    pub k: Option<u32>,
    pub trials: usize,
    pub params: CoverParams,
}

impl Cover {
    pub fn ball_count(&self) -> usize {
        self.balls.len()
    }

    pub fn iter_balls(&self) -> impl Iterator<Item = &BallResult> {
        self.balls.iter().map(|b| &b.ball)
    }

    /// Largest measured round-trip radius over all balls.
    pub fn max_measured_radius(&self) -> f64 {
        self.iter_balls().map(|b| b.max_round_trip).fold(0.0, f64::max)
    }

    /// Whether balls of the same trial are pairwise disjoint.
    pub fn trials_disjoint(&self) -> bool {
        let mut seen = HashSet::new();
        self.balls.iter().all(|b| b.ball.members.iter().all(|&v| seen.insert((b.trial, v))))
    }

    /// Largest number of balls containing a single vertex.
    pub fn max_balls_per_vertex(&self, n: usize) -> usize {
        let mut count = vec![0usize; n];
        for b in self.iter_balls() {
            for &v in &b.members {
                count[v] += 1;
            }
        }
        count.into_iter().max().unwrap_or(0)
    }

    /// One JSON object per ball.
    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        for b in &self.balls {
            out.push_str(&serde_json::to_string(b)?);
            out.push('\n');
        }
        Ok(out)
    }
}

/// One recursive cover of `G(restrict)` for the source set `sources` at
/// exploration radius `r`. Ball member sets are pairwise disjoint.
pub fn recursive_cover<R: Rng + ?Sized>(
    g: &Graph,
    restrict: &VertexSet,
    r: f64,
    sources: &VertexSet,
    params: &CoverParams,
    rng: &mut R,
) -> Result<Cover> {
    params.validate()?;
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::param("r", format!("{r} must be positive")));
    }
    if !sources.is_subset(restrict) {
        return Err(Error::NotSubset { what: "source set" });
    }
    let mut cover = Cover {
        balls: Vec::new(),
        failures: Vec::new(),
        r,
        target_radius: None,
        k: None,
        trials: 1,
        params: *params,
    };
    run_recursive_cover(g, restrict.clone(), r, sources.clone(), params, 0, rng, &mut cover)?;
    Ok(cover)
}

#[allow(clippy::too_many_arguments)]
fn run_recursive_cover<R: Rng + ?Sized>(
    g: &Graph,
    restrict: VertexSet,
    r: f64,
    sources: VertexSet,
    params: &CoverParams,
    trial: usize,
    rng: &mut R,
    cover: &mut Cover,
) -> Result<()> {
    let c = params.c as f64;
    let mut work = vec![(restrict, sources)];
    while let Some((v_set, s_set)) = work.pop() {
        if v_set.is_empty() || s_set.is_empty() {
            continue;
        }
        if s_set.len() == 1 {
            let u = s_set.first().unwrap();
            let ball = round_trip_ball(g, &v_set, u, r)?;
            cover.balls.push(CoverBall { trial, ball });
            continue;
        }

        let n_here = v_set.len();
        let est = estimate_ball_fractions(g, &v_set, c * r, params.epsilon, &v_set, rng)?;
        let mut u_out = Vec::new();
        let mut u_in = Vec::new();
        let mut both = Vec::new();
        for (i, &u) in est.vertices.iter().enumerate() {
            let big_out = est.out_fraction[i] >= 0.75;
            let big_in = est.in_fraction[i] >= 0.75;
            if big_out {
                u_out.push(u);
            }
            if big_in {
                u_in.push(u);
            }
            if big_out && big_in {
                both.push(u);
            }
        }

        if !both.is_empty() {
            if 4 * both.len() < n_here {
                cover.failures.push(FailurePart {
                    trial,
                    exit: FailureExit::SmallIntersection,
                    members: v_set.as_slice().to_vec(),
                });
                continue;
            }
            let u = both[0];
            let ru = rng.gen_range(2.0 * c * r..=2.0 * (c + 1.0) * r);
            let ball = round_trip_ball(g, &v_set, u, ru)?;
            let rest = v_set.without(&ball.members);
            let rest_sources = s_set.without(&ball.members);
            cover.balls.push(CoverBall { trial, ball });
            work.push((rest, rest_sources));
            continue;
        }

        let (centers, dir) = if 2 * u_out.len() <= n_here {
            (v_set.without(&u_out), Direction::Out)
        } else {
            (v_set.without(&u_in), Direction::In)
        };
        let partition = cluster(g, &v_set, &centers, r, s_set.len(), dir, rng)?;
        if partition.parts().any(|p| 8 * p.len() > 7 * n_here) {
            cover.failures.push(FailurePart {
                trial,
                exit: FailureExit::OversizedPart,
                members: v_set.as_slice().to_vec(),
            });
            continue;
        }
        // push in reverse so parts are processed in order
        let parts: Vec<&[VertexId]> = partition.parts().collect();
        for part in parts.into_iter().rev() {
            let part_set = VertexSet::from_vertices(g.n(), part.iter().copied());
            let part_sources = s_set.intersection(&part_set);
            work.push((part_set, part_sources));
        }
    }
    Ok(())
}

/// Smallest integer `x` with `x^k >= s`.
pub(crate) fn ceil_root(s: usize, k: u32) -> usize {
    let mut x = (s as f64).powf(1.0 / k as f64).round() as usize;
    while x > 1 && (x - 1).checked_pow(k).is_some_and(|p| p >= s) {
        x -= 1;
    }
    while x.checked_pow(k).is_some_and(|p| p < s) {
        x += 1;
    }
    x.max(1)
}

/// Number of recursive-cover runs for `s` sources on `n` vertices:
/// `c·⌈s^{1/k}⌉·⌈ln n⌉`, scaled by the trial multiplier.
pub fn trial_count(n: usize, s: usize, k: u32, params: &CoverParams) -> usize {
    let base = params.c as f64 * ceil_root(s, k) as f64 * (n as f64).ln().ceil();
    ((base * params.trial_multiplier).ceil() as usize).max(1)
}

/// Exploration radius `6·R·k·ln n` used by [`swrt_cover`].
pub fn exploration_radius(n: usize, k: u32, target_radius: f64) -> f64 {
    6.0 * target_radius * k as f64 * (n as f64).ln()
}

/// An `S`-sourcewise round-trip cover of radius `target_radius`: the union
/// of the balls of independent recursive covers.
pub fn swrt_cover<R: Rng + ?Sized>(
    g: &Graph,
    k: u32,
    target_radius: f64,
    sources: &VertexSet,
    params: &CoverParams,
    rng: &mut R,
) -> Result<Cover> {
    params.validate()?;
    if sources.is_empty() {
        return Err(Error::EmptySources);
    }
    if k <= 1 {
        return Err(Error::param("k", format!("{k} must exceed 1")));
    }
    if !(target_radius.is_finite() && target_radius > 0.0) {
        return Err(Error::param("R", format!("{target_radius} must be positive")));
    }
    let n = g.n();
    let all = g.vertices();
    if !sources.is_subset(&all) {
        return Err(Error::NotSubset { what: "source set" });
    }

    if n == 1 {
        // ln 1 = 0 leaves no exploration radius; the lone vertex is its own ball
        let ball = round_trip_ball(g, &all, 0, 0.0)?;
        return Ok(Cover {
            balls: vec![CoverBall { trial: 0, ball }],
            failures: Vec::new(),
            r: 0.0,
            target_radius: Some(target_radius),
            k: Some(k),
            trials: 1,
            params: *params,
        });
    }

    let r = exploration_radius(n, k, target_radius);
    let trials = trial_count(n, sources.len(), k, params);
    let base = seed::fork(rng);
    let mut cover = Cover {
        balls: Vec::new(),
        failures: Vec::new(),
        r,
        target_radius: Some(target_radius),
        k: Some(k),
        trials,
        params: *params,
    };
    for trial in 0..trials {
        let mut trial_rng = seed::child_stream(base, trial as u64);
        run_recursive_cover(g, all.clone(), r, sources.clone(), params, trial, &mut trial_rng, &mut cover)?;
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::stream;

    fn cycle3() -> Graph {
        Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap()
    }

    #[test]
    fn empty_sources_give_empty_cover() {
        let g = cycle3();
        let c = recursive_cover(
            &g,
            &g.vertices(),
            1.0,
            &VertexSet::empty(3),
            &CoverParams::default(),
            &mut stream(0),
        )
        .unwrap();
        assert!(c.balls.is_empty() && c.failures.is_empty());
    }

    #[test]
    fn single_source_is_one_ball() {
        let g = cycle3();
        let s = VertexSet::from_vertices(3, [1]);
        let c = recursive_cover(&g, &g.vertices(), 3.0, &s, &CoverParams::default(), &mut stream(0)).unwrap();
        assert_eq!(c.balls.len(), 1);
        assert_eq!(c.balls[0].ball.center, 1);
        assert_eq!(c.balls[0].ball.radius, 3.0);
        assert_eq!(c.balls[0].ball.members, vec![0, 1, 2]);
    }

    #[test]
    fn three_cycle_peels_one_ball() {
        let g = cycle3();
        let all = g.vertices();
        // c·r = 4 > 3
        let c = recursive_cover(&g, &all, 1.0, &all, &CoverParams::default(), &mut stream(5)).unwrap();
        assert!(c.failures.is_empty());
        assert_eq!(c.balls.len(), 1);
        let b = &c.balls[0].ball;
        assert_eq!(b.center, 0);
        assert!(b.radius >= 8.0 && b.radius <= 10.0);
        assert_eq!(b.members, vec![0, 1, 2]);
    }

    #[test]
    fn ceil_root_is_exact() {
        assert_eq!(ceil_root(1, 2), 1);
        assert_eq!(ceil_root(4, 2), 2);
        assert_eq!(ceil_root(5, 2), 3);
        assert_eq!(ceil_root(8, 3), 2);
        assert_eq!(ceil_root(9, 3), 3);
        assert_eq!(ceil_root(16, 2), 4);
        assert_eq!(ceil_root(100, 2), 10);
    }

    #[test]
    fn trial_count_formula() {
        let p = CoverParams::default();
        // 4 * 2 * ceil(ln 100) = 4 * 2 * 5
        assert_eq!(trial_count(100, 4, 2, &p), 40);
        assert_eq!(trial_count(100, 16, 2, &p), 80);
    }

    #[test]
    fn swrt_single_source() {
        let g = cycle3();
        let s = VertexSet::from_vertices(3, [2]);
        let cover = swrt_cover(&g, 2, 1.0, &s, &CoverParams::default(), &mut stream(1)).unwrap();
        let r = exploration_radius(3, 2, 1.0);
        assert_eq!(cover.balls.len(), cover.trials);
        for b in cover.iter_balls() {
            assert_eq!(b.radius, r);
            assert_eq!(b.members, vec![0, 1, 2]);
        }
    }

    #[test]
    fn swrt_rejects_bad_args() {
        let g = cycle3();
        let p = CoverParams::default();
        assert!(matches!(
            swrt_cover(&g, 2, 1.0, &VertexSet::empty(3), &p, &mut stream(0)),
            Err(Error::EmptySources)
        ));
        assert!(swrt_cover(&g, 1, 1.0, &g.vertices(), &p, &mut stream(0)).is_err());
        let bad = CoverParams { c: 0, ..p };
        assert!(swrt_cover(&g, 2, 1.0, &g.vertices(), &bad, &mut stream(0)).is_err());
    }

    #[test]
    fn trials_disjointness_detects_overlap() {
        let ball = |members: Vec<usize>| BallResult {
            center: members[0],
            radius: 1.0,
            members,
            rt_tree_edges: vec![],
            max_round_trip: 0.0,
        };
        let mut c = Cover {
            balls: vec![
                CoverBall { trial: 0, ball: ball(vec![0, 1]) },
                CoverBall { trial: 1, ball: ball(vec![1, 2]) },
            ],
            failures: vec![],
            r: 1.0,
            target_radius: None,
            k: None,
            trials: 2,
            params: CoverParams::default(),
        };
        assert!(c.trials_disjoint());
        c.balls[1].trial = 0;
        assert!(!c.trials_disjoint());
    }
}
