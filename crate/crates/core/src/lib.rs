//! Source-wise round-trip spanners and round-trip covers of weighted
//! directed graphs.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`]: the immutable digraph, Dijkstra searches restricted to an
//!   induced vertex set, round-trip balls with their RT-trees, SCCs and the
//!   edge-list text format.
//! - [`partition`]: exponential-clock clustering around a center set.
//! - [`estimate`]: sampling estimates of in-/out-ball size fractions.
//! - [`cover`]: the recursive cover and the repeated source-wise cover.
//! - [`linfty`]: the merge tree of L∞ round-trip distances, the linear-size
//!   certificate edge set, and the per-scale contracted graphs.
//! - [`spanner`]: the weight-dependent and weight-independent spanners.
//! - [`verify`]: brute-force oracles and statistical checkers.
//! - [`generate`] and [`cli`]: seeded random graphs and the command-line
//!   front end used by the `rtspan` binary.
//!
//! Every randomized routine takes an explicit `rand::Rng`; trial loops split
//! it into per-trial streams with [`seed::derive_seed`] so that results are
//! reproducible from a single run seed.

pub mod cli;
pub mod cover;
pub mod error;
pub mod estimate;
pub mod generate;
pub mod graph;
pub mod linfty;
pub mod partition;
pub mod seed;
pub mod spanner;
pub mod verify;

pub use cover::{recursive_cover, swrt_cover, Cover, CoverBall, CoverParams, FailureExit, FailurePart};
pub use error::{Error, ParseError, Result};
pub use estimate::{estimate_ball_fractions, FractionEstimates};
pub use graph::{
    directional_ball, parse_edge_list, round_trip_ball, sssp, strongly_connected_components, write_edge_list,
    BallResult, Direction, DistanceVector, Edge, EdgeId, Graph, VertexId, VertexSet,
};
pub use linfty::{build_scales, contract, linfty_merge_tree, CertificateEdges, ContractionBundle, MergeTree};
pub use partition::{cluster, cluster_with_radii, Cluster, Partition, RadiusSampler};
pub use spanner::{stretch_bound, swrt_spanner, swrt_spanner_weighted, Provenance, SpannerResult};
