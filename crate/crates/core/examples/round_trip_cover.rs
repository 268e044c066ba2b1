//! A source-wise round-trip cover, checked pair by pair.

use rtspan::generate::{random_graph, GraphSpec};
use rtspan::seed::stream;
use rtspan::verify::check_cover;
use rtspan::{swrt_cover, CoverParams, VertexSet};

fn main() -> rtspan::Result<()> {
    let g = random_graph(&GraphSpec::new(60, 240).strongly_connected(), &mut stream(5))?;
    let sources = VertexSet::from_vertices(g.n(), [0, 10, 20, 30]);
    let params = CoverParams::default();
    let (k, big_r) = (2, 6.0);

    let cover = swrt_cover(&g, k, big_r, &sources, &params, &mut stream(6))?;
    let report = check_cover(&g, &cover, &sources, big_r);
    println!("{} trials, {} balls, {} failure exits", cover.trials, cover.ball_count(), cover.failures.len());
    println!(
        "{} qualifying pairs, {} uncovered; radius {:.1} (limit {:.1}); at most {} balls per vertex",
        report.qualifying_pairs,
        report.uncovered_pairs,
        report.max_certified_radius,
        params.max_ball_radius(cover.r),
        report.max_balls_per_vertex
    );
    Ok(())
}
