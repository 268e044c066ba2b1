//! The weight-dependent construction next to the contracted one.

use rtspan::generate::{random_graph, GraphSpec};
use rtspan::seed::stream;
use rtspan::verify::check_stretch;
use rtspan::{stretch_bound, swrt_spanner, swrt_spanner_weighted, CoverParams, VertexSet};

fn main() -> rtspan::Result<()> {
    let g = random_graph(&GraphSpec::new(50, 250).weights(1.0, 50.0).strongly_connected(), &mut stream(11))?;
    let sources = VertexSet::from_vertices(g.n(), [0, 1, 2, 3]);
    let params = CoverParams::default();
    let bound = stretch_bound(2, g.n(), params.c);

    let weighted = swrt_spanner_weighted(&g, 2, &sources, &params, &mut stream(1))?;
    let contracted = swrt_spanner(&g, 2, &sources, &params, &mut stream(1))?;
    for (name, h) in [("weighted", &weighted), ("contracted", &contracted)] {
        let rep = check_stretch(&g, &h.edges, &sources, bound);
        println!(
            "{name:>10}: {:>4} edges over {:>2} scales, max stretch {:.3}",
            h.edge_count(),
            h.scales.len(),
            rep.max_stretch
        );
    }
    Ok(())
}
