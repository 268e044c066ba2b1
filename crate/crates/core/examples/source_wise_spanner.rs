//! Builds the weight-independent spanner and measures its stretch.
//!
//! cargo run --release --example source_wise_spanner -- [n] [s] [k] [seed]

use std::time::Instant;

use rtspan::generate::{random_graph, GraphSpec};
use rtspan::seed::stream;
use rtspan::verify::check_stretch;
use rtspan::{stretch_bound, swrt_spanner, CoverParams, VertexSet};

fn main() -> rtspan::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let n = *args.first().unwrap_or(&100) as usize;
    let s = *args.get(1).unwrap_or(&4) as usize;
    let k = *args.get(2).unwrap_or(&2) as u32;
    let seed = *args.get(3).unwrap_or(&0);

    let g =
        random_graph(&GraphSpec::new(n, 6 * n).weights(1.0, 1000.0).strongly_connected(), &mut stream(seed))?;
    let sources = VertexSet::from_vertices(n, (0..s).map(|i| i * n / s));
    let params = CoverParams::default();

    let start = Instant::now();
    let h = swrt_spanner(&g, k, &sources, &params, &mut stream(seed + 1))?;
    let built = start.elapsed();
    let bound = stretch_bound(k, n, params.c);
    let rep = check_stretch(&g, &h.edges, &sources, bound);

    println!(
        "n {n}, m {}, s {s}, k {k}: {} spanner edges ({} certificate) in {built:.2?}",
        g.m(),
        h.edge_count(),
        h.certificate_edges
    );
    for sc in &h.scales {
        println!(
            "  scale {:>3}: {:>3} vertices, {:>4} edges, {:>4} balls, {} new spanner edges",
            sc.scale, sc.vertices, sc.edges, sc.balls, sc.new_edges
        );
    }
    println!("max stretch {:.3} (bound {bound:.1}), failure exits {}", rep.max_stretch, h.failure_exits());
    Ok(())
}
