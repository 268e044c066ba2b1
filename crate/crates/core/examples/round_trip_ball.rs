//! Round-trip balls and their RT-trees on a small two-cycle graph.

use rtspan::{round_trip_ball, Graph};

fn main() -> rtspan::Result<()> {
    // a fast 3-cycle 0-1-2 and a slow 3-cycle 0-3-4 sharing vertex 0
    let g = Graph::from_triples(
        5,
        &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (0, 3, 5.0), (3, 4, 5.0), (4, 0, 5.0)],
    )?;
    let all = g.vertices();
    for radius in [0.0, 3.0, 15.0] {
        let ball = round_trip_ball(&g, &all, 0, radius)?;
        println!(
            "radius {radius:>4}: members {:?}, rt-tree edges {:?}, measured radius {}",
            ball.members, ball.rt_tree_edges, ball.max_round_trip
        );
    }
    Ok(())
}
