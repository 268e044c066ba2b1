//! Prints a seeded strongly connected random digraph as an edge list.
//!
//! cargo run --example generate_graph -- [n] [m] [seed]

use rtspan::generate::{random_graph, GraphSpec};
use rtspan::seed::stream;
use rtspan::{strongly_connected_components, write_edge_list};

fn main() -> rtspan::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let n = *args.first().unwrap_or(&12) as usize;
    let m = *args.get(1).unwrap_or(&(3 * n as u64)) as usize;
    let seed = *args.get(2).unwrap_or(&1);

    let spec = GraphSpec::new(n, m).weights(1.0, 20.0).integer().strongly_connected();
    let g = random_graph(&spec, &mut stream(seed))?;
    eprintln!("{} SCC(s)", strongly_connected_components(&g, &g.vertices()).len());
    print!("{}", write_edge_list(&g));
    Ok(())
}
