//! The SCC merge tree, its L∞ distances and the certificate edge set.

use rtspan::verify::oracle_linfty_all_pairs;
use rtspan::{linfty_merge_tree, Graph};

fn main() -> rtspan::Result<()> {
    let g = Graph::from_triples(
        5,
        &[(0, 1, 1.0), (1, 0, 10.0), (1, 2, 2.0), (2, 0, 3.0), (2, 3, 4.0), (3, 2, 4.0), (3, 4, 1.0)],
    )?;
    let (tree, h1) = linfty_merge_tree(&g);
    println!("{} leaves, {} nodes, certificate {:?}", tree.leaf_count(), tree.node_count(), h1.edges);
    for node in tree.leaf_count()..tree.node_count() {
        println!("  node {node}: label {}, children {:?}", tree.label(node), tree.children(node));
    }
    let oracle = oracle_linfty_all_pairs(&g);
    let sub = g.edge_subgraph(&h1.edges);
    let sub_oracle = oracle_linfty_all_pairs(&sub);
    for u in 0..g.n() {
        let row: Vec<String> =
            (0..g.n()).map(|v| tree.linfty_distance(u, v).map_or("inf".into(), |d| d.to_string())).collect();
        assert!((0..g.n())
            .all(|v| tree.linfty_distance(u, v) == oracle[u][v] && oracle[u][v] == sub_oracle[u][v]));
        println!("  d_inf({u}, *) = {}", row.join(" "));
    }
    Ok(())
}
