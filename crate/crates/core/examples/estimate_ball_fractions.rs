//! Sampled ball-size fractions against the exact values.

use rtspan::estimate_ball_fractions;
use rtspan::generate::{random_graph, GraphSpec};
use rtspan::seed::stream;
use rtspan::verify::exact_ball_fractions;

fn main() -> rtspan::Result<()> {
    let g = random_graph(&GraphSpec::new(256, 768).strongly_connected(), &mut stream(3))?;
    let all = g.vertices();
    let (r, eps) = (15.0, 0.125);
    let est = estimate_ball_fractions(&g, &all, r, eps, &all, &mut stream(4))?;
    let (out, inn) = exact_ball_fractions(&g, r);
    let worst = est
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &u)| (est.out_fraction[i] - out[u]).abs().max((est.in_fraction[i] - inn[u]).abs()))
        .fold(0.0, f64::max);
    println!("{} samples, worst error {worst:.4} (epsilon {eps})", est.sample_count());
    for u in 0..4 {
        let (o, i) = est.get(u).unwrap();
        println!("  vertex {u}: out {o:.3} vs {:.3}, in {i:.3} vs {:.3}", out[u], inn[u]);
    }
    Ok(())
}
