//! Exponential-shift clustering, and how often a close pair stays
//! together compared with `exp(-(R/r) ln s)`.

use rtspan::generate::{random_graph, GraphSpec};
use rtspan::seed::stream;
use rtspan::verify::{oracle_round_trip_all_pairs, partition_probability_trial};
use rtspan::{cluster, Direction};

fn main() -> rtspan::Result<()> {
    let g = random_graph(&GraphSpec::new(30, 90).strongly_connected(), &mut stream(7))?;
    let all = g.vertices();
    let (r, s) = (20.0, 8);

    let p = cluster(&g, &all, &all, r, s, Direction::Out, &mut stream(1))?;
    println!("{} clusters, residual {:?}", p.clusters.len(), p.residual);
    for c in p.clusters.iter().take(5) {
        println!(
            "  center {:>2}  sampled {:>6.2}  measured {:>6.2}  size {}",
            c.center,
            c.sampled_radius,
            c.radius,
            c.members.len()
        );
    }

    let rt = oracle_round_trip_all_pairs(&g);
    let (d, v) = (1..g.n()).filter_map(|v| rt[0][v].map(|d| (d, v))).fold((f64::MAX, 0), |a, b| {
        if b.0 < a.0 {
            b
        } else {
            a
        }
    });
    let rep = partition_probability_trial(&g, (0, v), &all, r, s, Direction::Out, d, 5000, &mut stream(2))?;
    println!(
        "pair (0, {v}) at round-trip {d:.2}: together {:.3}, bound {:.3} (3 sigma {:.3}) -> {}",
        rep.rate,
        rep.bound,
        3.0 * rep.sigma,
        if rep.pass { "ok" } else { "below bound" }
    );
    Ok(())
}
