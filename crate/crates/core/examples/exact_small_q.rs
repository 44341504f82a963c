//! Exact maxima by branch-and-bound for the smallest planes.
use std::time::Instant;

use polarity_graphs::analysis::{triangle_free_bound, TriangleHypergraph};
use polarity_graphs::search::{exact_max, Budget};
use polarity_graphs::PolarityGraph;

fn main() -> polarity_graphs::Result<()> {
    for q in [2, 3, 4, 5] {
        let g = PolarityGraph::er(q)?;
        let h = TriangleHypergraph::from_graph(&g);
        let start = Instant::now();
        let out = exact_max(&h, &Budget::unlimited())?;
        println!(
            "ER_{q}: |V(H)|={:>2} |E(H)|={:>2}  max={:>2} optimal={} nodes={} in {:?}  (bound {})",
            h.vertices().len(),
            h.edges().len(),
            out.vertices.len(),
            out.optimal,
            out.nodes,
            start.elapsed(),
            triangle_free_bound(q).floor
        );
    }

    // A node cap turns the answer into a lower bound.
    let g = PolarityGraph::er(7)?;
    let out = exact_max(&TriangleHypergraph::from_graph(&g), &Budget::steps(5_000))?;
    println!(
        "ER_7 with 5000 nodes: size {} optimal={}",
        out.vertices.len(),
        out.optimal
    );
    Ok(())
}
