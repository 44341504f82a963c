//! Unitary polarity graphs U_q for square q; non-squares are rejected.
use polarity_graphs::PolarityGraph;

fn main() {
    for q in [4, 9, 16, 25, 5, 8] {
        match PolarityGraph::unitary(q) {
            Ok(g) => {
                let absolute = g.absolute_points().len();
                let s = (q as f64).sqrt() as usize;
                println!(
                    "U_{q}: n={} edges={} absolute={absolute} (q^(3/2)+1 = {})",
                    g.num_vertices(),
                    g.graph().num_edges(),
                    s * s * s + 1
                );
            }
            Err(e) => println!("U_{q}: {e}"),
        }
    }
}
