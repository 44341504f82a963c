//! Structural facts about ER_q: C4-freeness, diameter, where triangles live,
//! and the triangle hypergraph.
use polarity_graphs::analysis::{
    diameter, is_c4_free, neighborhood_split, parsons_partition, triangle_free_bound, triangles,
    TriangleHypergraph,
};
use polarity_graphs::PolarityGraph;

fn main() -> polarity_graphs::Result<()> {
    println!(" q     n  C4-free  diam  triangles  abs-in-tri  max|B_p|-deg  H:deg  H:codeg  bound");
    for q in [3, 4, 5, 7, 8, 9, 11] {
        let g = PolarityGraph::er(q)?;
        let tris = triangles(g.graph());
        let abs_in_tri = tris.iter().flatten().filter(|&&v| g.is_absolute(v)).count();
        let mut b_deg = 0;
        for p in 0..g.num_vertices() as u32 {
            if !g.is_absolute(p) {
                b_deg = b_deg.max(neighborhood_split(&g, p)?.b_max_degree(g.graph()));
            }
        }
        let h = TriangleHypergraph::from_graph(&g);
        println!(
            "{q:>2} {:>5}  {:>7}  {:>4}  {:>9}  {:>10}  {:>12}  {:>5}  {:>7}  {:>5}",
            g.num_vertices(),
            is_c4_free(g.graph()),
            diameter(g.graph())?,
            tris.len(),
            abs_in_tri,
            b_deg,
            h.max_degree(),
            h.max_codegree(),
            triangle_free_bound(q).floor,
        );
    }

    let g = PolarityGraph::er(7)?;
    let part = parsons_partition(&g);
    println!(
        "ER_7 partition: {} absolute, {} adjacent to an absolute point, {} others",
        part.absolute.len(),
        part.shadow.len(),
        part.rest.len()
    );
    Ok(())
}
