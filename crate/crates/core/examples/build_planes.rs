//! PG(2,q) with its orthogonal polarity, and the resulting graph ER_q.
use polarity_graphs::{Field, IncidencePlane, Polarity, PolarityGraph};

fn main() -> polarity_graphs::Result<()> {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let field = Field::of_order(q)?;
        let plane = IncidencePlane::pg2(&field)?;
        let report = plane.validate();
        let theta = Polarity::orthogonal(&plane)?;
        let g = PolarityGraph::new(plane, theta)?;
        println!(
            "q={q:>2}  points={:>3}  plane checks ok={}  edges={:>4}  absolute={:>2}  degrees={:?}",
            g.num_vertices(),
            report.passed(),
            g.graph().num_edges(),
            g.absolute_points().len(),
            g.graph().degree_profile(),
        );
    }

    let fano = IncidencePlane::pg2(&Field::of_order(2)?)?;
    let coords = fano.coords().expect("pg2 planes carry coordinates");
    for p in coords.points() {
        println!("point {} = {:?}", p.id, p.coords.map(|c| c.0));
    }
    for (l, pts) in fano.lines().iter().enumerate() {
        println!("line {l}: {pts:?}");
    }
    Ok(())
}
