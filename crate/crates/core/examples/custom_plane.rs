//! Writes a plane and polarity to text, reads them back as a custom graph,
//! and shows what validation reports for a broken plane.
use polarity_graphs::io::{read_plane, read_polarity, write_plane, write_polarity};
use polarity_graphs::{IncidencePlane, PolarityGraph};

fn main() -> polarity_graphs::Result<()> {
    let er = PolarityGraph::er(3)?;
    let plane_text = write_plane(er.plane());
    let polarity_text = write_polarity(er.polarity(), er.order());
    println!("{plane_text}");

    let plane = read_plane(&plane_text)?;
    let theta = read_polarity(&polarity_text, &plane)?;
    let custom = PolarityGraph::new(plane, theta)?;
    println!("descriptor: {}", custom.descriptor());
    println!("same adjacency as ER_3: {}", custom.graph() == er.graph());

    // Two lines of the Fano plane with a point swapped.
    let mut lines = IncidencePlane::pg2(&polarity_graphs::Field::of_order(2)?)?
        .lines()
        .to_vec();
    let (a, b) = (lines[0][0], lines[1][0]);
    lines[0][0] = b;
    lines[1][0] = a;
    let broken = IncidencePlane::from_lines_unchecked(2, 7, lines);
    let report = broken.validate();
    println!("broken plane passes: {}", report.passed());
    for check in report.failures() {
        println!(
            "  failed: {} ({})",
            check.name,
            check.witness.as_deref().unwrap_or("-")
        );
    }
    Ok(())
}
