//! Certificates: serialize, reload, verify, and reject tampered sets with a
//! witness.
use polarity_graphs::analysis::{triangles, verify_certificate, Certificate, Verdict};
use polarity_graphs::search::parsons_construction;
use polarity_graphs::PolarityGraph;

fn main() -> polarity_graphs::Result<()> {
    let g = PolarityGraph::er(5)?;
    let cert = parsons_construction(&g)?;
    let json = cert.to_json();
    println!("{json}");

    let loaded = Certificate::from_json(&json)?;
    println!("reloaded: {:?}", verify_certificate(&g, &loaded)?);

    // Add an absolute point.
    let mut bad = loaded.clone();
    bad.vertices.push(g.absolute_points()[0]);
    bad.vertices.sort_unstable();
    bad.size += 1;
    report("with an absolute point", verify_certificate(&g, &bad)?);

    // Complete a triangle that has two vertices in the set.
    let tri = triangles(g.graph())
        .into_iter()
        .find(|t| t.iter().filter(|v| loaded.vertices.contains(v)).count() == 2)
        .expect("some triangle meets the set twice");
    let mut bad = loaded.clone();
    bad.vertices
        .push(*tri.iter().find(|v| !loaded.vertices.contains(v)).unwrap());
    bad.vertices.sort_unstable();
    bad.size += 1;
    report("with a completed triangle", verify_certificate(&g, &bad)?);

    // The descriptor must match the graph.
    let other = PolarityGraph::er(7)?;
    println!(
        "against ER_7: {}",
        verify_certificate(&other, &loaded).unwrap_err()
    );
    Ok(())
}

fn report(label: &str, verdict: Verdict) {
    match verdict {
        Verdict::Accepted { size } => println!("{label}: accepted ({size})"),
        Verdict::Rejected(v) => println!("{label}: rejected, {v}"),
    }
}
