//! Eigenvalues of the looped polarity graph: q+1 once, the rest ±√q.
use polarity_graphs::spectral::{adjacency_spectrum, spectral_gap_check};
use polarity_graphs::PolarityGraph;

fn main() -> polarity_graphs::Result<()> {
    let graphs = [
        PolarityGraph::er(3)?,
        PolarityGraph::er(5)?,
        PolarityGraph::er(8)?,
        PolarityGraph::unitary(4)?,
        PolarityGraph::unitary(9)?,
    ];
    for g in &graphs {
        let view = g.looped();
        let s = adjacency_spectrum(&view)?;
        let check = spectral_gap_check(&view, &s, g.order(), 1e-6);
        let mults: Vec<String> = s
            .multiplicities()
            .iter()
            .map(|(v, m)| format!("{v:.6}^{m}"))
            .collect();
        println!(
            "{}: sweeps={} residual={:.1e} spectrum {{{}}} pass={}",
            g.descriptor(),
            s.sweeps,
            s.residual,
            mults.join(", "),
            check.pass
        );
    }
    Ok(())
}
