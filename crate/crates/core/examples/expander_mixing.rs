//! Edge counts between random vertex sets against the expander mixing bound.
use polarity_graphs::analysis::eml_check;
use polarity_graphs::PolarityGraph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> polarity_graphs::Result<()> {
    let g = PolarityGraph::er(9)?;
    let view = g.looped();
    let n = g.num_vertices();
    let lambda = 3.0;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tightest = f64::INFINITY;
    for trial in 0..10 {
        let size = rng.gen_range(1..n);
        let x: Vec<u32> = sample(&mut rng, n, size)
            .into_iter()
            .map(|v| v as u32)
            .collect();
        let size = rng.gen_range(1..n);
        let y: Vec<u32> = sample(&mut rng, n, size)
            .into_iter()
            .map(|v| v as u32)
            .collect();
        let c = eml_check(&view, &x, &y, lambda)?;
        tightest = tightest.min(c.slack / c.bound);
        println!(
            "trial {trial}: |X|={:>2} |Y|={:>2} e(X,Y)={:>4} expected={:>7.2} bound={:>6.2} holds={}",
            x.len(),
            y.len(),
            c.edges,
            c.expected,
            c.bound,
            c.holds()
        );
    }
    println!("smallest relative slack: {tightest:.3}");
    Ok(())
}
