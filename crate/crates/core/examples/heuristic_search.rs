//! Randomized search: greedy, seeded construction, then local search, with
//! progress lines for each restart.
use polarity_graphs::search::{
    greedy_search, run_search, seeded_heuristic, Budget, RestartRecord, SearchConfig, Strategy,
};
use polarity_graphs::PolarityGraph;

fn main() -> polarity_graphs::Result<()> {
    let q: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);
    let g = PolarityGraph::er(q)?;

    let greedy = greedy_search(
        &g,
        &SearchConfig::new(Strategy::Greedy).seed(1).restarts(100),
    );
    let built = seeded_heuristic(&g, &SearchConfig::new(Strategy::Seeded).seed(1).restarts(8));
    println!(
        "ER_{q}: greedy best of 100 = {}, seeded construction best of 8 = {}",
        greedy.size, built.size
    );

    let cfg = SearchConfig::new(Strategy::Seeded)
        .seed(1)
        .restarts(8)
        .workers(4)
        .budget(Budget {
            seconds: Some(30.0),
            steps: Some(20_000),
        });
    let log = |r: &RestartRecord| println!("  {r}");
    let out = run_search(&g, &cfg, Some(&log))?;
    println!("seeded + local search: size {}", out.certificate.size);
    Ok(())
}
