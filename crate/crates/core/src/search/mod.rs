//! Searches for large induced triangle-free vertex sets with no absolute
//! points. Every certificate returned here has already passed
//! [`verify_vertex_set`](crate::analysis::verify_vertex_set).

mod construct;
mod exact;
mod local;
mod state;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    verify_certificate, verify_vertex_set, Certificate, TriangleHypergraph, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::PolarityGraph;

pub use construct::{dlr_greedy, parsons_set};
pub use exact::{exact_max, ExactOutcome};

use state::{ConflictState, Instance};

/// Local-search moves per restart when the budget sets no step cap.
pub const DEFAULT_MOVES: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exact,
    Parsons,
    Seeded,
    Local,
    Greedy,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Exact => "exact",
            Strategy::Parsons => "parsons",
            Strategy::Seeded => "seeded",
            Strategy::Local => "local",
            Strategy::Greedy => "greedy",
        })
    }
}

/// Wall-clock and step limits. Steps are branch-and-bound nodes for the
/// exact solver and moves per restart for local search. Only step caps are
/// reproducible.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub seconds: Option<f64>,
    pub steps: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn steps(steps: u64) -> Self {
        Budget {
            seconds: None,
            steps: Some(steps),
        }
    }

    pub fn expired(&self, start: Instant) -> bool {
        self.seconds
            .is_some_and(|s| start.elapsed() >= Duration::from_secs_f64(s.max(0.0)))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub seed: u64,
    pub restarts: u64,
    pub budget: Budget,
    pub workers: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Certificate>,
}

impl SearchConfig {
    pub fn new(strategy: Strategy) -> Self {
        SearchConfig {
            strategy,
            seed: 0,
            restarts: 1,
            budget: Budget::unlimited(),
            workers: 1,
            initial: None,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn restarts(mut self, restarts: u64) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn initial(mut self, cert: Certificate) -> Self {
        self.initial = Some(cert);
        self
    }
}

/// Per-restart RNG stream: base seed plus restart index.
pub fn restart_rng(seed: u64, restart: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RestartRecord {
    pub restart: u64,
    pub size: usize,
    pub best: usize,
    pub elapsed: f64,
}

impl fmt::Display for RestartRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "restart={} size={} best={} elapsed={:.3}",
            self.restart, self.size, self.best, self.elapsed
        )
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub certificate: Certificate,
    /// Set by the exact strategy only.
    pub optimal: Option<bool>,
    pub records: Vec<RestartRecord>,
}

pub type Progress<'a> = &'a (dyn Fn(&RestartRecord) + Sync);

/// Runs the configured strategy.
pub fn run_search(
    g: &PolarityGraph,
    cfg: &SearchConfig,
    progress: Option<Progress<'_>>,
) -> Result<SearchOutcome> {
    let start = Instant::now();
    match cfg.strategy {
        Strategy::Exact => {
            let (certificate, optimal) = exact_search(g, cfg)?;
            let record = RestartRecord {
                restart: 0,
                size: certificate.size,
                best: certificate.size,
                elapsed: start.elapsed().as_secs_f64(),
            };
            if let Some(p) = progress {
                p(&record);
            }
            Ok(SearchOutcome {
                certificate,
                optimal: Some(optimal),
                records: vec![record],
            })
        }
        Strategy::Parsons => {
            let certificate = parsons_construction(g)?;
            let record = RestartRecord {
                restart: 0,
                size: certificate.size,
                best: certificate.size,
                elapsed: start.elapsed().as_secs_f64(),
            };
            if let Some(p) = progress {
                p(&record);
            }
            Ok(SearchOutcome {
                certificate,
                optimal: None,
                records: vec![record],
            })
        }
        Strategy::Seeded | Strategy::Local | Strategy::Greedy => {
            let h = TriangleHypergraph::from_graph(g);
            let inst = Instance::new(g, &h);
            let init = match &cfg.initial {
                Some(c) => Some(checked_init(g, c)?),
                None => None,
            };
            let run = |i: u64| -> Vec<u32> {
                let mut rng = restart_rng(cfg.seed, i);
                match cfg.strategy {
                    Strategy::Greedy => dlr_greedy(&h, &mut rng),
                    Strategy::Seeded => {
                        let built = construct::seeded_restart(g, &inst, &mut rng);
                        local::improve(built, &cfg.budget, DEFAULT_MOVES, start, &mut rng)
                            .sorted_members()
                    }
                    _ => {
                        let s = ConflictState::with_members(&inst, init.as_deref().unwrap_or(&[]));
                        local::improve(s, &cfg.budget, DEFAULT_MOVES, start, &mut rng)
                            .sorted_members()
                    }
                }
            };
            let (vertices, records) = run_restarts(cfg, start, progress, run);
            let certificate = emit(g, vertices, &cfg.strategy.to_string(), cfg.seed);
            Ok(SearchOutcome {
                certificate,
                optimal: None,
                records,
            })
        }
    }
}

// Runs restarts (in parallel when asked) and keeps the largest set, the
// lexicographically least among equals.
fn run_restarts<F>(
    cfg: &SearchConfig,
    start: Instant,
    progress: Option<Progress<'_>>,
    run: F,
) -> (Vec<u32>, Vec<RestartRecord>)
where
    F: Fn(u64) -> Vec<u32> + Sync,
{
    let best_size = AtomicUsize::new(0);
    let one = |i: u64| {
        let set = run(i);
        let best = best_size
            .fetch_max(set.len(), Ordering::SeqCst)
            .max(set.len());
        let record = RestartRecord {
            restart: i,
            size: set.len(),
            best,
            elapsed: start.elapsed().as_secs_f64(),
        };
        if let Some(p) = progress {
            p(&record);
        }
        (set, record)
    };
    let restarts = cfg.restarts.max(1);
    let results: Vec<(Vec<u32>, RestartRecord)> = if cfg.workers > 1 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
        {
            Ok(pool) => pool.install(|| (0..restarts).into_par_iter().map(one).collect()),
            Err(_) => (0..restarts).map(one).collect(),
        }
    } else {
        (0..restarts).map(one).collect()
    };
    let records = results.iter().map(|(_, r)| *r).collect();
    let best = results
        .into_iter()
        .map(|(s, _)| s)
        .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        .unwrap_or_default();
    (best, records)
}

fn checked_init(g: &PolarityGraph, cert: &Certificate) -> Result<Vec<u32>> {
    match verify_certificate(g, cert)? {
        Verdict::Accepted { .. } => Ok(cert.vertices.clone()),
        Verdict::Rejected(v) => Err(Error::MalformedCertificate(format!(
            "initial set is invalid: {v}"
        ))),
    }
}

// Verifies against the raw graph before anything leaves this module.
fn emit(g: &PolarityGraph, vertices: Vec<u32>, generator: &str, seed: u64) -> Certificate {
    let cert = Certificate::new(g, vertices, generator, seed);
    let verdict = verify_vertex_set(g, &cert.vertices).expect("search ids are in range");
    assert!(
        verdict.is_accepted(),
        "{generator} produced an invalid set: {verdict:?}"
    );
    cert
}

/// Exact maximum via branch-and-bound on the triangle hypergraph. The flag
/// is true when the search tree was exhausted within budget.
pub fn exact_search(g: &PolarityGraph, cfg: &SearchConfig) -> Result<(Certificate, bool)> {
    let h = TriangleHypergraph::from_graph(g);
    let out = exact_max(&h, &cfg.budget)?;
    Ok((emit(g, out.vertices, "exact", cfg.seed), out.optimal))
}

/// The Parsons set of ER_q (q odd) as a certificate.
pub fn parsons_construction(g: &PolarityGraph) -> Result<Certificate> {
    Ok(emit(g, parsons_set(g)?, "parsons", 0))
}

/// Neighbourhood-seeded construction without local improvement; best over
/// `cfg.restarts` restarts.
pub fn seeded_heuristic(g: &PolarityGraph, cfg: &SearchConfig) -> Certificate {
    let h = TriangleHypergraph::from_graph(g);
    let inst = Instance::new(g, &h);
    let (best, _) = run_restarts(cfg, Instant::now(), None, |i| {
        construct::seeded_restart(g, &inst, &mut restart_rng(cfg.seed, i)).sorted_members()
    });
    emit(g, best, "seeded", cfg.seed)
}

/// Local search from a verified certificate; the result is never smaller.
pub fn local_search(
    g: &PolarityGraph,
    init: &Certificate,
    cfg: &SearchConfig,
) -> Result<Certificate> {
    let cfg = cfg.clone().initial(init.clone());
    let out = run_search(
        g,
        &SearchConfig {
            strategy: Strategy::Local,
            ..cfg
        },
        None,
    )?;
    Ok(out.certificate)
}

/// Best of `cfg.restarts` random-order greedy independent sets.
pub fn greedy_search(g: &PolarityGraph, cfg: &SearchConfig) -> Certificate {
    let h = TriangleHypergraph::from_graph(g);
    let (best, _) = run_restarts(cfg, Instant::now(), None, |i| {
        dlr_greedy(&h, &mut restart_rng(cfg.seed, i))
    });
    emit(g, best, "greedy", cfg.seed)
}
