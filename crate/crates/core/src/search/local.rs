//! Hill climbing over triangle-free vertex sets with swap plateaus and
//! perturbation restarts.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use super::state::{ConflictState, Instance};
use super::Budget;

/// Consecutive swap moves without a new best before perturbing.
const PLATEAU_LIMIT: u64 = 400;
const TABU_TENURE: u64 = 7;

/// Improves a valid (violation-free) set. Moves:
///
/// - add a vertex that closes no triangle;
/// - swap: add a vertex that closes exactly one triangle `{u, a, b}` and
///   delete `a` or `b`;
/// - after a plateau, force a few random vertices in from the current or best
///   set, deleting one endpoint of every triangle they close.
///
/// The returned set is the best one seen, so never smaller than `init`.
pub(crate) fn improve<'i, R: Rng>(
    init: ConflictState<'i>,
    budget: &Budget,
    default_steps: u64,
    start: Instant,
    rng: &mut R,
) -> ConflictState<'i> {
    assert_eq!(init.violations(), 0, "local search needs a valid start");
    let inst: &Instance = init.instance();
    let n = inst.n();
    let steps = budget.steps.unwrap_or(default_steps);

    let mut best = init.clone();
    let mut cur = init;
    let mut tabu_until = vec![0u64; n];
    let mut plateau = 0u64;
    let mut free = Vec::new();
    let mut tight = Vec::new();

    for mv in 1..=steps {
        if mv % 256 == 0 && budget.expired(start) {
            break;
        }
        free.clear();
        tight.clear();
        for v in 0..n as u32 {
            if !inst.allowed[v as usize] || cur.contains(v) {
                continue;
            }
            match cur.conflicts(v) {
                0 => free.push(v),
                1 if tabu_until[v as usize] < mv => tight.push(v),
                _ => {}
            }
        }

        if let Some(&v) = free.choose(rng) {
            cur.insert(v);
            if cur.len() > best.len() {
                best = cur.clone();
                plateau = 0;
            }
            continue;
        }

        if plateau < PLATEAU_LIMIT {
            if let Some(&u) = tight.choose(rng) {
                let [a, b] = cur.closed_pairs(u).next().expect("one closed pair");
                let out = if rng.gen_bool(0.5) { a } else { b };
                cur.remove(out);
                tabu_until[out as usize] = mv + TABU_TENURE + rng.gen_range(0..=n as u64 / 16);
                cur.insert(u);
                plateau += 1;
                continue;
            }
        }

        // perturb
        if cur.len() + 1 < best.len() {
            cur = best.clone();
        }
        let kicks = if rng.gen_bool(0.5) { 1 } else { 2 };
        for _ in 0..kicks {
            let outside: Vec<u32> = (0..n as u32)
                .filter(|&v| inst.allowed[v as usize] && !cur.contains(v))
                .collect();
            let Some(&x) = outside.choose(rng) else { break };
            let closed: Vec<[u32; 2]> = cur.closed_pairs(x).collect();
            for [a, b] in closed {
                if cur.contains(a) && cur.contains(b) {
                    let out = if rng.gen_bool(0.5) { a } else { b };
                    cur.remove(out);
                    tabu_until[out as usize] = mv + TABU_TENURE;
                }
            }
            cur.insert(x);
        }
        debug_assert_eq!(cur.violations(), 0);
        plateau = 0;
    }
    best
}
