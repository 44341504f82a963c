use rand::seq::SliceRandom;
use rand::Rng;

use super::state::{ConflictState, Instance};
use crate::analysis::{parsons_partition, TriangleHypergraph};
use crate::error::{Error, Result};
use crate::graph::{Construction, PolarityGraph};

/// The triangle-free half of the Parsons partition of ER_q, q odd: the
/// vertices with no absolute neighbour when q ≡ 1 (mod 4), the non-absolute
/// neighbours of absolute points when q ≡ 3 (mod 4).
pub fn parsons_set(g: &PolarityGraph) -> Result<Vec<u32>> {
    let q = g.order();
    if g.descriptor().construction != Construction::Er {
        return Err(Error::StrategyMismatch {
            strategy: "parsons".into(),
            reason: format!("needs ER_q, got {}", g.descriptor()),
        });
    }
    if q.is_multiple_of(2) {
        return Err(Error::StrategyMismatch {
            strategy: "parsons".into(),
            reason: format!("q = {q} is even"),
        });
    }
    let part = parsons_partition(g);
    Ok(if q % 4 == 1 { part.rest } else { part.shadow })
}

/// Random-order greedy independent set of the hypergraph: each vertex is
/// admitted unless it closes a hyperedge with those already admitted.
pub fn dlr_greedy<R: Rng>(h: &TriangleHypergraph, rng: &mut R) -> Vec<u32> {
    let partners = h.partners();
    let mut inside = vec![false; h.id_bound()];
    let mut order = h.vertices().to_vec();
    order.shuffle(rng);
    let mut out = Vec::new();
    for v in order {
        let closes = partners[v as usize]
            .iter()
            .any(|&[a, b]| inside[a as usize] && inside[b as usize]);
        if !closes {
            inside[v as usize] = true;
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

/// One restart of the neighbourhood-seeded construction.
///
/// Draws an independent set `I` of q non-absolute vertices in random greedy
/// order. Each `v ∈ I` has a neighbourhood that induces a matching; every
/// matching edge `{a, b}` is a triangle with `v`, and one of `a`, `b` (the
/// one closing fewer triangles, lower id on ties) is admitted. Triangles
/// that remain are repaired by deleting a vertex of maximum conflict count
/// (lowest id on ties) until none are left.
pub(crate) fn seeded_restart<'i, R: Rng>(
    g: &PolarityGraph,
    inst: &'i Instance,
    rng: &mut R,
) -> ConflictState<'i> {
    let q = g.order() as usize;
    let mut pool: Vec<u32> = (0..g.num_vertices() as u32)
        .filter(|&v| inst.allowed[v as usize])
        .collect();
    pool.shuffle(rng);
    let mut hubs: Vec<u32> = Vec::with_capacity(q);
    let mut blocked = vec![false; g.num_vertices()];
    for v in pool {
        if hubs.len() == q {
            break;
        }
        if blocked[v as usize] {
            continue;
        }
        hubs.push(v);
        blocked[v as usize] = true;
        for &u in g.neighbors(v) {
            blocked[u as usize] = true;
        }
    }

    let mut state = ConflictState::new(inst);
    for &v in &hubs {
        let nbrs = g.neighbors(v);
        for &a in nbrs {
            for &b in nbrs.iter().filter(|&&b| b > a) {
                if !g.graph().has_edge(a, b) {
                    continue;
                }
                if !inst.allowed[a as usize] || !inst.allowed[b as usize] {
                    continue;
                }
                if state.contains(a) || state.contains(b) {
                    continue;
                }
                let pick = if state.conflicts(b) < state.conflicts(a) {
                    b
                } else {
                    a
                };
                state.insert(pick);
            }
        }
    }
    repair(&mut state);
    state
}

/// Deletes max-conflict members (lowest id on ties) until no triangle is left.
pub(crate) fn repair(state: &mut ConflictState<'_>) {
    while state.violations() > 0 {
        let worst = state
            .members()
            .iter()
            .copied()
            .max_by(|&x, &y| state.conflicts(x).cmp(&state.conflicts(y)).then(y.cmp(&x)))
            .expect("violations imply members");
        state.remove(worst);
    }
}
