//! Branch-and-bound for the maximum independent set of a 3-uniform
//! hypergraph (at most 128 vertices).

use std::time::Instant;

use super::Budget;
use crate::analysis::TriangleHypergraph;
use crate::error::{Error, Result};

type Mask = u128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactOutcome {
    /// Sorted vertex ids (the hypergraph's own ids).
    pub vertices: Vec<u32>,
    /// The search tree was exhausted within budget.
    pub optimal: bool,
    pub nodes: u64,
}

struct Solver<'b> {
    edges: Vec<Mask>,
    edges_of: Vec<Vec<usize>>,
    best: Mask,
    best_size: u32,
    nodes: u64,
    aborted: bool,
    budget: &'b Budget,
    start: Instant,
}

fn bit(i: usize) -> Mask {
    1 << i
}

/// Largest vertex subset of `h` containing no hyperedge.
///
/// Branches on the candidate with the most live hyperedges (lowest index on
/// ties). The bound is `|included| + |candidates|` minus a greedy packing of
/// live hyperedges that are pairwise disjoint on their candidate vertices;
/// each packed edge forces at least one distinct deletion.
pub fn exact_max(h: &TriangleHypergraph, budget: &Budget) -> Result<ExactOutcome> {
    let verts = h.vertices();
    let m = verts.len();
    if m > Mask::BITS as usize {
        return Err(Error::TooLarge(m));
    }
    let mut local = vec![usize::MAX; h.id_bound()];
    for (i, &v) in verts.iter().enumerate() {
        local[v as usize] = i;
    }
    let edges: Vec<Mask> = h
        .edges()
        .iter()
        .map(|t| {
            t.iter()
                .map(|&v| bit(local[v as usize]))
                .fold(0, |a, b| a | b)
        })
        .collect();
    let mut edges_of = vec![Vec::new(); m];
    for (e, t) in h.edges().iter().enumerate() {
        for &v in t {
            edges_of[local[v as usize]].push(e);
        }
    }

    let mut solver = Solver {
        edges,
        edges_of,
        best: 0,
        best_size: 0,
        nodes: 0,
        aborted: false,
        budget,
        start: Instant::now(),
    };
    let all: Mask = if m == 128 { !0 } else { bit(m) - 1 };
    solver.seed_greedy(all);
    solver.branch(0, all);

    let vertices = (0..m)
        .filter(|&i| solver.best & bit(i) != 0)
        .map(|i| verts[i])
        .collect();
    Ok(ExactOutcome {
        vertices,
        optimal: !solver.aborted,
        nodes: solver.nodes,
    })
}

impl Solver<'_> {
    // Lowest-index-first greedy: a starting incumbent for pruning.
    fn seed_greedy(&mut self, all: Mask) {
        let mut set: Mask = 0;
        for i in 0..Mask::BITS as usize {
            if all & bit(i) == 0 {
                continue;
            }
            let closes = self.edges_of[i]
                .iter()
                .any(|&e| (self.edges[e] & !bit(i)) & !set == 0);
            if !closes {
                set |= bit(i);
            }
        }
        self.best = set;
        self.best_size = set.count_ones();
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if let Some(cap) = self.budget.steps {
            if self.nodes >= cap {
                self.aborted = true;
            }
        }
        if self.nodes.is_multiple_of(1024) && self.budget.expired(self.start) {
            self.aborted = true;
        }
        self.aborted
    }

    fn branch(&mut self, inc: Mask, cand: Mask) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let live = inc | cand;
        let mut degree = [0u32; Mask::BITS as usize];
        let mut packed: Mask = 0;
        let mut packing = 0;
        let mut any_live = false;
        for &e in &self.edges {
            if e & !live != 0 {
                continue;
            }
            any_live = true;
            let free = e & cand;
            let mut bits = free;
            while bits != 0 {
                degree[bits.trailing_zeros() as usize] += 1;
                bits &= bits - 1;
            }
            if free & packed == 0 {
                packed |= free;
                packing += 1;
            }
        }
        let size = live.count_ones();
        if !any_live {
            if size > self.best_size {
                self.best = live;
                self.best_size = size;
            }
            return;
        }
        if size - packing <= self.best_size {
            return;
        }

        let mut pick = usize::MAX;
        let mut pick_deg = 0;
        let mut bits = cand;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            if degree[i] > pick_deg {
                pick = i;
                pick_deg = degree[i];
            }
            bits &= bits - 1;
        }
        debug_assert!(pick != usize::MAX);

        // exclude
        self.branch(inc, cand & !bit(pick));

        // include, then drop candidates that would now close a hyperedge
        let inc2 = inc | bit(pick);
        let mut cand2 = cand & !bit(pick);
        for &e in &self.edges_of[pick] {
            let others = self.edges[e] & !bit(pick);
            let chosen = others & inc2;
            if chosen.count_ones() == 1 {
                cand2 &= !(others & !chosen);
            }
        }
        self.branch(inc2, cand2);
    }
}
