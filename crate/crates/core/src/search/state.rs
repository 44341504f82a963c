use crate::analysis::TriangleHypergraph;
use crate::graph::PolarityGraph;

/// Per-vertex partner pairs of the triangle hypergraph plus the vertices a
/// set may contain (the non-absolute ones).
pub(crate) struct Instance {
    pub partners: Vec<Vec<[u32; 2]>>,
    pub allowed: Vec<bool>,
}

impl Instance {
    pub fn new(g: &PolarityGraph, h: &TriangleHypergraph) -> Self {
        Instance {
            partners: h.partners(),
            allowed: (0..g.num_vertices() as u32)
                .map(|v| !g.is_absolute(v))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.allowed.len()
    }
}

/// A vertex set with incremental triangle bookkeeping.
///
/// `conflicts[x]` is the number of hyperedges `{x, a, b}` with `a, b` in the
/// set. For a member this counts violated triangles through it; for a
/// non-member it is the number of triangles adding it would complete. Every
/// vertex lies in at most (q+1)/2 hyperedges, so add/remove are O(q).
#[derive(Clone)]
pub(crate) struct ConflictState<'i> {
    inst: &'i Instance,
    member: Vec<bool>,
    conflicts: Vec<u32>,
    members: Vec<u32>,
    position: Vec<usize>,
    violations: usize,
}

impl<'i> ConflictState<'i> {
    pub fn new(inst: &'i Instance) -> Self {
        let n = inst.n();
        ConflictState {
            inst,
            member: vec![false; n],
            conflicts: vec![0; n],
            members: Vec::new(),
            position: vec![usize::MAX; n],
            violations: 0,
        }
    }

    pub fn with_members(inst: &'i Instance, vertices: &[u32]) -> Self {
        let mut s = Self::new(inst);
        for &v in vertices {
            if !s.contains(v) {
                s.insert(v);
            }
        }
        s
    }

    pub fn instance(&self) -> &'i Instance {
        self.inst
    }

    pub fn contains(&self, v: u32) -> bool {
        self.member[v as usize]
    }

    pub fn conflicts(&self, v: u32) -> u32 {
        self.conflicts[v as usize]
    }

    pub fn violations(&self) -> usize {
        self.violations
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn sorted_members(&self) -> Vec<u32> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }

    pub fn insert(&mut self, v: u32) {
        debug_assert!(!self.contains(v));
        for &[a, b] in &self.inst.partners[v as usize] {
            let (ia, ib) = (self.member[a as usize], self.member[b as usize]);
            if ia && ib {
                self.violations += 1;
            }
            if ia {
                self.conflicts[b as usize] += 1;
            }
            if ib {
                self.conflicts[a as usize] += 1;
            }
        }
        self.member[v as usize] = true;
        self.position[v as usize] = self.members.len();
        self.members.push(v);
    }

    pub fn remove(&mut self, v: u32) {
        debug_assert!(self.contains(v));
        for &[a, b] in &self.inst.partners[v as usize] {
            let (ia, ib) = (self.member[a as usize], self.member[b as usize]);
            if ia && ib {
                self.violations -= 1;
            }
            if ia {
                self.conflicts[b as usize] -= 1;
            }
            if ib {
                self.conflicts[a as usize] -= 1;
            }
        }
        self.member[v as usize] = false;
        let pos = self.position[v as usize];
        let last = self.members.pop().unwrap();
        if last != v {
            self.members[pos] = last;
            self.position[last as usize] = pos;
        }
        self.position[v as usize] = usize::MAX;
    }

    /// Partner pairs of `v` currently inside the set.
    pub fn closed_pairs(&self, v: u32) -> impl Iterator<Item = [u32; 2]> + '_ {
        self.inst.partners[v as usize]
            .iter()
            .copied()
            .filter(|&[a, b]| self.member[a as usize] && self.member[b as usize])
    }
}
