use std::collections::HashMap;

use crate::graph::{PolarityGraph, SimpleGraph};

pub type Triple = [u32; 3];

/// All triangles of `g` as sorted triples in lexicographic order.
///
/// For each vertex `v` and each higher neighbour `u`, the common neighbours
/// above `u` close a triangle. In a polarity graph `N(v)` induces at most a
/// matching, so each vertex costs O(q) list intersections of length q+1.
pub fn triangles(g: &SimpleGraph) -> Vec<Triple> {
    let mut out = Vec::new();
    for v in 0..g.num_vertices() as u32 {
        let nv = g.neighbors(v);
        for &u in nv.iter().filter(|&&u| u > v) {
            for w in sorted_intersection(nv, g.neighbors(u)) {
                if w > u {
                    out.push([v, u, w]);
                }
            }
        }
    }
    // emitted in (v, u, w) order already
    debug_assert!(out.windows(2).all(|t| t[0] < t[1]));
    out
}

pub(crate) fn sorted_intersection<'a>(
    a: &'a [u32],
    b: &'a [u32],
) -> impl Iterator<Item = u32> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let x = a[i];
                    i += 1;
                    j += 1;
                    return Some(x);
                }
            }
        }
        None
    })
}

/// 3-uniform hypergraph on a vertex subset of a graph. Vertex ids are the
/// graph's ids; hyperedges are sorted triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleHypergraph {
    n: usize,
    vertices: Vec<u32>,
    edges: Vec<Triple>,
    degree: Vec<u32>,
}

impl TriangleHypergraph {
    /// H(Π,θ): the non-absolute vertices with the triangles of G as edges.
    pub fn from_graph(g: &PolarityGraph) -> Self {
        let vertices = (0..g.num_vertices() as u32)
            .filter(|&v| !g.is_absolute(v))
            .collect();
        let edges = triangles(g.graph())
            .into_iter()
            .filter(|t| t.iter().all(|&v| !g.is_absolute(v)))
            .collect();
        Self::new(g.num_vertices(), vertices, edges)
    }

    /// `n` bounds the vertex ids. Edges must lie inside `vertices`.
    pub fn new(n: usize, mut vertices: Vec<u32>, edges: Vec<Triple>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<Triple> = edges
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut degree = vec![0; n];
        for t in &edges {
            for &v in t {
                degree[v as usize] += 1;
            }
        }
        TriangleHypergraph {
            n,
            vertices,
            edges,
            degree,
        }
    }

    /// Sub-hypergraph induced on `keep` (edges entirely inside it).
    pub fn induced(&self, keep: &[u32]) -> Self {
        let mut mask = vec![false; self.n];
        for &v in keep {
            mask[v as usize] = true;
        }
        let vertices = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| mask[v as usize])
            .collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|t| t.iter().all(|&v| mask[v as usize]))
            .collect();
        Self::new(self.n, vertices, edges)
    }

    pub fn id_bound(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.degree[v as usize]
    }

    pub fn max_degree(&self) -> u32 {
        self.vertices
            .iter()
            .map(|&v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Largest number of hyperedges sharing a pair of vertices.
    pub fn max_codegree(&self) -> u32 {
        let mut pairs: HashMap<(u32, u32), u32> = HashMap::new();
        for t in &self.edges {
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                *pairs.entry((a, b)).or_default() += 1;
            }
        }
        pairs.values().copied().max().unwrap_or(0)
    }

    /// For each vertex, the pairs completing a hyperedge with it.
    pub fn partners(&self) -> Vec<Vec<[u32; 2]>> {
        let mut out = vec![Vec::new(); self.n];
        for &[a, b, c] in &self.edges {
            out[a as usize].push([b, c]);
            out[b as usize].push([a, c]);
            out[c as usize].push([a, b]);
        }
        out
    }

    /// True if no hyperedge lies entirely inside `set`.
    pub fn is_independent(&self, set: &[u32]) -> bool {
        let mut mask = vec![false; self.n];
        for &v in set {
            mask[v as usize] = true;
        }
        !self
            .edges
            .iter()
            .any(|t| t.iter().all(|&v| mask[v as usize]))
    }
}
