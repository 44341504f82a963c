use std::collections::VecDeque;

use serde::Serialize;

use super::triangles::sorted_intersection;
use crate::error::{Error, Result};
use crate::graph::{PolarityGraph, SimpleGraph};

/// Absolute points, their non-absolute neighbours, and everything else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParsonsPartition {
    pub absolute: Vec<u32>,
    pub shadow: Vec<u32>,
    pub rest: Vec<u32>,
}

pub fn parsons_partition(g: &PolarityGraph) -> ParsonsPartition {
    let mut part = ParsonsPartition {
        absolute: Vec::new(),
        shadow: Vec::new(),
        rest: Vec::new(),
    };
    for v in 0..g.num_vertices() as u32 {
        if g.is_absolute(v) {
            part.absolute.push(v);
        } else if g.neighbors(v).iter().any(|&u| g.is_absolute(u)) {
            part.shadow.push(v);
        } else {
            part.rest.push(v);
        }
    }
    part
}

/// Neighbours of a non-absolute vertex split into absolute (`a`) and
/// non-absolute (`b`) parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodSplit {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl NeighborhoodSplit {
    /// Largest degree inside the subgraph induced by `b`.
    pub fn b_max_degree(&self, g: &SimpleGraph) -> usize {
        self.b
            .iter()
            .map(|&u| sorted_intersection(g.neighbors(u), &self.b).count())
            .max()
            .unwrap_or(0)
    }

    /// Edges of the subgraph induced by `b`.
    pub fn b_edges(&self, g: &SimpleGraph) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for &u in &self.b {
            for w in sorted_intersection(g.neighbors(u), &self.b) {
                if w > u {
                    out.push((u, w));
                }
            }
        }
        out
    }
}

pub fn neighborhood_split(g: &PolarityGraph, p: u32) -> Result<NeighborhoodSplit> {
    if p as usize >= g.num_vertices() {
        return Err(Error::VertexOutOfRange {
            vertex: p,
            n: g.num_vertices(),
        });
    }
    if g.is_absolute(p) {
        return Err(Error::AbsoluteVertex(p));
    }
    let (a, b) = g.neighbors(p).iter().partition(|&&u| g.is_absolute(u));
    Ok(NeighborhoodSplit { a, b })
}

/// Returns `None` if no two distinct vertices share two neighbours, otherwise
/// a 4-cycle `[u, x, v, y]`.
pub fn c4_witness(g: &SimpleGraph) -> Option<[u32; 4]> {
    let n = g.num_vertices() as u32;
    for u in 0..n {
        for v in u + 1..n {
            let mut common = sorted_intersection(g.neighbors(u), g.neighbors(v));
            if let (Some(x), Some(y)) = (common.next(), common.next()) {
                return Some([u, x, v, y]);
            }
        }
    }
    None
}

pub fn is_c4_free(g: &SimpleGraph) -> bool {
    c4_witness(g).is_none()
}

/// Exact diameter by a BFS from every vertex.
pub fn diameter(g: &SimpleGraph) -> Result<usize> {
    let n = g.num_vertices();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut best = 0;
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.push_back(s as u32);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize];
            best = best.max(d);
            for &u in g.neighbors(v) {
                if dist[u as usize] == usize::MAX {
                    dist[u as usize] = d + 1;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        if reached < n {
            return Err(Error::Disconnected);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_graphs() {
        let path = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(diameter(&path).unwrap(), 2);
        assert!(is_c4_free(&path));

        let k4 = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let w = c4_witness(&k4).unwrap();
        for i in 0..4 {
            assert!(k4.has_edge(w[i], w[(i + 1) % 4]));
        }

        let split = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]);
        assert!(matches!(diameter(&split), Err(Error::Disconnected)));
    }

    #[test]
    fn er3_structure() {
        let g = PolarityGraph::er(3).unwrap();
        assert_eq!(diameter(g.graph()).unwrap(), 2);
        assert!(is_c4_free(g.graph()));
        let part = parsons_partition(&g);
        assert_eq!(part.absolute.len(), 4);
        assert_eq!(part.shadow.len(), 6);
        for p in 0..13 {
            if g.is_absolute(p) {
                assert!(matches!(
                    neighborhood_split(&g, p),
                    Err(Error::AbsoluteVertex(_))
                ));
            } else {
                let s = neighborhood_split(&g, p).unwrap();
                assert_eq!(s.a.len() + s.b.len(), 4);
                assert!(s.b_max_degree(g.graph()) <= 1);
            }
        }
    }
}
