use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LoopedView;

/// One evaluation of the expander mixing inequality
/// `|e(X,Y) - d|X||Y|/n| <= λ sqrt(|X||Y|)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MixingCheck {
    /// Ordered pairs `(x, y)` in `X × Y` that are adjacent; a loop at `v`
    /// counts once when `v ∈ X ∩ Y`.
    pub edges: u64,
    pub expected: f64,
    pub bound: f64,
    /// `bound - |edges - expected|`; the inequality holds iff this is ≥ 0.
    pub slack: f64,
}

impl MixingCheck {
    pub fn holds(&self) -> bool {
        // absorbs rounding in the float side of an exact integer count
        self.slack >= -1e-9 * self.bound.max(1.0)
    }
}

/// Ordered-pair edge count between two vertex sets of the looped view.
pub fn edge_count(view: &LoopedView<'_>, x: &[u32], y: &[u32]) -> u64 {
    let mut in_y = vec![false; view.num_vertices()];
    for &v in y {
        in_y[v as usize] = true;
    }
    let mut count = 0u64;
    for &u in dedup(x).iter() {
        count += view
            .graph()
            .neighbors(u)
            .iter()
            .filter(|&&w| in_y[w as usize])
            .count() as u64;
        if view.has_loop(u) && in_y[u as usize] {
            count += 1;
        }
    }
    count
}

/// Checks the mixing inequality with the given `lambda` on a regular view.
pub fn eml_check(view: &LoopedView<'_>, x: &[u32], y: &[u32], lambda: f64) -> Result<MixingCheck> {
    let d = view.regular_degree().ok_or(Error::NotRegular)?;
    let n = view.num_vertices();
    let (xs, ys) = (dedup(x), dedup(y));
    for &v in xs.iter().chain(&ys) {
        if v as usize >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let edges = edge_count(view, &xs, &ys);
    let (sx, sy) = (xs.len() as f64, ys.len() as f64);
    let expected = if n == 0 {
        0.0
    } else {
        d as f64 * sx * sy / n as f64
    };
    let bound = lambda * (sx * sy).sqrt();
    Ok(MixingCheck {
        edges,
        expected,
        bound,
        slack: bound - (edges as f64 - expected).abs(),
    })
}

fn dedup(s: &[u32]) -> Vec<u32> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{PolarityGraph, SimpleGraph};

    #[test]
    fn whole_vertex_set_is_tight() {
        let g = PolarityGraph::er(3).unwrap();
        let all: Vec<u32> = (0..13).collect();
        let c = eml_check(&g.looped(), &all, &all, 3f64.sqrt()).unwrap();
        assert_eq!(c.edges, 52);
        assert!((c.expected - 52.0).abs() < 1e-12);
        assert!(c.holds());
    }

    #[test]
    fn empty_sets() {
        let g = PolarityGraph::er(3).unwrap();
        let c = eml_check(&g.looped(), &[], &[], 3f64.sqrt()).unwrap();
        assert_eq!(c.edges, 0);
        assert!(c.holds());
    }

    #[test]
    fn loop_counts_once() {
        let g = PolarityGraph::er(3).unwrap();
        let a = g.absolute_points()[0];
        assert_eq!(edge_count(&g.looped(), &[a], &[a]), 1);
        let b = g.neighbors(a)[0];
        // both orders of the pair are counted
        assert_eq!(edge_count(&g.looped(), &[a, b], &[a, b]), 3);
    }

    #[test]
    fn irregular_view_rejected() {
        let path = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]);
        let loops = vec![false; 3];
        let view = LoopedView::new(&path, &loops);
        assert!(matches!(
            eml_check(&view, &[0], &[1], 1.0),
            Err(Error::NotRegular)
        ));
    }
}
