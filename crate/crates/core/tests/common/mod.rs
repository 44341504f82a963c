#![allow(dead_code)]

use polarity_graphs::analysis::TriangleHypergraph;
use polarity_graphs::gf::is_prime;
use polarity_graphs::{Fe, PolarityGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Triangles by scanning all vertex triples.
pub fn brute_triangles(g: &PolarityGraph) -> Vec<[u32; 3]> {
    let n = g.num_vertices() as u32;
    let adj = |a, b| g.graph().has_edge(a, b);
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj(a, b) {
                continue;
            }
            for c in b + 1..n {
                if adj(a, c) && adj(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Largest subset of `verts` containing no edge, over all 2^|V| subsets.
pub fn brute_max_independent(verts: &[u32], edges: &[[u32; 3]]) -> usize {
    assert!(verts.len() <= 24);
    let pos = |v: u32| verts.iter().position(|&x| x == v).unwrap();
    let masks: Vec<u32> = edges
        .iter()
        .map(|e| e.iter().map(|&v| 1u32 << pos(v)).sum())
        .collect();
    (0u32..1 << verts.len())
        .filter(|&s| masks.iter().all(|&m| s & m != m))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Hypergraphs with at most 18 vertices: alternately pieces of the ER_7
/// triangle hypergraph grown from whole triangles, and uniform random ones.
pub fn small_hypergraphs(seed: u64, count: usize) -> Vec<TriangleHypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let big = TriangleHypergraph::from_graph(&PolarityGraph::er(7).unwrap());
    (0..count)
        .map(|trial| {
            if trial % 2 == 0 {
                let mut keep: Vec<u32> = Vec::new();
                let mut edges = big.edges().to_vec();
                edges.shuffle(&mut rng);
                for e in edges {
                    if keep.len() + 3 > 18 {
                        break;
                    }
                    for v in e {
                        if !keep.contains(&v) {
                            keep.push(v);
                        }
                    }
                }
                keep.sort_unstable();
                big.induced(&keep)
            } else {
                let m = rng.gen_range(3..=18u32);
                let verts: Vec<u32> = (0..m).map(|i| 3 * i + 1).collect();
                let n_edges = rng.gen_range(0..=2 * m as usize);
                let edges: Vec<[u32; 3]> = (0..n_edges)
                    .map(|_| {
                        let mut t: Vec<u32> = verts.choose_multiple(&mut rng, 3).copied().collect();
                        t.sort_unstable();
                        [t[0], t[1], t[2]]
                    })
                    .collect();
                TriangleHypergraph::new(3 * m as usize, verts, edges)
            }
        })
        .collect()
}

/// Checks a vertex set of ER_q from point coordinates alone: x is absolute
/// iff x·x = 0 and x ~ y iff x·y = 0. Prime q uses plain integers mod q.
pub fn coordinate_check(g: &PolarityGraph, vertices: &[u32]) -> Result<(), String> {
    let coords = g.plane().coords().ok_or("graph has no coordinates")?;
    let q = g.order();
    let f = coords.field();
    let pts: Vec<[Fe; 3]> = vertices.iter().map(|&v| coords.coords(v)).collect();
    let orth = |a: &[Fe; 3], b: &[Fe; 3]| {
        if is_prime(q) {
            (0..3).map(|i| a[i].0 as u64 * b[i].0 as u64).sum::<u64>() % q as u64 == 0
        } else {
            f.dot(a, b) == Fe::ZERO
        }
    };
    let mut seen = std::collections::BTreeSet::new();
    for p in &pts {
        if !seen.insert(p.map(|c| c.0)) {
            return Err(format!("repeated point {:?}", p.map(|c| c.0)));
        }
        if orth(p, p) {
            return Err(format!("absolute point {:?}", p.map(|c| c.0)));
        }
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if !orth(&pts[i], &pts[j]) {
                continue;
            }
            for k in j + 1..pts.len() {
                if orth(&pts[i], &pts[k]) && orth(&pts[j], &pts[k]) {
                    return Err(format!(
                        "triangle {:?}",
                        [vertices[i], vertices[j], vertices[k]]
                    ));
                }
            }
        }
    }
    Ok(())
}
