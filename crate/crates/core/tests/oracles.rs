mod common;

use common::{brute_max_independent, brute_triangles, small_hypergraphs};
use nalgebra::{DMatrix, SymmetricEigen};
use polarity_graphs::analysis::{triangles, verify_vertex_set, TriangleHypergraph, Verdict};
use polarity_graphs::search::{exact_max, Budget};
use polarity_graphs::spectral::adjacency_spectrum;
use polarity_graphs::PolarityGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn triangle_enumeration_matches_triple_scan() {
    for g in [2, 3, 4, 5]
        .map(|q| PolarityGraph::er(q).unwrap())
        .into_iter()
        .chain([PolarityGraph::unitary(4).unwrap()])
    {
        assert_eq!(
            triangles(g.graph()),
            brute_triangles(&g),
            "{}",
            g.descriptor()
        );
    }
}

#[test]
fn exact_max_matches_enumeration() {
    for (trial, h) in small_hypergraphs(2024, 50).into_iter().enumerate() {
        assert!(h.vertices().len() <= 18);
        let out = exact_max(&h, &Budget::unlimited()).unwrap();
        assert!(out.optimal);
        assert!(h.is_independent(&out.vertices), "trial {trial}");
        assert_eq!(
            out.vertices.len(),
            brute_max_independent(h.vertices(), h.edges()),
            "trial {trial}: {} vertices, {} edges",
            h.vertices().len(),
            h.edges().len()
        );
    }
}

#[test]
fn exact_max_without_edges_keeps_everything() {
    let h = TriangleHypergraph::new(10, vec![0, 2, 4, 6, 8], Vec::new());
    assert_eq!(
        exact_max(&h, &Budget::unlimited()).unwrap().vertices,
        vec![0, 2, 4, 6, 8]
    );
}

#[test]
fn spectrum_matches_nalgebra() {
    for g in [
        PolarityGraph::er(2).unwrap(),
        PolarityGraph::er(3).unwrap(),
        PolarityGraph::unitary(4).unwrap(),
    ] {
        let view = g.looped();
        let n = g.num_vertices();
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                f64::from(u8::from(g.is_absolute(i as u32)))
            } else {
                f64::from(u8::from(g.graph().has_edge(i as u32, j as u32)))
            }
        });
        let mut want: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        want.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let got = adjacency_spectrum(&view).unwrap().eigenvalues;
        assert_eq!(got.len(), want.len());
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() < 1e-8, "{}: {a} vs {b}", g.descriptor());
        }
    }
}

#[test]
fn verifier_matches_brute_force() {
    let g = PolarityGraph::er(5).unwrap();
    let tris = brute_triangles(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = g.num_vertices() as u32;
    for _ in 0..300 {
        let size = rng.gen_range(0..16);
        let mut set: Vec<u32> = (0..n)
            .collect::<Vec<_>>()
            .choose_multiple(&mut rng, size)
            .copied()
            .collect();
        set.sort_unstable();
        let bad_abs = set.iter().any(|&v| g.is_absolute(v));
        let bad_tri = tris.iter().any(|t| t.iter().all(|v| set.contains(v)));
        let verdict = verify_vertex_set(&g, &set).unwrap();
        assert_eq!(verdict.is_accepted(), !bad_abs && !bad_tri, "{set:?}");
        if let Verdict::Accepted { size: s } = verdict {
            assert_eq!(s, set.len());
        }
    }
}
