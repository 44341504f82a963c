use polarity_graphs::analysis::{
    triangle_free_bound, verify_certificate, Certificate, TriangleHypergraph,
};
use polarity_graphs::search::{
    dlr_greedy, exact_max, exact_search, greedy_search, local_search, parsons_construction,
    restart_rng, run_search, seeded_heuristic, Budget, SearchConfig, Strategy,
};
use polarity_graphs::{Error, PolarityGraph};

fn accepted(g: &PolarityGraph, c: &Certificate) -> bool {
    verify_certificate(g, c).unwrap().is_accepted()
}

#[test]
fn exact_values_for_small_planes() {
    for (q, want) in [(2, 3), (3, 6), (5, 16)] {
        let g = PolarityGraph::er(q).unwrap();
        let (cert, optimal) = exact_search(&g, &SearchConfig::new(Strategy::Exact)).unwrap();
        assert!(optimal);
        assert_eq!(cert.size, want, "ER_{q}");
        assert!(accepted(&g, &cert));
        assert!(cert.size as u64 <= triangle_free_bound(q).floor);
    }
}

#[test]
fn exact_budget_and_size_limits() {
    let g = PolarityGraph::er(7).unwrap();
    let out = exact_max(&TriangleHypergraph::from_graph(&g), &Budget::steps(50)).unwrap();
    assert!(!out.optimal);
    assert!(TriangleHypergraph::from_graph(&g).is_independent(&out.vertices));
    let big = PolarityGraph::er(13).unwrap();
    assert!(matches!(
        exact_max(&TriangleHypergraph::from_graph(&big), &Budget::unlimited()),
        Err(Error::TooLarge(_))
    ));
}

#[test]
fn parsons_sizes_and_preconditions() {
    for (q, want) in [(3, 6), (5, 10), (7, 28), (9, 36), (11, 66), (13, 78)] {
        let g = PolarityGraph::er(q).unwrap();
        let cert = parsons_construction(&g).unwrap();
        assert_eq!(cert.size, want);
        assert!(accepted(&g, &cert));
    }
    assert!(matches!(
        parsons_construction(&PolarityGraph::er(8).unwrap()),
        Err(Error::StrategyMismatch { .. })
    ));
    assert!(matches!(
        parsons_construction(&PolarityGraph::unitary(9).unwrap()),
        Err(Error::StrategyMismatch { .. })
    ));
}

#[test]
fn local_search_never_shrinks() {
    let g = PolarityGraph::er(5).unwrap();
    let cfg = SearchConfig::new(Strategy::Local)
        .seed(3)
        .budget(Budget::steps(2_000));
    let e5 = parsons_construction(&g).unwrap();
    let out = local_search(&g, &e5, &cfg).unwrap();
    assert!(out.size >= 10 && accepted(&g, &out));

    let (opt, _) = exact_search(&g, &SearchConfig::new(Strategy::Exact)).unwrap();
    assert_eq!(local_search(&g, &opt, &cfg).unwrap().size, 16);
}

#[test]
fn local_search_from_empty_on_er3() {
    let g = PolarityGraph::er(3).unwrap();
    let empty = Certificate::new(&g, Vec::new(), "empty", 0);
    let cfg = SearchConfig::new(Strategy::Local)
        .seed(0)
        .budget(Budget::steps(1_000));
    let out = local_search(&g, &empty, &cfg).unwrap();
    assert!(out.size >= 4);
    assert_eq!(out.size, 6, "regression anchor");
}

#[test]
fn local_search_rejects_invalid_start() {
    let g = PolarityGraph::er(5).unwrap();
    let bad = Certificate::new(&g, vec![g.absolute_points()[0]], "bad", 0);
    assert!(local_search(&g, &bad, &SearchConfig::new(Strategy::Local)).is_err());
}

#[test]
fn greedy_outputs_are_independent() {
    let g = PolarityGraph::er(9).unwrap();
    let h = TriangleHypergraph::from_graph(&g);
    for i in 0..20 {
        let set = dlr_greedy(&h, &mut restart_rng(11, i));
        assert!(h.is_independent(&set));
        assert!(polarity_graphs::analysis::verify_vertex_set(&g, &set)
            .unwrap()
            .is_accepted());
    }
    let empty = TriangleHypergraph::new(8, vec![1, 3, 5], Vec::new());
    let mut all = dlr_greedy(&empty, &mut restart_rng(0, 0));
    all.sort_unstable();
    assert_eq!(all, vec![1, 3, 5]);
}

#[test]
fn greedy_er7_best_of_100_floor() {
    let g = PolarityGraph::er(7).unwrap();
    let cert = greedy_search(
        &g,
        &SearchConfig::new(Strategy::Greedy).seed(0).restarts(100),
    );
    assert!(accepted(&g, &cert));
    assert!(cert.size >= 29, "regression floor, got {}", cert.size);
}

#[test]
fn seeded_q7_seed1_anchor() {
    let g = PolarityGraph::er(7).unwrap();
    let out = run_search(
        &g,
        &SearchConfig::new(Strategy::Seeded).seed(1).restarts(1),
        None,
    )
    .unwrap();
    assert_eq!(out.certificate.size, 30, "regression anchor");
    assert!(accepted(&g, &out.certificate));
    let built = seeded_heuristic(&g, &SearchConfig::new(Strategy::Seeded).seed(1).restarts(4));
    assert!(accepted(&g, &built));
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let g = PolarityGraph::er(9).unwrap();
    let base = SearchConfig::new(Strategy::Seeded)
        .seed(5)
        .restarts(6)
        .budget(Budget::steps(3_000));
    let one = run_search(&g, &base.clone().workers(1), None)
        .unwrap()
        .certificate;
    let four = run_search(&g, &base.clone().workers(4), None)
        .unwrap()
        .certificate;
    let again = run_search(&g, &base.workers(1), None).unwrap().certificate;
    assert_eq!(one, four);
    assert_eq!(one.to_json(), again.to_json());
}

#[test]
fn every_strategy_emits_verified_certificates() {
    for g in [
        PolarityGraph::er(4).unwrap(),
        PolarityGraph::er(8).unwrap(),
        PolarityGraph::unitary(9).unwrap(),
    ] {
        for strategy in [Strategy::Seeded, Strategy::Local, Strategy::Greedy] {
            let cfg = SearchConfig::new(strategy)
                .seed(9)
                .restarts(3)
                .budget(Budget::steps(2_000));
            let out = run_search(&g, &cfg, None).unwrap();
            assert!(
                accepted(&g, &out.certificate),
                "{strategy} on {}",
                g.descriptor()
            );
            assert_eq!(out.records.len(), 3);
        }
    }
}
