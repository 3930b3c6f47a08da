use proptest::prelude::*;

use irreg_core::enumeration::{enumerate_with, EnumerationOptions, EnumerationSpec};
use irreg_core::formats::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use irreg_core::generators;
use irreg_core::measures::{
    bidegreed_identities, bound_report, complete_split_deviation, complete_split_edges,
    complete_split_omega, complete_split_variance,
};
use irreg_core::rational::{from_usize, int};
use irreg_core::verifier::{run_suite_with, GraphPopulation, RunOptions};
use irreg_core::{canonical_code, measure_set, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn measures_ignore_labelling((g, perm) in graph_and_perm(10)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(measure_set(&g), measure_set(&h));
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn variance_from_zagreb(g in graph(12)) {
        let ms = measure_set(&g);
        let (n, m) = (from_usize(g.n()), from_usize(g.edge_count()));
        prop_assert_eq!(&ms.var * &n * &n, &n * &ms.m1 - int(4) * &m * &m);
    }

    #[test]
    fn twice_variance_below_deviation(g in graph(12)) {
        let ms = measure_set(&g);
        if ms.s > int(0) {
            prop_assert!(int(2) * &ms.var < ms.s);
            let omega = ms.omega.unwrap();
            prop_assert!(omega > int(0) && omega < irreg_core::rational::ratio(1, 2));
        } else {
            prop_assert_eq!(ms.var, int(0));
            prop_assert!(ms.omega.is_none());
        }
    }

    #[test]
    fn standard_bounds_hold(g in graph(10)) {
        for r in bound_report(&g) {
            prop_assert!(!r.applicable() || r.holds, "{} fails on {}", r.bound_id, to_graph6(&g));
        }
    }

    #[test]
    fn bidegreed_identities_hold(g in graph(10)) {
        let class = g.classify();
        if class.is_connected && class.is_bidegreed {
            let id = bidegreed_identities(&g).unwrap();
            prop_assert!(id.s_equals_ird && id.var_closed_matches && id.variance_by_deviation_holds);
        } else {
            prop_assert!(bidegreed_identities(&g).is_err());
        }
    }

    #[test]
    fn text_formats_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_a_fixed_point(g in graph(9)) {
        let code = canonical_code(&g).unwrap();
        prop_assert_eq!(canonical_code(&code.to_graph()).unwrap(), code);
    }

    #[test]
    fn complement_swaps_edges(g in graph(10)) {
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn complete_split_closed_forms(n in 2usize..60, k_seed in any::<usize>()) {
        let k = 1 + k_seed % (n - 1);
        let g = generators::complete_split(n, k).unwrap();
        let ms = measure_set(&g);
        prop_assert_eq!(g.edge_count(), complete_split_edges(n, k));
        prop_assert_eq!(ms.s.clone(), complete_split_deviation(n, k));
        prop_assert_eq!(ms.var, complete_split_variance(n, k));
        if k < n - 1 {
            prop_assert_eq!(ms.omega.unwrap(), complete_split_omega(n, k));
        }
        prop_assert_eq!(g.classify().is_complete_split, Some(k));
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let serial = EnumerationOptions {
        workers: Some(1),
        ..Default::default()
    };
    let wide = EnumerationOptions {
        workers: Some(4),
        ..Default::default()
    };
    let a = GraphPopulation::connected_up_to(6, &serial).unwrap();
    let b = GraphPopulation::connected_up_to(6, &wide).unwrap();
    assert_eq!(a.graphs, b.graphs);
    let run = |pop: &GraphPopulation, workers| {
        let opts = RunOptions {
            workers: Some(workers),
            include_timings: false,
        };
        run_suite_with(pop, "all", &opts).unwrap().to_json()
    };
    assert_eq!(run(&a, 1), run(&b, 3));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let spec = EnumerationSpec::connected(6).irregular();
    let opts = EnumerationOptions {
        cache_dir: Some(dir.path().to_path_buf()),
        ..Default::default()
    };
    let fresh = enumerate_with(&spec, &opts).unwrap();
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let cached = enumerate_with(&spec, &opts).unwrap();
    assert_eq!(fresh, cached);
    assert_eq!(
        fresh,
        enumerate_with(&spec, &EnumerationOptions::default()).unwrap()
    );
}

#[test]
fn stale_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let spec = EnumerationSpec::trees(7);
    let cache = irreg_core::enumeration::EnumerationCache::new(dir.path());
    std::fs::write(cache.path_for(&spec), "# irreg-core 0.0.0 other\nA_\n").unwrap();
    assert!(cache.load(&spec).is_none());
    let opts = EnumerationOptions {
        cache_dir: Some(dir.path().to_path_buf()),
        ..Default::default()
    };
    assert_eq!(enumerate_with(&spec, &opts).unwrap().len(), 11);
    assert_eq!(cache.load(&spec).unwrap().len(), 11);
}
