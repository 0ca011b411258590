use bandred::families::{cycle, grid, wheel};
use bandred::numbering::{
    bandwidth_of_numbering, count_edges_longer_than, vertex_isoperimetric_of_numbering,
};
use bandred::solve::{
    bandwidth_decision, exact_bandwidth, lower_bound, min_long_edges, min_long_edges_from,
    reduction_by_deletion, reduction_number, vertex_isoperimetric, Answer, Budget, Status, Witness,
};
use bandred::{Graph, Numbering};
use itertools::Itertools;
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|v| {
        let pairs: Vec<(usize, usize)> = (0..v).tuple_combinations().collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(v, edges).unwrap()
        })
    })
}

fn all_numberings(v: usize) -> impl Iterator<Item = Numbering> {
    (0..v)
        .permutations(v)
        .map(|order| Numbering::from_order(order).unwrap())
}

fn brute_min_long(g: &Graph, t: usize) -> usize {
    all_numberings(g.vertex_count())
        .map(|nu| count_edges_longer_than(g, &nu, t).unwrap())
        .min()
        .unwrap()
}

fn brute_bandwidth(g: &Graph) -> usize {
    all_numberings(g.vertex_count())
        .map(|nu| bandwidth_of_numbering(g, &nu).unwrap())
        .min()
        .unwrap()
}

fn brute_vi(g: &Graph) -> usize {
    all_numberings(g.vertex_count())
        .map(|nu| vertex_isoperimetric_of_numbering(g, &nu).unwrap())
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bandwidth_matches_enumeration(g in small_graph()) {
        let out = exact_bandwidth(&g, Budget::unlimited()).unwrap();
        prop_assert_eq!(out.status, Status::Optimal);
        prop_assert_eq!(out.value, brute_bandwidth(&g));
        prop_assert!(lower_bound(&g) <= out.value);
        let nu = out.witness.unwrap();
        prop_assert_eq!(bandwidth_of_numbering(&g, nu.numbering()).unwrap(), out.value);
    }

    #[test]
    fn long_edges_match_enumeration(g in small_graph(), t in 0usize..7) {
        let out = min_long_edges(&g, t, Budget::unlimited()).unwrap();
        prop_assert_eq!(out.status, Status::Optimal);
        prop_assert_eq!(out.value, brute_min_long(&g, t));
        if let Some(w) = out.witness {
            prop_assert_eq!(count_edges_longer_than(&g, w.numbering(), t).unwrap(), out.value);
        }
    }

    #[test]
    fn reduction_formulations_agree(g in small_graph(), k in 1usize..4) {
        let b = brute_bandwidth(&g);
        prop_assume!(g.edge_count() > 0 && k <= b);
        let a = reduction_number(&g, k, Budget::unlimited()).unwrap();
        let d = reduction_by_deletion(&g, k, Budget::unlimited()).unwrap();
        prop_assert_eq!(a.value, d.value);
        prop_assert_eq!(a.value, brute_min_long(&g, b - k));
        let Some(Witness::Deletion { edges, numbering }) = d.witness else {
            panic!("deletion witness expected");
        };
        let rest = g.without_edges(&edges).unwrap();
        prop_assert!(bandwidth_of_numbering(&rest, &numbering).unwrap() <= b - k);
    }

    #[test]
    fn vi_matches_enumeration(g in small_graph()) {
        let out = vertex_isoperimetric(&g, 20).unwrap();
        prop_assert_eq!(out.value, brute_vi(&g));
        prop_assert!(out.value <= brute_bandwidth(&g));
    }

    #[test]
    fn truncated_searches_never_claim_wrong_optima(g in small_graph(), nodes in 0u64..40) {
        let full = exact_bandwidth(&g, Budget::unlimited()).unwrap().value;
        let out = exact_bandwidth(&g, Budget::nodes(nodes)).unwrap();
        prop_assert!(out.lower_bound <= full && full <= out.value);
        if out.status == Status::Optimal {
            prop_assert_eq!(out.value, full);
        }
    }
}

#[test]
fn decision_answers() {
    let g = grid(3, 3).unwrap();
    assert!(matches!(
        bandwidth_decision(&g, 2, Budget::unlimited())
            .unwrap()
            .answer,
        Answer::No
    ));
    let Answer::Yes(nu) = bandwidth_decision(&g, 3, Budget::unlimited())
        .unwrap()
        .answer
    else {
        panic!("3 is attainable");
    };
    assert!(bandwidth_of_numbering(&g, &nu).unwrap() <= 3);
    let d = bandwidth_decision(&grid(5, 5).unwrap(), 4, Budget::nodes(1)).unwrap();
    assert!(matches!(d.answer, Answer::Unknown));
}

#[test]
fn results_are_deterministic() {
    let g = wheel(9).unwrap();
    let a = reduction_number(&g, 1, Budget::unlimited()).unwrap();
    let b = reduction_number(&g, 1, Budget::unlimited()).unwrap();
    assert_eq!(
        (a.value, a.status, a.nodes_expanded),
        (b.value, b.status, b.nodes_expanded)
    );
    assert_eq!(a.witness, b.witness);
}

#[test]
fn seeded_search_reports_upper_bound_on_exhaustion() {
    let g = grid(5, 5).unwrap();
    let seed = Numbering::identity(25);
    let out = min_long_edges_from(&g, 3, Budget::nodes(0), Some(&seed)).unwrap();
    assert_eq!(out.status, Status::UpperBound);
    assert_eq!(out.value, count_edges_longer_than(&g, &seed, 3).unwrap());
}

#[test]
fn larger_grids() {
    let out = exact_bandwidth(&grid(5, 4).unwrap(), Budget::unlimited()).unwrap();
    assert_eq!((out.value, out.status), (4, Status::Optimal));
    let out = reduction_number(&cycle(10).unwrap(), 1, Budget::unlimited()).unwrap();
    assert_eq!((out.value, out.status), (1, Status::Optimal));
}
