mod common;

use std::collections::BTreeSet;

use beflow::canon::{brute_force_form, canonical_form};
use beflow::generate::generate_cubic;
use beflow::graph::{bridges, cut_degree_mask, import_graph6, parse_edge_list, to_graph6};
use common::{connected_cubic, cubic, is_connected_without, relabelled};
use proptest::prelude::*;

#[test]
fn degree_sum_and_cut_symmetry_on_small_corpus() {
    for n in [2, 4, 6, 8] {
        for g in generate_cubic(n, true).unwrap() {
            assert_eq!(2 * g.m(), 3 * g.n());
            let full = (1u64 << n) - 1;
            for mask in 0..=full {
                assert_eq!(cut_degree_mask(&g, mask), cut_degree_mask(&g, full ^ mask));
            }
        }
    }
}

#[test]
fn generated_classes_are_pairwise_non_isomorphic() {
    for n in [2, 4, 6, 8] {
        let graphs = generate_cubic(n, true).unwrap();
        let forms: BTreeSet<_> = graphs.iter().map(brute_force_form).collect();
        assert_eq!(forms.len(), graphs.len(), "n = {n}");
    }
}

#[test]
fn bridges_match_edge_deletion_on_corpus() {
    for n in [2, 4, 6, 8, 10] {
        for g in generate_cubic(n, true).unwrap() {
            let slow: Vec<usize> = (0..g.m()).filter(|&e| !is_connected_without(&g, e)).collect();
            assert_eq!(bridges(&g), slow, "{g:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelling_keeps_the_canonical_form((g, perm) in relabelled(2, 16)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn edge_list_round_trip(g in cubic(2, 30)) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_on_simple_graphs(g in cubic(4, 30)) {
        match to_graph6(&g) {
            Some(s) => {
                let back = import_graph6(&s).unwrap();
                prop_assert_eq!(canonical_form(&back), canonical_form(&g));
            }
            None => prop_assert!(!g.is_simple()),
        }
    }

    #[test]
    fn bridges_match_edge_deletion(g in connected_cubic(2, 40)) {
        let slow: Vec<usize> = (0..g.m()).filter(|&e| !is_connected_without(&g, e)).collect();
        prop_assert_eq!(bridges(&g), slow);
    }
}
