use std::collections::BTreeSet;

use itertools::Itertools;

use resnum::canonical::canonical_form;
use resnum::enumerate::{
    brute_force_form, enumerate_graphs, enumerate_graphs_ordered, naive_enumeration_oracle,
    EnumConstraints, Exploration,
};
use resnum::families::{classify_res, Res3Catalog};
use resnum::invariants::{clique_number, girth, Girth};
use resnum::resolve::{
    dimension_report, resolving_number, resolving_number_oracle,
};
use resnum::Graph;

fn connected(n: usize) -> Vec<Graph> {
    enumerate_graphs(&EnumConstraints::connected(n)).unwrap().collect()
}

fn all_connected_to_7() -> Vec<Graph> {
    (1..=7).flat_map(connected).collect()
}

#[test]
fn matches_naive_oracle_up_to_six() {
    for n in 1..=6 {
        let ours: BTreeSet<_> = connected(n).iter().map(brute_force_form).collect();
        assert_eq!(ours, naive_enumeration_oracle(n).unwrap(), "n = {n}");
    }
}

#[test]
fn order_seven_is_stable_under_exploration_order() {
    let c = EnumConstraints::connected(7);
    let forward: Vec<Graph> = enumerate_graphs_ordered(&c, Exploration::Forward).unwrap().collect();
    let reverse: Vec<Graph> = enumerate_graphs_ordered(&c, Exploration::Reverse).unwrap().collect();
    assert_eq!(forward.len(), 853);
    assert_eq!(forward, reverse);
    let forms: BTreeSet<_> = forward.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(forms.len(), 853);
}

#[test]
fn canonical_equality_agrees_with_permutation_oracle() {
    // Random relabelings of every class up to order 6, compared pairwise
    // against the all-permutations minimum.
    let mut graphs = Vec::new();
    for n in 1..=6 {
        for (i, g) in connected(n).into_iter().enumerate() {
            let perm: Vec<usize> = (0..n).map(|v| (v * 5 + i) % n).collect();
            let perm = if perm.iter().all_unique() { perm } else { (0..n).rev().collect() };
            graphs.push(g.permute(&perm).unwrap());
            graphs.push(g);
        }
    }
    let ours: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
    let oracle: Vec<_> = graphs.iter().map(brute_force_form).collect();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            assert_eq!(ours[i] == ours[j], oracle[i] == oracle[j]);
        }
    }
}

#[test]
fn constraint_modes_respect_constraints() {
    let cases = [
        EnumConstraints::connected(8).with_max_degree(3).with_min_girth(4),
        EnumConstraints::connected(9).with_max_degree(3).with_min_girth(5),
        EnumConstraints::trees(11),
        EnumConstraints {
            connected_only: false,
            ..EnumConstraints::connected(6).with_max_degree(2)
        },
    ];
    for c in cases {
        let graphs: Vec<Graph> = enumerate_graphs(&c).unwrap().collect();
        assert!(!graphs.is_empty());
        let forms: BTreeSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), graphs.len());
        for g in &graphs {
            assert!(c.admits(g), "{c:?}");
        }
    }
    for g in enumerate_graphs(&EnumConstraints::trees(12)).unwrap() {
        assert_eq!(g.size(), 11);
        assert_eq!(girth(&g), Girth::Infinite);
    }
    // Disjoint unions of paths and cycles on six vertices.
    let c = EnumConstraints {
        connected_only: false,
        ..EnumConstraints::connected(6).with_max_degree(2)
    };
    assert_eq!(enumerate_graphs(&c).unwrap().count(), 19);
}

#[test]
fn formula_matches_subset_oracle_on_all_small_graphs() {
    for g in all_connected_to_7() {
        assert_eq!(resolving_number(&g).unwrap().res, resolving_number_oracle(&g).unwrap());
    }
}

#[test]
fn dimension_chain_on_all_small_graphs() {
    for g in all_connected_to_7() {
        let report = dimension_report(&g).unwrap();
        assert!(report.dim >= 1 && report.dim <= report.updim);
    }
}

fn has_cycle_of_length(g: &Graph, k: usize) -> bool {
    (0..g.order()).combinations(k).any(|set| {
        let (first, rest) = set.split_first().unwrap();
        rest.iter().permutations(k - 1).any(|order| {
            let mut walk = vec![*first];
            walk.extend(order.into_iter().copied());
            walk.push(*first);
            walk.windows(2).all(|w| g.has_edge(w[0], w[1]))
        })
    })
}

#[test]
fn invariants_match_brute_force() {
    for g in all_connected_to_7() {
        let n = g.order();
        let omega = (1..=n)
            .rev()
            .find(|&k| {
                (0..n)
                    .combinations(k)
                    .any(|s| s.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b)))
            })
            .unwrap();
        assert_eq!(clique_number(&g), omega);
        let shortest = (3..=n).find(|&k| has_cycle_of_length(&g, k));
        assert_eq!(girth(&g), shortest.map_or(Girth::Infinite, Girth::Finite));
        assert_eq!(omega >= 3, girth(&g) == Girth::Finite(3));
    }
}

#[test]
fn classification_never_contradicts_structure() {
    let catalog = Res3Catalog::embedded().unwrap();
    for g in all_connected_to_7() {
        classify_res(&g, Some(&catalog)).unwrap();
    }
}

#[test]
fn rebuilding_the_catalog_is_deterministic() {
    let a = Res3Catalog::build().unwrap();
    let b = Res3Catalog::build().unwrap();
    assert_eq!(a, b);
    assert_eq!(a, Res3Catalog::embedded().unwrap());
}
