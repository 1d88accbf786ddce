mod common;

use std::collections::BTreeSet;

use common::{brute_circumference, brute_connectivity, brute_toughness, corpus, corpus_upto, is_simple_cycle};
use toughcycle::enumerate::{canonical_form, connected_graphs};
use toughcycle::encode_graph6;
use toughcycle::invariants::{all_longest_cycles, circumference, is_hamiltonian, toughness, vertex_connectivity};

#[test]
fn circumference_matches_cycle_enumeration() {
    for g in corpus_upto(7) {
        let (c, count) = brute_circumference(&g);
        let fast = circumference(&g);
        assert_eq!(fast.length, c, "{}", encode_graph6(&g));
        assert_eq!(is_hamiltonian(&g), g.n() >= 3 && c == g.n(), "{}", encode_graph6(&g));
        match &fast.witness {
            Some(w) => {
                assert!(is_simple_cycle(&g, w.vertices()));
                assert_eq!(w.len(), c);
                let all = all_longest_cycles(&g).unwrap();
                assert_eq!(all.len(), count, "{}", encode_graph6(&g));
                let distinct: BTreeSet<_> = all.iter().map(|c| c.canonical()).collect();
                assert_eq!(distinct.len(), count);
            }
            None => {
                assert_eq!(count, 0);
                assert!(all_longest_cycles(&g).is_err());
            }
        }
    }
}

#[test]
fn toughness_matches_subset_enumeration() {
    for g in corpus_upto(7) {
        let t = toughness(&g);
        assert_eq!(t.value(), brute_toughness(&g), "{}", encode_graph6(&g));
        if let (Some(v), Some(w)) = (t.value(), t.witness()) {
            let comps = g.component_count(w);
            assert_eq!(v, num_rational::Ratio::new(w.len() as u64, comps as u64));
        }
    }
}

#[test]
fn connectivity_matches_subset_enumeration() {
    for g in corpus_upto(7) {
        assert_eq!(vertex_connectivity(&g), brute_connectivity(&g), "{}", encode_graph6(&g));
    }
}

#[test]
fn enumerator_matches_reference_lists() {
    for n in 1..=7 {
        let ours: BTreeSet<_> = connected_graphs(n).iter().map(encode_graph6).collect();
        let reference: BTreeSet<_> = corpus(n).iter().map(|g| encode_graph6(&canonical_form(g))).collect();
        assert_eq!(ours, reference, "n = {n}");
    }
}

#[test]
fn known_connected_counts() {
    let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &count) in expected.iter().enumerate() {
        assert_eq!(corpus(i + 1).len(), count);
    }
    assert_eq!(connected_graphs(6).len(), 112);
}
