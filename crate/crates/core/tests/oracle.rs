//! Independent brute-force oracles: automorphisms by filtering all `n!`
//! bijections, invariants by enumerating every colouring in lexicographic
//! order. Nothing here uses the library's search code.

use std::collections::BTreeSet;

use symbreak_core::graph::read_graph6_file;
use symbreak_core::harness::enumerate_graphs;
use symbreak_core::invariants::compute;
use symbreak_core::symmetry::automorphism_group;
use symbreak_core::{Error, Graph, InvariantKind, Limits};

#[path = "support/naive.rs"]
mod naive;

use naive::{flat, naive_automorphisms, naive_least, naive_value, Domain};

fn corpus_le6() -> Vec<Graph> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/connected_le6.g6");
    read_graph6_file(path).unwrap()
}

#[test]
fn automorphism_groups_match_filter_of_all_bijections() {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=6 {
        graphs.extend(enumerate_graphs(n, false).unwrap());
    }
    assert_eq!(graphs.len(), 1 + 2 + 4 + 11 + 34 + 156);
    for g in &graphs {
        let fast: BTreeSet<Vec<usize>> = automorphism_group(g)
            .unwrap()
            .elements()
            .iter()
            .map(|p| p.to_vec())
            .collect();
        assert_eq!(fast, naive_automorphisms(g), "{:?}", g.edges());
    }
}

#[test]
fn six_invariants_match_unpruned_enumeration() {
    let limits = Limits::default();
    let graphs: Vec<Graph> = corpus_le6().into_iter().filter(|g| g.order() <= 5).collect();
    assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21);
    for g in &graphs {
        for kind in InvariantKind::ALL {
            let on_vertices = matches!(
                kind,
                InvariantKind::Chromatic
                    | InvariantKind::Distinguishing
                    | InvariantKind::DistinguishingChromatic
            );
            if !on_vertices && g.size() == 0 {
                continue;
            }
            let expected = naive_value(kind, g);
            match (compute(kind, g, &limits), expected) {
                (Ok(v), Some((value, colors))) => {
                    assert_eq!(v.value, value, "{kind} of {:?}", g.edges());
                    assert!(v.certified);
                    assert_eq!(flat(&v.witness), colors, "{kind} witness of {:?}", g.edges());
                }
                (Err(Error::Undefined(_)), None) => {}
                (got, want) => panic!("{kind} of {:?}: engine {got:?}, oracle {want:?}", g.edges()),
            }
        }
    }
}

#[test]
fn star_sharpness_matches_oracle_for_small_m() {
    use symbreak_core::transforms::subdivision_graph;
    use symbreak_core::{named_graph, NamedGraphSpec};
    let limits = Limits::default();
    for m in 2..=5 {
        let s = subdivision_graph(&named_graph(NamedGraphSpec::CompleteBipartite(1, m)).unwrap()).unwrap();
        let (naive, _) = naive_least(&s, Domain::Vertices, false, true).unwrap();
        let fast = compute(InvariantKind::Distinguishing, &s, &limits).unwrap();
        assert_eq!(fast.value, naive, "m = {m}");
        let root = (1..).find(|r: &u32| r * r >= m as u32).unwrap();
        assert_eq!(naive, root, "m = {m}");
    }
}
