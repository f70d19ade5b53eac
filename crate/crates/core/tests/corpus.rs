use std::collections::BTreeSet;

use symbreak_core::graph::{read_graph6_file, read_graph6_str};
use symbreak_core::harness::{enumerate_graphs, CorpusSpec};
use symbreak_core::symmetry::canonical_form;
use symbreak_core::{parse_graph6, to_graph6, Error, Graph};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn canonical_keys(graphs: &[Graph]) -> BTreeSet<String> {
    graphs.iter().map(|g| canonical_form(g).unwrap().graph6).collect()
}

#[test]
fn graph6_round_trips_on_reference_files() {
    for name in ["connected_le6.g6", "connected7.g6"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        for line in text.lines().filter(|l| !l.is_empty()) {
            assert_eq!(to_graph6(&parse_graph6(line).unwrap()), line);
        }
    }
}

#[test]
fn builtin_enumeration_matches_reference_classes() {
    let reference = read_graph6_file(data("connected_le6.g6")).unwrap();
    for n in 1..=6 {
        let ours = enumerate_graphs(n, true).unwrap();
        let theirs: Vec<Graph> = reference.iter().filter(|g| g.order() == n).cloned().collect();
        assert_eq!(ours.len(), theirs.len(), "order {n}");
        assert_eq!(canonical_keys(&ours), canonical_keys(&theirs), "order {n}");
    }
    let counts: Vec<usize> = (3..=6).map(|n| enumerate_graphs(n, true).unwrap().len()).collect();
    assert_eq!(counts, vec![2, 6, 21, 112]);
}

#[test]
fn order_three_is_path_and_triangle() {
    let keys: BTreeSet<String> = enumerate_graphs(3, true).unwrap().iter().map(to_graph6).collect();
    let expected: BTreeSet<String> = ["Bg", "Bw"]
        .iter()
        .map(|s| canonical_form(&parse_graph6(s).unwrap()).unwrap().graph6)
        .collect();
    assert_eq!(keys, expected);
}

#[test]
fn order_seven_file_is_complete_and_duplicate_free() {
    let graphs = read_graph6_file(data("connected7.g6")).unwrap();
    assert_eq!(graphs.len(), 853);
    assert!(graphs.iter().all(|g| g.order() == 7 && g.is_connected()));
    assert_eq!(canonical_keys(&graphs).len(), 853);
}

#[test]
fn file_corpus_keeps_file_order_and_filters() {
    let all = CorpusSpec::file(data("connected_le6.g6")).load().unwrap();
    assert_eq!(all.len(), 143);
    let mut spec = CorpusSpec::file(data("connected_le6.g6"));
    spec.min_order = 3;
    spec.exclude_cycles = true;
    let kept = spec.load().unwrap();
    assert_eq!(kept.len(), 141 - 4);
    assert!(kept.iter().all(|g| !g.is_cycle()));
}

#[test]
fn malformed_files_report_line_numbers() {
    let err = read_graph6_str("Bw\nC~\nB!\n").unwrap_err();
    assert!(matches!(err, Error::Format { .. } | Error::MalformedInput(_)), "{err:?}");
    assert!(err.to_string().contains("line 3"), "{err}");
    assert!(CorpusSpec::file("/nonexistent/corpus.g6").load().is_err());
}
