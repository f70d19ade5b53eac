//! Colour refinement to the coarsest equitable partition.

use crate::graph::Graph;

/// Ranks `keys` densely (0, 1, ...) in sorted key order.
fn rank<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let ranks = keys
        .iter()
        .map(|k| sorted.binary_search(k).expect("key present") as u32)
        .collect();
    (ranks, sorted.len())
}

/// Refines `initial` until every vertex of a class sees the same multiset of
/// neighbour classes. The result depends only on the isomorphism type of
/// `(g, initial)`, never on vertex numbering: classes are ranked by sorted
/// signatures.
pub(crate) fn refine(g: &Graph, initial: &[u32]) -> Vec<u32> {
    let (mut colors, mut classes) = rank(initial);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..g.order())
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let (next, count) = rank(&signatures);
        if count == classes {
            return next;
        }
        colors = next;
        classes = count;
    }
}

/// Splits `v` off its class, placing it before the rest of the class.
pub(crate) fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 })
        .collect()
}

pub(crate) fn class_count(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraphSpec};

    #[test]
    fn path_refines_by_distance_from_ends() {
        let p5 = named_graph(NamedGraphSpec::Path(5)).unwrap();
        let c = refine(&p5, &[0; 5]);
        assert_eq!(c[0], c[4]);
        assert_eq!(c[1], c[3]);
        assert_eq!(class_count(&c), 3);
    }

    #[test]
    fn regular_graph_stays_one_class() {
        let k33 = named_graph(NamedGraphSpec::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(class_count(&refine(&k33, &[0; 6])), 1);
        let split = refine(&k33, &individualize(&[0; 6], 0));
        // {0}, the rest of its side, the other side.
        assert_eq!(class_count(&split), 3);
    }
}
