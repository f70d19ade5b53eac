//! Line, endline, subdivision and middle graphs.
//!
//! Original vertices keep their source indices `0..n`. Edge-vertices are
//! appended in the source's (lexicographic) edge order and pendants in source
//! vertex order, so every output numbering is deterministic.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

fn require_edges(g: &Graph, what: &str) -> Result<()> {
    if g.size() == 0 {
        return Err(Error::MalformedInput(format!("{what} of an edgeless graph")));
    }
    Ok(())
}

fn edge_labels(g: &Graph) -> impl Iterator<Item = VertexLabel> + '_ {
    g.edges().iter().map(|&(a, b)| VertexLabel::EdgeVertex(a, b))
}

/// Pairs of edge indices that share an endpoint.
fn adjacent_edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 0..g.order() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("neighbour implies edge"))
            .collect();
        for (k, &e) in incident.iter().enumerate() {
            for &f in &incident[k + 1..] {
                pairs.push((e, f));
            }
        }
    }
    pairs
}

/// L(G): one vertex per edge, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    require_edges(g, "line graph")?;
    Graph::with_labels(edge_labels(g).collect(), adjacent_edge_pairs(g))
}

/// G⁺: every vertex `i` receives a pendant neighbour `Pendant(i)` at index `n + i`.
pub fn endline_graph(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let labels = (0..n)
        .map(VertexLabel::Original)
        .chain((0..n).map(VertexLabel::Pendant))
        .collect();
    let edges = g.edges().iter().copied().chain((0..n).map(|i| (i, n + i)));
    Graph::with_labels(labels, edges)
}

/// S(G): every edge `{i, j}` replaced by the path `i - EdgeVertex(i, j) - j`.
pub fn subdivision_graph(g: &Graph) -> Result<Graph> {
    require_edges(g, "subdivision graph")?;
    let n = g.order();
    let labels = (0..n).map(VertexLabel::Original).chain(edge_labels(g)).collect();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(k, &(a, b))| [(a, n + k), (b, n + k)]);
    Graph::with_labels(labels, edges)
}

/// M(G): S(G) plus the line-graph adjacencies among edge-vertices.
pub fn middle_graph(g: &Graph) -> Result<Graph> {
    require_edges(g, "middle graph")?;
    let n = g.order();
    let labels = (0..n).map(VertexLabel::Original).chain(edge_labels(g)).collect();
    let incidences = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(k, &(a, b))| [(a, n + k), (b, n + k)]);
    let meets = adjacent_edge_pairs(g).into_iter().map(|(e, f)| (n + e, n + f));
    Graph::with_labels(labels, incidences.chain(meets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraphSpec};

    fn p3() -> Graph {
        named_graph(NamedGraphSpec::Path(3)).unwrap()
    }

    #[test]
    fn line_graph_of_p3_is_an_edge() {
        let l = line_graph(&p3()).unwrap();
        assert_eq!((l.order(), l.size()), (2, 1));
        assert_eq!(l.label(0), VertexLabel::EdgeVertex(0, 1));
    }

    #[test]
    fn line_graph_of_c4_is_2_regular() {
        let l = line_graph(&named_graph(NamedGraphSpec::Cycle(4)).unwrap()).unwrap();
        assert!(l.is_cycle() && l.order() == 4);
    }

    #[test]
    fn endline_counts() {
        let c3p = endline_graph(&named_graph(NamedGraphSpec::Cycle(3)).unwrap()).unwrap();
        assert_eq!((c3p.order(), c3p.size()), (6, 6));
        assert_eq!(c3p.degree_sequence(), vec![3, 3, 3, 1, 1, 1]);
        let c6p = endline_graph(&named_graph(NamedGraphSpec::Cycle(6)).unwrap()).unwrap();
        assert_eq!((c6p.order(), c6p.size()), (12, 12));
        let k4p = endline_graph(&named_graph(NamedGraphSpec::Complete(4)).unwrap()).unwrap();
        assert_eq!((k4p.order(), k4p.size()), (8, 10));
        for v in 4..8 {
            assert_eq!(k4p.degree(v), 1);
            assert_eq!(k4p.label(v), VertexLabel::Pendant(v - 4));
        }
    }

    #[test]
    fn subdivision_counts() {
        let spider = subdivision_graph(&named_graph(NamedGraphSpec::CompleteBipartite(1, 3)).unwrap()).unwrap();
        assert_eq!((spider.order(), spider.size()), (7, 6));
        let sk4 = subdivision_graph(&named_graph(NamedGraphSpec::Complete(4)).unwrap()).unwrap();
        assert_eq!((sk4.order(), sk4.size()), (10, 12));
        let (u, w) = sk4.bipartition().unwrap();
        assert_eq!(u, (0..4).collect::<Vec<_>>());
        assert_eq!(w, (4..10).collect::<Vec<_>>());
    }

    #[test]
    fn middle_graph_of_p3() {
        let m = middle_graph(&p3()).unwrap();
        assert_eq!((m.order(), m.size()), (5, 5));
        // vertices a,b,c = 0,1,2; e1 = {0,1} = 3, e2 = {1,2} = 4
        for (x, y) in [(3, 4), (0, 3), (1, 3), (1, 4), (2, 4)] {
            assert!(m.has_edge(x, y));
        }
    }

    #[test]
    fn edgeless_inputs_are_rejected() {
        let k1 = Graph::from_edge_list(1, []).unwrap();
        assert!(line_graph(&k1).is_err());
        assert!(subdivision_graph(&k1).is_err());
        assert!(middle_graph(&k1).is_err());
        assert_eq!(endline_graph(&k1).unwrap().size(), 1);
    }
}
