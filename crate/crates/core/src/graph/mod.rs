//! Simple undirected graphs with provenance-labelled vertices.

mod graph6;
mod named;

pub use graph6::{parse_graph6, read_graph6_file, read_graph6_str, to_graph6};
pub use named::{named_graph, NamedGraphSpec};

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where a vertex came from when a graph is produced by a transformation.
///
/// Labels are metadata only: adjacency, automorphisms and isomorphism never
/// look at them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexLabel {
    /// Vertex `i` of the source graph.
    Original(usize),
    /// The source edge `{i, j}` with `i < j`.
    EdgeVertex(usize, usize),
    /// The pendant vertex attached to source vertex `i`.
    Pendant(usize),
}

impl VertexLabel {
    pub fn is_original(&self) -> bool {
        matches!(self, VertexLabel::Original(_))
    }
}

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `Original(0..n)`.
    ///
    /// Duplicate pairs (in either orientation) collapse to one edge.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::with_labels((0..n).map(VertexLabel::Original).collect(), pairs)
    }

    /// Builds a graph with explicit vertex labels; the order is `labels.len()`.
    pub fn with_labels<I>(labels: Vec<VertexLabel>, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::MalformedInput("a graph needs at least one vertex".into()));
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::MalformedInput("vertex labels must be pairwise distinct".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::MalformedInput(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::MalformedInput(format!("loop at vertex {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(Graph {
            labels,
            adjacency,
            edges,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    /// Index of the vertex carrying `label`, if any.
    pub fn vertex_with_label(&self, label: VertexLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Map from label to vertex index.
    pub fn label_index(&self) -> HashMap<VertexLabel, usize> {
        self.labels.iter().enumerate().map(|(i, &l)| (l, i)).collect()
    }

    /// Sorted neighbours of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Open neighbourhood N(v), checked.
    pub fn neighborhood(&self, v: usize) -> Result<&[usize]> {
        self.adjacency.get(v).map(Vec::as_slice).ok_or_else(|| {
            Error::MalformedInput(format!("vertex {v} out of range for order {}", self.order()))
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Position of edge `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The two colour classes of a proper 2-colouring, or `None` when an odd
    /// cycle exists. Each component is coloured starting from its smallest
    /// vertex on the first side.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].expect("queued vertices are coloured");
                for &w in &self.adjacency[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Some((left, right))
    }

    /// True iff no two distinct vertices have the same open neighbourhood.
    pub fn is_irreducible(&self) -> bool {
        let distinct: BTreeSet<&Vec<usize>> = self.adjacency.iter().collect();
        distinct.len() == self.order()
    }

    /// True iff the graph is a cycle `C_n` with `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3
            && self.adjacency.iter().all(|row| row.len() == 2)
            && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * (n - 1) / 2
    }

    /// The graph obtained by moving vertex `v` to position `image[v]`.
    /// Labels travel with their vertices.
    pub fn relabel(&self, image: &[usize]) -> Result<Graph> {
        let n = self.order();
        if image.len() != n {
            return Err(Error::Contract(format!(
                "relabelling of length {} applied to a graph of order {n}",
                image.len()
            )));
        }
        let mut labels = vec![None; n];
        for (v, &w) in image.iter().enumerate() {
            if w >= n || labels[w].is_some() {
                return Err(Error::Contract("relabelling is not a bijection".into()));
            }
            labels[w] = Some(self.labels[v]);
        }
        let labels = labels.into_iter().map(|l| l.expect("bijection")).collect();
        Graph::with_labels(labels, self.edges.iter().map(|&(a, b)| (image[a], image[b])))
    }

    /// A copy of the graph with default `Original(i)` labels.
    pub fn unlabeled(&self) -> Graph {
        Graph {
            labels: (0..self.order()).map(VertexLabel::Original).collect(),
            adjacency: self.adjacency.clone(),
            edges: self.edges.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn triangle_from_pairs() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::from_edge_list(2, []).unwrap();
        assert_eq!(g.max_degree(), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn c4_degrees() {
        let g = c4();
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn loops_and_ranges_are_rejected() {
        assert!(matches!(
            Graph::from_edge_list(3, [(1, 1)]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(Error::MalformedInput(_))
        ));
        assert!(Graph::from_edge_list(0, []).is_err());
    }

    #[test]
    fn odd_cycle_has_no_bipartition() {
        let c5 = Graph::from_edge_list(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(c5.bipartition().is_none());
        let (u, w) = c4().bipartition().unwrap();
        assert_eq!(u, vec![0, 2]);
        assert_eq!(w, vec![1, 3]);
    }

    #[test]
    fn neighborhoods() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.neighborhood(0).unwrap(), &[1, 2, 3]);
        assert!(k4.neighborhood(4).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(!c4().is_irreducible());
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!p3.is_irreducible());
        let p4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_irreducible());
    }

    #[test]
    fn relabel_moves_edges_and_labels() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let r = p3.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(r.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(r.label(0), VertexLabel::Original(1));
        assert!(p3.relabel(&[0, 0, 1]).is_err());
    }
}
