use std::collections::VecDeque;

use super::perm::Permutation;
use super::refine::refine;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Dense adjacency bit matrix used by the inner search loops.
pub(crate) struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(g: &Graph) -> BitMatrix {
        let n = g.order();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for &(a, b) in g.edges() {
            bits[a * words + b / 64] |= 1 << (b % 64);
            bits[b * words + a / 64] |= 1 << (a % 64);
        }
        BitMatrix { words, bits }
    }

    #[inline]
    pub(crate) fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] & (1 << (b % 64)) != 0
    }
}

/// Backtracking over vertex images in BFS order, restricted to refined
/// colour classes; every full assignment passing the pairwise adjacency
/// checks is an automorphism preserving `colors`.
pub(crate) struct AutomorphismSearch<'g> {
    graph: &'g Graph,
    matrix: BitMatrix,
    cells: Vec<u32>,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
}

impl<'g> AutomorphismSearch<'g> {
    pub(crate) fn new(graph: &'g Graph, colors: &[u32]) -> AutomorphismSearch<'g> {
        let n = graph.order();
        let cells = refine(graph, colors);
        let mut cell_size = vec![0usize; n];
        for &c in &cells {
            cell_size[c as usize] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        while order.len() < n {
            let root = (0..n)
                .filter(|&v| !seen[v])
                .min_by_key(|&v| (cell_size[cells[v] as usize], v))
                .expect("unvisited vertex remains");
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                let mut next: Vec<usize> =
                    graph.neighbors(v).iter().copied().filter(|&w| !seen[w]).collect();
                next.sort_by_key(|&w| (cell_size[cells[w] as usize], w));
                for w in next {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        AutomorphismSearch {
            graph,
            matrix: BitMatrix::new(graph),
            cells,
            order,
            parent,
        }
    }

    /// Calls `visit` with the image array of every automorphism, in
    /// search order. Stops early (returning `false`) when `visit` does.
    pub(crate) fn run(&self, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
        let n = self.graph.order();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.step(0, &mut image, &mut used, &mut visit)
    }

    fn step(
        &self,
        k: usize,
        image: &mut [usize],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == self.order.len() {
            return visit(image);
        }
        let v = self.order[k];
        let roots: Vec<usize>;
        let candidates: &[usize] = match self.parent[v] {
            Some(p) => self.graph.neighbors(image[p]),
            None => {
                roots = (0..self.graph.order()).collect();
                &roots
            }
        };
        for &w in candidates {
            if used[w] || self.cells[w] != self.cells[v] {
                continue;
            }
            let consistent = self.order[..k]
                .iter()
                .all(|&u| self.matrix.get(v, u) == self.matrix.get(w, image[u]));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            let go_on = self.step(k + 1, image, used, visit);
            used[w] = false;
            image[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// True iff some non-identity automorphism of `g` preserves `colors`.
pub(crate) fn has_nontrivial_automorphism(g: &Graph, colors: &[u32]) -> bool {
    let mut found = false;
    AutomorphismSearch::new(g, colors).run(|img| {
        if img.iter().enumerate().any(|(i, &w)| i != w) {
            found = true;
            false
        } else {
            true
        }
    });
    found
}

/// The full automorphism group, enumerated element by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl AutGroup {
    /// Wraps an explicit element list (sorted and deduplicated here).
    /// Group axioms are not checked; see [`AutGroup::is_closed`].
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<AutGroup> {
        if elements.iter().any(|p| p.len() != degree) {
            return Err(Error::Contract("group elements of mixed degree".into()));
        }
        elements.sort();
        elements.dedup();
        Ok(AutGroup { degree, elements })
    }

    pub fn trivial(degree: usize) -> AutGroup {
        AutGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Number of points acted on (the graph order).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic image order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Contains the identity and is closed under composition and inverse.
    pub fn is_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }
}

pub fn automorphism_group(g: &Graph) -> Result<AutGroup> {
    automorphism_group_with(g, &Limits::default())
}

pub fn automorphism_group_with(g: &Graph, limits: &Limits) -> Result<AutGroup> {
    limits.check_vertices(g.order())?;
    let mut elements = Vec::new();
    let mut overflow = false;
    AutomorphismSearch::new(g, &vec![0; g.order()]).run(|img| {
        if elements.len() as u64 >= limits.max_group_order {
            overflow = true;
            return false;
        }
        elements.push(Permutation::from_images_unchecked(img));
        true
    });
    if overflow {
        return Err(Error::Resource {
            what: "automorphism group order",
            cap: limits.max_group_order,
            actual: limits.max_group_order + 1,
        });
    }
    elements.sort();
    Ok(AutGroup {
        degree: g.order(),
        elements,
    })
}

fn require_automorphism(p: &Permutation, g: &Graph) -> Result<()> {
    if !p.is_automorphism_of(g) {
        return Err(Error::Contract(format!("[{p}] is not an automorphism of the graph")));
    }
    Ok(())
}

/// The induced action on edges: `edge_action(p, g)[e]` is the index of the
/// image of edge `e` in `g.edges()`.
pub fn edge_action(p: &Permutation, g: &Graph) -> Result<Vec<usize>> {
    require_automorphism(p, g)?;
    Ok(edge_action_unchecked(p, g))
}

pub(crate) fn edge_action_unchecked(p: &Permutation, g: &Graph) -> Vec<usize> {
    g.edges()
        .iter()
        .map(|&(a, b)| g.edge_index(p.apply(a), p.apply(b)).expect("automorphism maps edges to edges"))
        .collect()
}

/// Extends `alpha ∈ Aut(G)` to the endline graph: `i ↦ α(i)` and
/// `Pendant(i) ↦ Pendant(α(i))`.
pub fn lift_to_endline(alpha: &Permutation, g: &Graph) -> Result<Permutation> {
    require_automorphism(alpha, g)?;
    let n = g.order();
    let images = (0..2 * n)
        .map(|v| if v < n { alpha.apply(v) } else { n + alpha.apply(v - n) })
        .collect();
    Permutation::from_images(images)
}

/// Extends `alpha ∈ Aut(G)` to the subdivision graph: originals move by
/// `α`, and the edge-vertex `{x, y}` goes to `{α(x), α(y)}`.
pub fn lift_to_subdivision(alpha: &Permutation, g: &Graph) -> Result<Permutation> {
    require_automorphism(alpha, g)?;
    let n = g.order();
    let on_edges = edge_action_unchecked(alpha, g);
    let images = (0..n)
        .map(|v| alpha.apply(v))
        .chain(on_edges.into_iter().map(|e| n + e))
        .collect();
    Permutation::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraphSpec};
    use crate::transforms::{endline_graph, subdivision_graph};

    fn named(spec: NamedGraphSpec) -> Graph {
        named_graph(spec).unwrap()
    }

    #[test]
    fn complete_graph_has_full_symmetric_group() {
        assert_eq!(automorphism_group(&named(NamedGraphSpec::Complete(4))).unwrap().order(), 24);
    }

    #[test]
    fn dihedral_orders() {
        for n in 3..9 {
            let g = automorphism_group(&named(NamedGraphSpec::Cycle(n))).unwrap();
            assert_eq!(g.order(), 2 * n);
            assert!(g.is_closed());
        }
    }

    #[test]
    fn group_cap_is_enforced() {
        let limits = Limits {
            max_group_order: 100,
            ..Limits::default()
        };
        let err = automorphism_group_with(&named(NamedGraphSpec::Complete(5)), &limits).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
        let small = Limits {
            max_vertices: 3,
            ..Limits::default()
        };
        assert!(automorphism_group_with(&named(NamedGraphSpec::Cycle(4)), &small).is_err());
    }

    #[test]
    fn disconnected_graphs_are_handled() {
        let g = Graph::from_edge_list(5, [(0, 1), (2, 3)]).unwrap();
        // swap within each edge, swap the two edges, vertex 4 fixed: 8
        assert_eq!(automorphism_group(&g).unwrap().order(), 8);
    }

    #[test]
    fn edge_action_of_rotation_shifts_c4_edges() {
        let c4 = named(NamedGraphSpec::Cycle(4));
        let rot = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        // edges: (0,1) (0,3) (1,2) (2,3)
        assert_eq!(edge_action(&rot, &c4).unwrap(), vec![2, 0, 3, 1]);
        let id = Permutation::identity(4);
        assert_eq!(edge_action(&id, &c4).unwrap(), vec![0, 1, 2, 3]);
        let bad = Permutation::from_images(vec![0, 2, 1, 3]).unwrap();
        assert!(matches!(edge_action(&bad, &c4), Err(Error::Contract(_))));
    }

    #[test]
    fn lifts_are_automorphisms() {
        let g = named(NamedGraphSpec::Path(4));
        let rev = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
        let plus = lift_to_endline(&rev, &g).unwrap();
        assert!(plus.is_automorphism_of(&endline_graph(&g).unwrap()));
        assert_eq!(plus.to_vec(), vec![3, 2, 1, 0, 7, 6, 5, 4]);
        let sub = lift_to_subdivision(&rev, &g).unwrap();
        assert!(sub.is_automorphism_of(&subdivision_graph(&g).unwrap()));
        assert!(lift_to_subdivision(&Permutation::identity(4), &g).unwrap().is_identity());
    }

    #[test]
    fn colored_symmetry_detection() {
        let c4 = named(NamedGraphSpec::Cycle(4));
        assert!(has_nontrivial_automorphism(&c4, &[1, 2, 1, 2]));
        assert!(!has_nontrivial_automorphism(&c4, &[1, 2, 3, 3]));
        assert!(!has_nontrivial_automorphism(&c4, &[1, 2, 3, 4]));
        let p3 = named(NamedGraphSpec::Path(3));
        assert!(!has_nontrivial_automorphism(&p3, &[1, 1, 2]));
    }
}
