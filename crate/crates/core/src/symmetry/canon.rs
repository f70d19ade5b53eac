//! Canonical labelling by exhaustive individualisation-refinement.
//!
//! Every leaf of the search tree is a discrete partition, read as a
//! numbering of the vertices; the canonical numbering is the one whose
//! graph6 bit string is lexicographically least. Because refinement and
//! cell selection never look at vertex indices, isomorphic graphs explore
//! the same set of relabelled leaves.

use super::aut::BitMatrix;
use super::perm::Permutation;
use super::refine::{class_count, individualize, refine};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph};
use crate::limits::Limits;

/// A canonical numbering together with the resulting canonical graph6 key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Vertex `v` of the input becomes vertex `labeling.apply(v)`.
    pub labeling: Permutation,
    /// graph6 of the relabelled graph; equal keys iff isomorphic.
    pub graph6: String,
}

struct Best {
    bits: Vec<u64>,
    labeling: Vec<usize>,
}

struct Canonizer<'g> {
    graph: &'g Graph,
    matrix: BitMatrix,
    leaves: u64,
    leaf_cap: u64,
    best: Option<Best>,
}

impl Canonizer<'_> {
    fn encode(&self, position: &[usize]) -> Vec<u64> {
        let n = self.graph.order();
        let mut at = vec![0usize; n];
        for (v, &p) in position.iter().enumerate() {
            at[p] = v;
        }
        let total = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.matrix.get(at[i], at[j]) {
                    bits[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        bits
    }

    fn explore(&mut self, colors: Vec<u32>) -> Result<()> {
        let colors = refine(self.graph, &colors);
        let n = self.graph.order();
        if class_count(&colors) == n {
            self.leaves += 1;
            if self.leaves > self.leaf_cap {
                return Err(Error::Resource {
                    what: "canonical search leaves",
                    cap: self.leaf_cap,
                    actual: self.leaves,
                });
            }
            let position: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let bits = self.encode(&position);
            if self.best.as_ref().is_none_or(|b| bits < b.bits) {
                self.best = Some(Best {
                    bits,
                    labeling: position,
                });
            }
            return Ok(());
        }
        // Target: the smallest non-singleton class, lowest colour first.
        let mut sizes = vec![0usize; class_count(&colors)];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..sizes.len())
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("non-discrete partition has a non-singleton class") as u32;
        for v in 0..n {
            if colors[v] == target {
                self.explore(individualize(&colors, v))?;
            }
        }
        Ok(())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with(g, &Limits::default())
}

pub fn canonical_form_with(g: &Graph, limits: &Limits) -> Result<CanonicalForm> {
    limits.check_vertices(g.order())?;
    if g.order() > 62 {
        return Err(Error::Resource {
            what: "vertex count for graph6 keys",
            cap: 62,
            actual: g.order() as u64,
        });
    }
    let mut canon = Canonizer {
        graph: g,
        matrix: BitMatrix::new(g),
        leaves: 0,
        leaf_cap: limits.max_group_order,
        best: None,
    };
    canon.explore(vec![0; g.order()])?;
    let best = canon.best.expect("search tree has at least one leaf");
    let relabelled = g.relabel(&best.labeling)?;
    Ok(CanonicalForm {
        labeling: Permutation::from_images(best.labeling)?,
        graph6: to_graph6(&relabelled),
    })
}

/// A bijection `φ` with `{φ(x), φ(y)} ∈ E(H)` for every `{x, y} ∈ E(G)`,
/// or `None` when the graphs are not isomorphic. Labels are ignored.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    is_isomorphic_with(g, h, &Limits::default())
}

pub fn is_isomorphic_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<Permutation>> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    let cg = canonical_form_with(g, limits)?;
    let ch = canonical_form_with(h, limits)?;
    if cg.graph6 != ch.graph6 {
        return Ok(None);
    }
    let witness = ch.labeling.inverse().compose(&cg.labeling);
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(a, b)| h.has_edge(witness.apply(a), witness.apply(b))));
    Ok(Some(witness))
}
