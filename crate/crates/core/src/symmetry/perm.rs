use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `0..n`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u32).collect())
    }

    /// Checked constructor: `images` must be a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &w in &images {
            if w >= n || std::mem::replace(&mut seen[w], true) {
                return Err(Error::Contract(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images.into_iter().map(|w| w as u32).collect()))
    }

    pub(crate) fn from_images_unchecked(images: &[usize]) -> Permutation {
        Permutation(images.iter().map(|&w| w as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&w| w as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| i as u32 == w)
    }

    /// Points not fixed by the permutation.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.images().enumerate().filter(|(i, w)| i != w).map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation(other.0.iter().map(|&w| self.0[w as usize]).collect())
    }

    /// True iff the permutation maps edges to edges (and hence, being a
    /// bijection, non-edges to non-edges).
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.len() == g.order()
            && g.edges().iter().all(|&(a, b)| g.has_edge(self.apply(a), self.apply(b)))
    }
}

/// One-line image notation: `1 0 2`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}
