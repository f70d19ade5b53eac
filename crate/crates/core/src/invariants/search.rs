//! Depth-first search for colourings of a finite domain under a group action.
//!
//! Positions are coloured in index order with first-fit colours (a new colour
//! is at most one more than the largest used so far). Two prunings keep
//! exhaustion cheap, and both are sound for any subset of the group:
//!
//! * lex-leader: a prefix is dropped when some group element, followed by
//!   first-occurrence renaming of colours, maps it to a strictly smaller
//!   fully-determined prefix. The least valid colouring of each orbit always
//!   survives, so the first colouring found is the lexicographically least
//!   valid one.
//! * locked symmetry: once every point moved by a non-identity element is
//!   coloured and the element preserves those colours, no completion can be
//!   distinguishing.
//!
//! When the element list had to be truncated, a leaf is accepted only after
//! an exact colour-preserving automorphism search on the host graph.

use crate::graph::Graph;
use crate::symmetry::has_nontrivial_automorphism;

use super::coloring::Color;

/// Non-identity elements kept for locked-symmetry pruning.
const LOCK_CAP: usize = 20_000;
/// Elements consulted by the lex-leader test.
const LEX_CAP: usize = 512;

/// Graph whose colour-preserving automorphisms realise the group action; used
/// for exact leaf checks when the element list is truncated.
pub(crate) struct Host {
    pub graph: Graph,
    /// Fixed class of every host vertex.
    pub tags: Vec<u32>,
    /// Host vertex of every domain position.
    pub positions: Vec<usize>,
}

struct Element {
    images: Vec<u32>,
    moved: Vec<(u32, u32)>,
}

pub(crate) struct Problem {
    size: usize,
    /// Earlier positions that may not share a colour with each position.
    conflicts: Vec<Vec<usize>>,
    distinguishing: bool,
    /// `by_lock[i]`: elements whose largest moved point is `i`.
    by_lock: Vec<Vec<Element>>,
    lex: Vec<Vec<u32>>,
    complete: bool,
    host: Option<Host>,
}

pub(crate) enum Outcome {
    Found(Vec<Color>),
    Exhausted,
    OutOfBudget,
}

impl Problem {
    /// `group` lists the action of every group element on `0..size`
    /// (identity included or not). `conflicts` are unordered position pairs.
    pub(crate) fn new(
        size: usize,
        conflicts: &[(usize, usize)],
        group: &[Vec<u32>],
        distinguishing: bool,
        host: Option<Host>,
    ) -> Problem {
        let mut earlier = vec![Vec::new(); size];
        for &(a, b) in conflicts {
            earlier[a.max(b)].push(a.min(b));
        }
        let mut elements: Vec<Element> = group
            .iter()
            .filter_map(|images| {
                let moved: Vec<(u32, u32)> = images
                    .iter()
                    .enumerate()
                    .filter(|&(p, &q)| p as u32 != q)
                    .map(|(p, &q)| (p as u32, q))
                    .collect();
                (!moved.is_empty()).then(|| Element {
                    images: images.clone(),
                    moved,
                })
            })
            .collect();
        let lock = |e: &Element| e.moved.last().map_or(0, |&(p, _)| p);
        elements.sort_by_key(|e| (lock(e), e.moved.len()));
        let complete = elements.len() <= LOCK_CAP;
        elements.truncate(LOCK_CAP);
        let lex = elements.iter().take(LEX_CAP).map(|e| e.images.clone()).collect();
        let mut by_lock: Vec<Vec<Element>> = (0..size).map(|_| Vec::new()).collect();
        for e in elements {
            let at = lock(&e) as usize;
            by_lock[at].push(e);
        }
        Problem {
            size,
            conflicts: earlier,
            distinguishing,
            by_lock,
            lex,
            complete,
            host: if complete { None } else { host },
        }
    }

    /// Searches palettes `1..=palette`. `budget` caps the number of nodes.
    pub(crate) fn solve(&self, palette: Color, budget: Option<u64>) -> Outcome {
        if self.size == 0 {
            return Outcome::Found(Vec::new());
        }
        let mut state = State {
            problem: self,
            palette,
            colors: vec![0; self.size],
            stamp: vec![0; palette as usize + 1],
            renamed: vec![0; palette as usize + 1],
            generation: 0,
            nodes: 0,
            budget,
            out_of_budget: false,
        };
        if state.dfs(0, 0) {
            Outcome::Found(state.colors)
        } else if state.out_of_budget {
            Outcome::OutOfBudget
        } else {
            Outcome::Exhausted
        }
    }
}

struct State<'p> {
    problem: &'p Problem,
    palette: Color,
    colors: Vec<Color>,
    stamp: Vec<u64>,
    renamed: Vec<Color>,
    generation: u64,
    nodes: u64,
    budget: Option<u64>,
    out_of_budget: bool,
}

impl State<'_> {
    fn dfs(&mut self, i: usize, used: Color) -> bool {
        let problem = self.problem;
        if i == problem.size {
            return self.accept_leaf();
        }
        let top = self.palette.min(used + 1);
        for c in 1..=top {
            if problem.conflicts[i].iter().any(|&j| self.colors[j] == c) {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.out_of_budget = true;
                self.colors[i] = 0;
                return false;
            }
            self.colors[i] = c;
            if problem.distinguishing && self.locked(i) {
                continue;
            }
            if !self.lex_leader(i) {
                continue;
            }
            if self.dfs(i + 1, used.max(c)) {
                return true;
            }
            if self.out_of_budget {
                break;
            }
        }
        self.colors[i] = 0;
        false
    }

    fn locked(&self, i: usize) -> bool {
        self.problem.by_lock[i].iter().any(|e| {
            e.moved
                .iter()
                .all(|&(p, q)| self.colors[p as usize] == self.colors[q as usize])
        })
    }

    fn lex_leader(&mut self, i: usize) -> bool {
        for h in &self.problem.lex {
            self.generation += 1;
            let mut next = 1;
            for j in 0..=i {
                let src = h[j] as usize;
                if src > i {
                    break;
                }
                let c = self.colors[src] as usize;
                if self.stamp[c] != self.generation {
                    self.stamp[c] = self.generation;
                    self.renamed[c] = next;
                    next += 1;
                }
                let mapped = self.renamed[c];
                if mapped < self.colors[j] {
                    return false;
                }
                if mapped > self.colors[j] {
                    break;
                }
            }
        }
        true
    }

    fn accept_leaf(&self) -> bool {
        let problem = self.problem;
        if !problem.distinguishing || problem.complete {
            return true;
        }
        let host = problem.host.as_ref().expect("truncated groups carry a host graph");
        let stride = self.palette + 1;
        let mut colors: Vec<u32> = host.tags.iter().map(|&t| t * stride).collect();
        for (p, &v) in host.positions.iter().enumerate() {
            colors[v] += self.colors[p];
        }
        !has_nontrivial_automorphism(&host.graph, &colors)
    }
}
