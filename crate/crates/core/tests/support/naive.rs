//! Brute-force reference implementations shared by the oracle tests and the
//! acceptance suite. Deliberately naive: no pruning, no shared code with the
//! library's searches.
#![allow(dead_code)]

use std::collections::BTreeSet;

use symbreak_core::invariants::{Color, Coloring};
use symbreak_core::{Graph, InvariantKind};

/// Calls `visit` on every bijection of `0..n`, one at a time.
fn for_each_permutation(n: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(p: &mut Vec<usize>, used: &mut [bool], visit: &mut impl FnMut(&[usize])) {
        if p.len() == used.len() {
            visit(p);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                p.push(v);
                go(p, used, visit);
                p.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], visit);
}

pub fn naive_automorphisms(g: &Graph) -> BTreeSet<Vec<usize>> {
    let edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    let mut out = BTreeSet::new();
    for_each_permutation(g.order(), &mut |p| {
        let preserves = g.edges().iter().all(|&(a, b)| {
            let (x, y) = (p[a], p[b]);
            edges.contains(&(x.min(y), x.max(y)))
        });
        if preserves {
            out.insert(p.to_vec());
        }
    });
    out
}

#[derive(Clone, Copy, PartialEq)]
pub enum Domain {
    Vertices,
    Edges,
    Total,
}

/// Permutations of the coloured elements induced by the nontrivial
/// automorphisms; vertices first, then edges in sorted order.
fn element_actions(g: &Graph, domain: Domain) -> Vec<Vec<usize>> {
    let edges: Vec<(usize, usize)> = g.edges().to_vec();
    let index = |a: usize, b: usize| edges.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    naive_automorphisms(g)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &j)| i != j))
        .map(|p| {
            let on_edges = edges.iter().map(|&(a, b)| index(p[a], p[b]));
            match domain {
                Domain::Vertices => p,
                Domain::Edges => on_edges.collect(),
                Domain::Total => {
                    let n = g.order();
                    p.iter().copied().chain(on_edges.map(|e| n + e)).collect()
                }
            }
        })
        .collect()
}

/// Pairs of elements that must differ in a proper colouring.
fn conflict_pairs(g: &Graph, domain: Domain) -> Vec<(usize, usize)> {
    match domain {
        Domain::Vertices => g.edges().to_vec(),
        Domain::Edges => {
            let e = g.edges();
            let mut out = Vec::new();
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    let (a, b) = e[i];
                    let (c, d) = e[j];
                    if a == c || a == d || b == c || b == d {
                        out.push((i, j));
                    }
                }
            }
            out
        }
        Domain::Total => Vec::new(),
    }
}

/// Steps `c` to the next vector over `1..=k` in lexicographic order.
fn advance(c: &mut [Color], k: Color) -> bool {
    for i in (0..c.len()).rev() {
        if c[i] < k {
            c[i] += 1;
            c[i + 1..].fill(1);
            return true;
        }
    }
    false
}

/// Lexicographically least colouring over the smallest palette that is
/// proper (if asked) and fixed by no nontrivial automorphism (if asked).
/// `None` when no palette up to `size + 1` works.
pub fn naive_least(g: &Graph, domain: Domain, proper: bool, distinguishing: bool) -> Option<(Color, Vec<Color>)> {
    let size = match domain {
        Domain::Vertices => g.order(),
        Domain::Edges => g.size(),
        Domain::Total => g.order() + g.size(),
    };
    let actions = if distinguishing { element_actions(g, domain) } else { Vec::new() };
    let conflicts = if proper { conflict_pairs(g, domain) } else { Vec::new() };
    for k in 1..=(size as Color + 1) {
        let mut c = vec![1 as Color; size];
        loop {
            let proper_ok = conflicts.iter().all(|&(i, j)| c[i] != c[j]);
            let breaks_all = actions.iter().all(|a| (0..size).any(|i| c[a[i]] != c[i]));
            if proper_ok && breaks_all {
                return Some((k, c));
            }
            if !advance(&mut c, k) {
                break;
            }
        }
    }
    None
}

pub fn flat(c: &Coloring) -> Vec<Color> {
    match c {
        Coloring::Vertex(v) => v.colors().to_vec(),
        Coloring::Edge(e) => e.colors().to_vec(),
        Coloring::Total(t) => t.vertex().colors().iter().chain(t.edge().colors()).copied().collect(),
    }
}

pub fn oracle_spec(kind: InvariantKind) -> (Domain, bool, bool) {
    match kind {
        InvariantKind::Chromatic => (Domain::Vertices, true, false),
        InvariantKind::Distinguishing => (Domain::Vertices, false, true),
        InvariantKind::DistinguishingChromatic => (Domain::Vertices, true, true),
        InvariantKind::DistinguishingIndex => (Domain::Edges, false, true),
        InvariantKind::DistinguishingChromaticIndex => (Domain::Edges, true, true),
        InvariantKind::TotalDistinguishing => (Domain::Total, false, true),
    }
}

/// Value and lexicographically least witness of `kind`, or `None` when no
/// colouring qualifies.
pub fn naive_value(kind: InvariantKind, g: &Graph) -> Option<(Color, Vec<Color>)> {
    let (domain, proper, distinguishing) = oracle_spec(kind);
    naive_least(g, domain, proper, distinguishing)
}
