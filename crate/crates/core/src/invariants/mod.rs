//! Exact values of χ, D, χ_D, D′, χ′_D and D″ with witness colourings.
//!
//! Each invariant is the least palette size `r` admitting a colouring of some
//! domain (vertices, edges, or both) that is proper and/or preserved only by
//! the identity. Palettes are tried upward from a proven lower bound; every
//! palette below the reported value is refuted by exhaustive search, which is
//! what `certified` records.

mod coloring;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use coloring::{Color, Coloring, EdgeColoring, TotalColoring, VertexColoring};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};
use crate::limits::Limits;
use crate::symmetry::{automorphism_group_with, edge_action_unchecked, stabilizer, AutGroup};
use crate::transforms::subdivision_graph;
use search::{Host, Outcome, Problem};

/// Which invariant an [`InvariantValue`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum InvariantKind {
    /// Chromatic number χ.
    #[serde(rename = "chi")]
    Chromatic,
    /// Distinguishing number D.
    #[serde(rename = "D")]
    Distinguishing,
    /// Distinguishing chromatic number χ_D.
    #[serde(rename = "chiD")]
    DistinguishingChromatic,
    /// Distinguishing index D′.
    #[serde(rename = "Dp")]
    DistinguishingIndex,
    /// Distinguishing chromatic index χ′_D.
    #[serde(rename = "chiDp")]
    DistinguishingChromaticIndex,
    /// Total distinguishing number D″.
    #[serde(rename = "Dpp")]
    TotalDistinguishing,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 6] = [
        InvariantKind::Chromatic,
        InvariantKind::Distinguishing,
        InvariantKind::DistinguishingChromatic,
        InvariantKind::DistinguishingIndex,
        InvariantKind::DistinguishingChromaticIndex,
        InvariantKind::TotalDistinguishing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Chromatic => "chi",
            InvariantKind::Distinguishing => "D",
            InvariantKind::DistinguishingChromatic => "chiD",
            InvariantKind::DistinguishingIndex => "Dp",
            InvariantKind::DistinguishingChromaticIndex => "chiDp",
            InvariantKind::TotalDistinguishing => "Dpp",
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvariantKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown invariant {s:?} (chi, D, chiD, Dp, chiDp, Dpp)")))
    }
}

/// An invariant value together with a colouring attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub value: u32,
    pub witness: Coloring,
    /// Every smaller palette was refuted (or excluded by a proven bound).
    pub certified: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Domain {
    Vertices,
    Edges,
    Total,
}

/// Proper colouring check for vertex or edge colourings.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_domain(g)?;
    match c {
        Coloring::Vertex(vc) => Ok(g.edges().iter().all(|&(a, b)| vc.get(a) != vc.get(b))),
        Coloring::Edge(ec) => {
            let colors = ec.colors();
            Ok((0..g.order()).all(|v| {
                let mut seen: Vec<Color> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| colors[g.edge_index(v, w).expect("edge")])
                    .collect();
                seen.sort_unstable();
                seen.windows(2).all(|w| w[0] != w[1])
            }))
        }
        Coloring::Total(_) => Err(Error::Contract(
            "properness is only defined here for vertex or edge colourings".into(),
        )),
    }
}

/// True iff only the identity automorphism of `g` preserves `c`.
pub fn is_distinguishing(g: &Graph, c: &Coloring) -> Result<bool> {
    let group = automorphism_group_with(g, &Limits::default())?;
    is_distinguishing_in(&group, g, c)
}

/// [`is_distinguishing`] against an already enumerated `Aut(g)`.
pub fn is_distinguishing_in(group: &AutGroup, g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(stabilizer(group, g, c)?.is_trivial())
}

/// Size of a maximum clique.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, candidates: Vec<usize>, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (k, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - k <= *best {
                return;
            }
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            grow(g, size + 1, next, best);
        }
    }
    let mut best = 0;
    grow(g, 0, (0..g.order()).collect(), &mut best);
    best
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::MalformedInput(
            "invariants are only computed for connected graphs".into(),
        ));
    }
    Ok(())
}

fn require_edges(g: &Graph, kind: InvariantKind) -> Result<()> {
    if g.size() == 0 {
        return Err(Error::MalformedInput(format!("{kind} needs at least one edge")));
    }
    Ok(())
}

/// Position pairs that must receive different colours.
fn conflicts(g: &Graph, domain: Domain) -> Vec<(usize, usize)> {
    match domain {
        Domain::Vertices => g.edges().to_vec(),
        Domain::Edges => {
            let mut out = Vec::new();
            for v in 0..g.order() {
                let incident: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| g.edge_index(v, w).expect("edge"))
                    .collect();
                for (k, &e) in incident.iter().enumerate() {
                    out.extend(incident[k + 1..].iter().map(|&f| (e, f)));
                }
            }
            out
        }
        Domain::Total => Vec::new(),
    }
}

fn group_action(group: &AutGroup, g: &Graph, domain: Domain) -> Vec<Vec<u32>> {
    let n = g.order() as u32;
    group
        .elements()
        .iter()
        .map(|p| {
            let vertices = || p.images().map(|w| w as u32);
            let edges = || edge_action_unchecked(p, g).into_iter().map(|e| e as u32);
            match domain {
                Domain::Vertices => vertices().collect(),
                Domain::Edges => edges().collect(),
                Domain::Total => vertices().chain(edges().map(|e| n + e)).collect(),
            }
        })
        .collect()
}

fn host_for(g: &Graph, domain: Domain) -> Result<Host> {
    if domain == Domain::Vertices {
        return Ok(Host {
            graph: g.clone(),
            tags: vec![0; g.order()],
            positions: (0..g.order()).collect(),
        });
    }
    let s = subdivision_graph(g)?;
    let tags = s
        .labels()
        .iter()
        .map(|l| u32::from(matches!(l, VertexLabel::EdgeVertex(..))))
        .collect();
    let n = g.order();
    let positions = match domain {
        Domain::Edges => (n..n + g.size()).collect(),
        _ => (0..n + g.size()).collect(),
    };
    Ok(Host {
        graph: s,
        tags,
        positions,
    })
}

fn wrap(g: &Graph, domain: Domain, colors: Vec<Color>, palette: Color) -> Result<Coloring> {
    Ok(match domain {
        Domain::Vertices => Coloring::Vertex(VertexColoring::new(colors, palette)?),
        Domain::Edges => Coloring::Edge(EdgeColoring::new(colors, palette)?),
        Domain::Total => {
            let edge = colors[g.order()..].to_vec();
            let mut vertex = colors;
            vertex.truncate(g.order());
            Coloring::Total(TotalColoring::new(
                VertexColoring::new(vertex, palette)?,
                EdgeColoring::new(edge, palette)?,
            )?)
        }
    })
}

struct Request {
    kind: InvariantKind,
    domain: Domain,
    proper: bool,
    distinguishing: bool,
    group: Option<AutGroup>,
}

impl Request {
    fn new(kind: InvariantKind, g: &Graph, limits: &Limits) -> Result<Request> {
        require_connected(g)?;
        limits.check_vertices(g.order())?;
        let (domain, proper, distinguishing) = match kind {
            InvariantKind::Chromatic => (Domain::Vertices, true, false),
            InvariantKind::Distinguishing => (Domain::Vertices, false, true),
            InvariantKind::DistinguishingChromatic => (Domain::Vertices, true, true),
            InvariantKind::DistinguishingIndex => (Domain::Edges, false, true),
            InvariantKind::DistinguishingChromaticIndex => (Domain::Edges, true, true),
            InvariantKind::TotalDistinguishing => (Domain::Total, false, true),
        };
        if domain != Domain::Vertices {
            require_edges(g, kind)?;
        }
        let group = if distinguishing { Some(automorphism_group_with(g, limits)?) } else { None };
        Ok(Request {
            kind,
            domain,
            proper,
            distinguishing,
            group,
        })
    }

    fn size(&self, g: &Graph) -> usize {
        match self.domain {
            Domain::Vertices => g.order(),
            Domain::Edges => g.size(),
            Domain::Total => g.order() + g.size(),
        }
    }

    fn problem(&self, g: &Graph) -> Result<Problem> {
        let action = match &self.group {
            Some(group) => {
                let action = group_action(group, g, self.domain);
                let faithful = group
                    .elements()
                    .iter()
                    .zip(&action)
                    .all(|(p, a)| p.is_identity() || a.iter().enumerate().any(|(i, &w)| i as u32 != w));
                if !faithful {
                    return Err(Error::Undefined(format!(
                        "{}: a non-identity automorphism fixes every coloured element",
                        self.kind
                    )));
                }
                action
            }
            None => Vec::new(),
        };
        let host = if self.distinguishing { Some(host_for(g, self.domain)?) } else { None };
        let conflict_pairs = if self.proper { conflicts(g, self.domain) } else { Vec::new() };
        Ok(Problem::new(self.size(g), &conflict_pairs, &action, self.distinguishing, host))
    }

    /// A palette size no valid colouring can beat, and whether that bound is
    /// itself certified.
    fn lower_bound(&self, g: &Graph, limits: &Limits) -> Result<(u32, bool)> {
        let symmetric = self.group.as_ref().map_or(1, |group| u32::from(!group.is_trivial()) + 1);
        Ok(match self.kind {
            InvariantKind::Chromatic => (clique_number(g) as u32, true),
            InvariantKind::Distinguishing
            | InvariantKind::DistinguishingIndex
            | InvariantKind::TotalDistinguishing => (symmetric, true),
            InvariantKind::DistinguishingChromatic => {
                let chi = compute(InvariantKind::Chromatic, g, limits)?;
                (chi.value.max(symmetric), chi.certified)
            }
            InvariantKind::DistinguishingChromaticIndex => {
                // Each colour class is a matching of at most ⌊n/2⌋ edges.
                let matching = (g.order() / 2).max(1);
                let overfull = g.size().div_ceil(matching);
                ((g.max_degree().max(overfull) as u32).max(symmetric), true)
            }
        })
    }
}

/// Computes any of the six invariants.
pub fn compute(kind: InvariantKind, g: &Graph, limits: &Limits) -> Result<InvariantValue> {
    let req = Request::new(kind, g, limits)?;
    let size = req.size(g);
    let uncertified = size > limits.max_certified_domain;
    if uncertified && !limits.witness_only {
        return Err(Error::Resource {
            what: "colouring domain size for certified search",
            cap: limits.max_certified_domain as u64,
            actual: size as u64,
        });
    }
    let (lower, lower_certified) = req.lower_bound(g, limits)?;
    let problem = req.problem(g)?;
    let budget = limits.witness_only.then_some(limits.witness_node_budget);
    let mut certified = !uncertified && lower_certified;
    let mut palette = lower.max(1);
    loop {
        match problem.solve(palette, budget) {
            Outcome::Found(colors) => {
                return Ok(InvariantValue {
                    kind,
                    value: palette,
                    witness: wrap(g, req.domain, colors, palette)?,
                    certified,
                });
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => certified = false,
        }
        palette += 1;
        if palette as usize > size.max(1) + 1 {
            return Err(Error::Undefined(format!("{kind}: no colouring found")));
        }
    }
}

/// The lexicographically least colouring of the kind measured by `kind` that
/// uses colours from `1..=palette`, or `None` after exhaustive search shows
/// there is none.
pub fn find_coloring(kind: InvariantKind, g: &Graph, palette: Color, limits: &Limits) -> Result<Option<Coloring>> {
    let req = Request::new(kind, g, limits)?;
    let size = req.size(g);
    if size > limits.max_certified_domain {
        return Err(Error::Resource {
            what: "colouring domain size for exhaustive search",
            cap: limits.max_certified_domain as u64,
            actual: size as u64,
        });
    }
    match req.problem(g)?.solve(palette.max(1), None) {
        Outcome::Found(colors) => Ok(Some(wrap(g, req.domain, colors, palette.max(1))?)),
        Outcome::Exhausted => Ok(None),
        Outcome::OutOfBudget => unreachable!("no budget was set"),
    }
}

pub fn chromatic_number(g: &Graph) -> Result<InvariantValue> {
    compute(InvariantKind::Chromatic, g, &Limits::default())
}

pub fn distinguishing_number(g: &Graph) -> Result<InvariantValue> {
    compute(InvariantKind::Distinguishing, g, &Limits::default())
}

pub fn distinguishing_chromatic_number(g: &Graph) -> Result<InvariantValue> {
    compute(InvariantKind::DistinguishingChromatic, g, &Limits::default())
}

pub fn distinguishing_index(g: &Graph) -> Result<InvariantValue> {
    compute(InvariantKind::DistinguishingIndex, g, &Limits::default())
}

pub fn distinguishing_chromatic_index(g: &Graph) -> Result<InvariantValue> {
    compute(InvariantKind::DistinguishingChromaticIndex, g, &Limits::default())
}

pub fn total_distinguishing_number(g: &Graph) -> Result<InvariantValue> {
    compute(InvariantKind::TotalDistinguishing, g, &Limits::default())
}
