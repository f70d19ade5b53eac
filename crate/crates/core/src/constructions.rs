//! Explicit colourings of endline and subdivision graphs.
//!
//! Each construction returns the colouring together with the graph it lives
//! on and a certification computed by the exact checkers, so callers never
//! have to trust the construction itself.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{named_graph, Graph, NamedGraphSpec, VertexLabel};
use crate::invariants::{
    compute, is_distinguishing, is_proper, Color, Coloring, EdgeColoring, InvariantKind,
    TotalColoring, VertexColoring,
};
use crate::limits::Limits;
use crate::symmetry::is_isomorphic;
use crate::transforms::{endline_graph, subdivision_graph};

/// The four graphs whose endline graphs need `Δ + 2` colours.
pub const ENDLINE_EXCEPTIONS: [NamedGraphSpec; 4] = [
    NamedGraphSpec::Cycle(4),
    NamedGraphSpec::Complete(4),
    NamedGraphSpec::Cycle(6),
    NamedGraphSpec::CompleteBipartite(3, 3),
];

/// Results of checking a constructed colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certification {
    /// `None` when properness is not claimed.
    pub proper: Option<bool>,
    pub distinguishing: bool,
    /// The construction's own colouring failed and an exact search supplied
    /// the result instead.
    pub fallback: bool,
}

impl Certification {
    pub fn ok(&self) -> bool {
        self.proper.unwrap_or(true) && self.distinguishing && !self.fallback
    }
}

/// A colouring of `graph` produced by one of the constructions.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub coloring: Coloring,
    pub certification: Certification,
}

impl Construction {
    pub fn palette(&self) -> Color {
        self.coloring.palette()
    }

    fn certify(graph: Graph, coloring: Coloring, proper: bool) -> Result<Construction> {
        let proper = if proper { Some(is_proper(&graph, &coloring)?) } else { None };
        let distinguishing = is_distinguishing(&graph, &coloring)?;
        Ok(Construction {
            graph,
            coloring,
            certification: Certification {
                proper,
                distinguishing,
                fallback: false,
            },
        })
    }
}

/// Which of the four exceptional graphs `g` is, with an isomorphism from the
/// catalogue copy onto `g`.
pub fn endline_exception(g: &Graph) -> Result<Option<(NamedGraphSpec, Vec<usize>)>> {
    for spec in ENDLINE_EXCEPTIONS {
        let model = named_graph(spec)?;
        if let Some(phi) = is_isomorphic(&model, g)? {
            return Ok(Some((spec, phi.to_vec())));
        }
    }
    Ok(None)
}

fn hamiltonian_cycle(spec: NamedGraphSpec) -> Vec<usize> {
    match spec {
        NamedGraphSpec::Cycle(n) => (0..n).collect(),
        NamedGraphSpec::Complete(4) => vec![0, 1, 2, 3],
        NamedGraphSpec::CompleteBipartite(3, 3) => vec![0, 3, 1, 4, 2, 5],
        _ => unreachable!("only the four exceptional graphs have a fixed cycle"),
    }
}

/// The `Δ + 2` edge colouring of `G⁺` for `G ∈ {C4, K4, C6, K3,3}`.
///
/// Along a Hamiltonian cycle `z1 … zp` the edges alternate 3, 4 starting with
/// `z1 z2`; the pendant edge at `z1` gets 1 and every other pendant edge 2;
/// chords (K4 and K3,3 only) get 5. Isomorphic copies are accepted and the
/// catalogue cycle is transported onto them.
pub fn exceptional_endline_coloring(g: &Graph) -> Result<Construction> {
    let (spec, phi) = endline_exception(g)?.ok_or_else(|| {
        Error::Contract("graph is not one of C4, K4, C6, K3,3".into())
    })?;
    let cycle: Vec<usize> = hamiltonian_cycle(spec).into_iter().map(|v| phi[v]).collect();
    let n = g.order();
    let plus = endline_graph(g)?;
    let palette = (g.max_degree() + 2) as Color;
    let mut pairs = Vec::new();
    for k in 0..n {
        let (a, b) = (cycle[k], cycle[(k + 1) % n]);
        pairs.push(((a, b), if k % 2 == 0 { 3 } else { 4 }));
    }
    for &(a, b) in g.edges() {
        let on_cycle = (0..n).any(|k| {
            let (x, y) = (cycle[k], cycle[(k + 1) % n]);
            (x, y) == (a, b) || (y, x) == (a, b)
        });
        if !on_cycle {
            pairs.push(((a, b), 5));
        }
    }
    for v in 0..n {
        pairs.push(((v, n + v), if v == cycle[0] { 1 } else { 2 }));
    }
    let coloring = Coloring::Edge(EdgeColoring::from_pairs(&plus, pairs, palette)?);
    Construction::certify(plus, coloring, true)
}

/// A `Δ + 1` proper distinguishing edge colouring of `G⁺` for connected
/// `G` of order at least 3 outside the four exceptions.
///
/// Starts from an optimal proper distinguishing edge colouring of `G`. If it
/// uses `Δ` colours every pendant edge gets `Δ + 1`; otherwise the pendant edge
/// at `v` gets the least colour missing at `v`. Should the result fail to be
/// distinguishing, an exact search on `G⁺` supplies the colouring and the
/// certification records the fallback.
pub fn endline_extension_coloring(g: &Graph, limits: &Limits) -> Result<Construction> {
    if g.order() < 3 || !g.is_connected() {
        return Err(Error::Contract("needs a connected graph of order at least 3".into()));
    }
    if endline_exception(g)?.is_some() {
        return Err(Error::Contract("graph is one of the four exceptions".into()));
    }
    let delta = g.max_degree() as Color;
    let base = compute(InvariantKind::DistinguishingChromaticIndex, g, limits)?;
    let Coloring::Edge(inner) = &base.witness else {
        unreachable!("edge invariants carry edge witnesses");
    };
    let n = g.order();
    let plus = endline_graph(g)?;
    let mut pairs: Vec<((usize, usize), Color)> = g
        .edges()
        .iter()
        .zip(inner.colors())
        .map(|(&e, &c)| (e, c))
        .collect();
    if base.value == delta {
        pairs.extend((0..n).map(|v| ((v, n + v), delta + 1)));
    } else if base.value == delta + 1 {
        for v in 0..n {
            let used: Vec<Color> = g
                .neighbors(v)
                .iter()
                .map(|&w| inner.get(g, v, w).expect("edge"))
                .collect();
            let missing = (1..=delta + 1)
                .find(|c| !used.contains(c))
                .expect("a vertex of degree at most Δ misses one of Δ + 1 colours");
            pairs.push(((v, n + v), missing));
        }
    } else {
        return Err(Error::Contract(format!(
            "distinguishing chromatic index {} exceeds Δ + 1 = {}",
            base.value,
            delta + 1
        )));
    }
    let coloring = Coloring::Edge(EdgeColoring::from_pairs(&plus, pairs, delta + 1)?);
    let built = Construction::certify(plus, coloring, true)?;
    if built.certification.ok() {
        return Ok(built);
    }
    let exact = compute(InvariantKind::DistinguishingChromaticIndex, &built.graph, limits)?;
    let mut fallback = Construction::certify(built.graph, exact.witness, true)?;
    fallback.certification.fallback = true;
    Ok(fallback)
}

/// Total colouring of `G` read as a vertex colouring of `S(G)`: originals keep
/// their vertex colour and the edge-vertex `{x, y}` takes the colour of edge
/// `{x, y}`.
pub fn lift_total_to_subdivision(g: &Graph, f: &TotalColoring) -> Result<VertexColoring> {
    Coloring::Total(f.clone()).check_domain(g)?;
    let colors = f
        .vertex()
        .colors()
        .iter()
        .chain(f.edge().colors())
        .copied()
        .collect();
    VertexColoring::new(colors, f.palette())
}

/// Inverse of [`lift_total_to_subdivision`], driven by the provenance labels
/// of `sg`, which must be the subdivision graph of `g`.
pub fn restrict_subdivision_to_total(
    g: &Graph,
    sg: &Graph,
    f: &VertexColoring,
) -> Result<TotalColoring> {
    if f.colors().len() != sg.order() || sg.order() != g.order() + g.size() {
        return Err(Error::Contract("colouring is not a colouring of S(G)".into()));
    }
    let mut vertex = vec![0; g.order()];
    let mut edge = vec![0; g.size()];
    for (u, &label) in sg.labels().iter().enumerate() {
        match label {
            VertexLabel::Original(i) if i < g.order() => vertex[i] = f.get(u),
            VertexLabel::EdgeVertex(i, j) => {
                let e = g
                    .edge_index(i, j)
                    .ok_or_else(|| Error::Contract(format!("label {{{i}, {j}}} is not an edge")))?;
                edge[e] = f.get(u);
            }
            other => {
                return Err(Error::Contract(format!("unexpected label {other:?} in S(G)")));
            }
        }
    }
    if vertex.contains(&0) || edge.contains(&0) {
        return Err(Error::Contract("provenance labels do not cover V(G) ∪ E(G)".into()));
    }
    TotalColoring::new(
        VertexColoring::new(vertex, f.palette())?,
        EdgeColoring::new(edge, f.palette())?,
    )
}

/// Lifts an optimal total distinguishing colouring of `g` to `S(g)`.
pub fn lifted_total_coloring(g: &Graph, limits: &Limits) -> Result<Construction> {
    let total = compute(InvariantKind::TotalDistinguishing, g, limits)?;
    let Coloring::Total(f) = &total.witness else {
        unreachable!("total invariant carries a total witness");
    };
    let lifted = lift_total_to_subdivision(g, f)?;
    Construction::certify(subdivision_graph(g)?, Coloring::Vertex(lifted), false)
}

/// A proper distinguishing colouring of `S(G)` for connected non-cycle `G`
/// of order at least 3, built from an optimal distinguishing colouring `f`:
///
/// * `D(G) >= 3`: originals keep `f`; `{x, y}` gets the least colour of
///   `1..=D(G)` other than `f(x)` and `f(y)`.
/// * `D(G) = 2`: originals keep `f`; every edge-vertex gets 3.
/// * `D(G) = 1`: originals 1, edge-vertices 2.
pub fn subdivision_proper_distinguishing(g: &Graph, limits: &Limits) -> Result<Construction> {
    if g.order() < 3 || !g.is_connected() {
        return Err(Error::Contract("needs a connected graph of order at least 3".into()));
    }
    if g.is_cycle() {
        return Err(Error::Contract("cycles are excluded from this construction".into()));
    }
    let d = compute(InvariantKind::Distinguishing, g, limits)?;
    let Coloring::Vertex(f) = &d.witness else {
        unreachable!("vertex invariants carry vertex witnesses");
    };
    let (originals, palette): (Vec<Color>, Color) = match d.value {
        1 => (vec![1; g.order()], 2),
        2 => (f.colors().to_vec(), 3),
        k => (f.colors().to_vec(), k),
    };
    let edge_colors = g.edges().iter().map(|&(x, y)| match d.value {
        1 => 2,
        2 => 3,
        k => (1..=k)
            .find(|&c| c != f.get(x) && c != f.get(y))
            .expect("three colours leave one free"),
    });
    let colors = originals.into_iter().chain(edge_colors).collect();
    let coloring = Coloring::Vertex(VertexColoring::new(colors, palette)?);
    Construction::certify(subdivision_graph(g)?, coloring, true)
}
