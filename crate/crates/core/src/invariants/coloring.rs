use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Color = u32;

fn check_range(colors: &[Color], palette: Color) -> Result<()> {
    if let Some(bad) = colors.iter().find(|&&c| c == 0 || c > palette) {
        return Err(Error::Contract(format!("colour {bad} outside palette 1..={palette}")));
    }
    Ok(())
}

/// `colors[v]` is the colour of vertex `v`, in `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<Color>,
    palette: Color,
}

impl VertexColoring {
    pub fn new(colors: Vec<Color>, palette: Color) -> Result<VertexColoring> {
        check_range(&colors, palette)?;
        Ok(VertexColoring { colors, palette })
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v]
    }
}

/// `colors[e]` is the colour of the `e`-th edge of the graph's sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    palette: Color,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>, palette: Color) -> Result<EdgeColoring> {
        check_range(&colors, palette)?;
        Ok(EdgeColoring { colors, palette })
    }

    /// Builds the colouring from `(endpoints, colour)` pairs, which must cover
    /// every edge of `g` exactly once.
    pub fn from_pairs<I>(g: &Graph, pairs: I, palette: Color) -> Result<EdgeColoring>
    where
        I: IntoIterator<Item = ((usize, usize), Color)>,
    {
        let mut colors = vec![0; g.size()];
        for ((a, b), c) in pairs {
            let e = g
                .edge_index(a, b)
                .ok_or_else(|| Error::Contract(format!("{{{a}, {b}}} is not an edge")))?;
            if colors[e] != 0 {
                return Err(Error::Contract(format!("edge {{{a}, {b}}} coloured twice")));
            }
            colors[e] = c;
        }
        if colors.contains(&0) {
            return Err(Error::Contract("some edges left uncoloured".into()));
        }
        EdgeColoring::new(colors, palette)
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    /// Colour of edge `{a, b}` of `g`.
    pub fn get(&self, g: &Graph, a: usize, b: usize) -> Option<Color> {
        g.edge_index(a, b).map(|e| self.colors[e])
    }
}

/// Simultaneous vertex and edge colouring over one palette.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalColoring {
    vertex: VertexColoring,
    edge: EdgeColoring,
}

impl TotalColoring {
    pub fn new(vertex: VertexColoring, edge: EdgeColoring) -> Result<TotalColoring> {
        if vertex.palette != edge.palette {
            return Err(Error::Contract("vertex and edge parts use different palettes".into()));
        }
        Ok(TotalColoring { vertex, edge })
    }

    pub fn vertex(&self) -> &VertexColoring {
        &self.vertex
    }

    pub fn edge(&self) -> &EdgeColoring {
        &self.edge
    }

    pub fn palette(&self) -> Color {
        self.vertex.palette
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coloring {
    Vertex(VertexColoring),
    Edge(EdgeColoring),
    Total(TotalColoring),
}

impl Coloring {
    pub fn palette(&self) -> Color {
        match self {
            Coloring::Vertex(c) => c.palette,
            Coloring::Edge(c) => c.palette,
            Coloring::Total(c) => c.palette(),
        }
    }

    pub fn check_domain(&self, g: &Graph) -> Result<()> {
        let (vertices, edges) = match self {
            Coloring::Vertex(c) => (Some(c.colors.len()), None),
            Coloring::Edge(c) => (None, Some(c.colors.len())),
            Coloring::Total(c) => (Some(c.vertex.colors.len()), Some(c.edge.colors.len())),
        };
        if vertices.is_some_and(|k| k != g.order()) || edges.is_some_and(|k| k != g.size()) {
            return Err(Error::Contract(
                "colouring domain does not match the graph".into(),
            ));
        }
        Ok(())
    }

    /// `{"0": 1, ...}` for vertices, `{"0-1": 2, ...}` for edges, and
    /// `{"vertices": {...}, "edges": {...}}` for total colourings.
    pub fn to_json(&self, g: &Graph) -> Value {
        let vertices = |c: &VertexColoring| -> Value {
            c.colors
                .iter()
                .enumerate()
                .map(|(v, &k)| (v.to_string(), json!(k)))
                .collect::<Map<_, _>>()
                .into()
        };
        let edges = |c: &EdgeColoring| -> Value {
            g.edges()
                .iter()
                .zip(&c.colors)
                .map(|(&(a, b), &k)| (format!("{a}-{b}"), json!(k)))
                .collect::<Map<_, _>>()
                .into()
        };
        match self {
            Coloring::Vertex(c) => vertices(c),
            Coloring::Edge(c) => edges(c),
            Coloring::Total(c) => json!({"vertices": vertices(&c.vertex), "edges": edges(&c.edge)}),
        }
    }
}
