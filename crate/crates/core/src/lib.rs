//! Exact symmetry-breaking invariants of small graphs.
//!
//! The crate computes automorphism groups, the distinguishing number and its
//! relatives (χ, D, χ_D, D′, χ′_D, D″) with witness colourings, the line,
//! endline, subdivision and middle graph transformations, explicit colouring
//! constructions, and corpus-wide verification sweeps over those quantities.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod limits;
pub mod symmetry;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{named_graph, parse_graph6, to_graph6, Graph, NamedGraphSpec, VertexLabel};
pub use invariants::{Coloring, EdgeColoring, InvariantKind, InvariantValue, TotalColoring, VertexColoring};
pub use limits::Limits;
pub use symmetry::{AutGroup, Permutation};
