//! Automorphism groups, isomorphism, group actions on colourings and the two
//! lifts of `Aut(G)` into the endline and subdivision graphs.

mod aut;
mod canon;
mod perm;
mod refine;

pub use aut::{
    automorphism_group, automorphism_group_with, edge_action, lift_to_endline, lift_to_subdivision,
    AutGroup,
};
pub use canon::{canonical_form, canonical_form_with, is_isomorphic, is_isomorphic_with, CanonicalForm};
pub use perm::Permutation;

pub(crate) use aut::{edge_action_unchecked, has_nontrivial_automorphism};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::Coloring;

/// True iff `p` maps every coloured element of `g` to one of the same colour.
/// Edge and total colourings use the induced edge action.
pub fn preserves(p: &Permutation, g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_domain(g)?;
    if p.len() != g.order() {
        return Err(Error::Contract("permutation degree differs from graph order".into()));
    }
    let vertex_ok = |colors: &[u32]| (0..g.order()).all(|v| colors[p.apply(v)] == colors[v]);
    let edge_ok = |colors: &[u32]| -> Result<bool> {
        let action = edge_action(p, g)?;
        Ok(action.iter().enumerate().all(|(e, &f)| colors[f] == colors[e]))
    };
    match c {
        Coloring::Vertex(vc) => Ok(vertex_ok(vc.colors())),
        Coloring::Edge(ec) => edge_ok(ec.colors()),
        Coloring::Total(tc) => Ok(vertex_ok(tc.vertex().colors()) && edge_ok(tc.edge().colors())?),
    }
}

/// The subgroup of `group` preserving `c`.
pub fn stabilizer(group: &AutGroup, g: &Graph, c: &Coloring) -> Result<AutGroup> {
    if group.degree() != g.order() {
        return Err(Error::Contract("group and graph have different degree".into()));
    }
    let mut kept = Vec::new();
    for p in group.elements() {
        if preserves(p, g, c)? {
            kept.push(p.clone());
        }
    }
    AutGroup::from_elements(g.order(), kept)
}
