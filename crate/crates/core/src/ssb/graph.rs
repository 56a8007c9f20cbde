use std::collections::BTreeMap;

use thiserror::Error;

use super::SsbPresentation;
use crate::brauer::{validate_brauer_graph, BrauerGraph, RawBrauerGraph, RawEdge};
use crate::names::NameAllocator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex `{0}` occurs {1} times on vertex cycles instead of twice")]
    Occurrences(String, usize),
    #[error("recovered graph is invalid: {0}")]
    Invalid(String),
}

/// Recovers the Brauer graph of a symmetric special biserial algebra.
///
/// Each vertex cycle becomes a graph vertex whose half-edges are the arrows
/// of the cycle, in cycle order, and each uniserial projective adds a leaf
/// of multiplicity 1. The two half-edges labelled by a quiver vertex form
/// the edge with that id, so the algebra of the result has the same quiver
/// ids as the input.
pub fn graph_of_ssb(l: &SsbPresentation) -> Result<BrauerGraph, GraphError> {
    let q = l.quiver();
    let mut raw = RawBrauerGraph::default();
    let mut half_names = NameAllocator::with_reserved(q.arrows().iter().map(|a| a.id.clone()));
    let mut vertex_names = NameAllocator::new();
    let mut germs: BTreeMap<&str, Vec<(String, String)>> = BTreeMap::new();
    for c in l.vertex_cycles() {
        let id = vertex_names.allocate(&format!("cyc({})", c.arrows.join(".")));
        raw.vertices.push((id.clone(), c.multiplicity));
        for a in &c.arrows {
            let source = q.arrow(a).expect("cycle arrows exist").source.as_str();
            germs.entry(source).or_default().push((a.clone(), id.clone()));
        }
        raw.orders.push((id, c.arrows.clone()));
    }
    for (v, d) in l.projectives() {
        if d.second.is_trivial() {
            let id = vertex_names.allocate(&format!("leaf({v})"));
            let half = half_names.allocate(&format!("t({v})"));
            raw.vertices.push((id.clone(), 1));
            germs.entry(v.as_str()).or_default().push((half.clone(), id.clone()));
            raw.orders.push((id, vec![half]));
        }
    }
    for v in q.vertices() {
        match germs.get(v.as_str()).map(Vec::as_slice) {
            Some([first, second]) => raw.edges.push(RawEdge {
                id: v.clone(),
                halves: [first.clone(), second.clone()],
            }),
            other => return Err(GraphError::Occurrences(v.clone(), other.map_or(0, <[_]>::len))),
        }
    }
    validate_brauer_graph(&raw).map_err(|r| GraphError::Invalid(r.to_string()))
}
