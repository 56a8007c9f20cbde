//! Brauer graphs as ribbon graphs with vertex multiplicities.
//!
//! A Brauer graph is stored through its half-edges: each half-edge belongs
//! to one edge and sits at one vertex, and every vertex carries the cyclic
//! order of the half-edges around it. A loop contributes two half-edges to
//! the same vertex.

mod algebra;
mod canon;
mod format;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use algebra::{algebra_of, cycle_of, presentation_of, quiver_of, relations_of};
pub use canon::{canonical_form, find_isomorphism, is_isomorphic, BrauerIsomorphism, CanonicalForm};
pub use format::{parse_brauer_graph, serialize_brauer_graph};

use crate::report::Report;

/// Unvalidated graph data, as read from text or assembled by a builder.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawBrauerGraph {
    /// Vertex ids with their multiplicities.
    pub vertices: Vec<(String, u32)>,
    pub edges: Vec<RawEdge>,
    /// Cyclic order of half-edges around a vertex. May be left out for
    /// vertices of valency at most 2, where every order is the same.
    pub orders: Vec<(String, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    /// The two half-edges as `(half-edge id, vertex id)`.
    pub halves: [(String, String); 2],
}

impl RawEdge {
    pub fn new(id: &str, first: (&str, &str), second: (&str, &str)) -> Self {
        RawEdge {
            id: id.to_string(),
            halves: [
                (first.0.to_string(), first.1.to_string()),
                (second.0.to_string(), second.1.to_string()),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum BrauerIssue {
    DuplicateVertex(String),
    DuplicateEdge(String),
    DuplicateHalfEdge(String),
    InvalidId(String),
    /// Both half-edges of an edge carry the same id.
    FixedPoint(String),
    ZeroMultiplicity(String),
    UnknownVertex { edge: String, vertex: String },
    OrderForUnknownVertex(String),
    DuplicateOrder(String),
    /// Valency above 2 and no cyclic order given.
    MissingOrder(String),
    /// The order at a vertex does not list exactly its half-edges.
    OrderMismatch(String),
    Disconnected,
    NoEdges,
    /// A single edge with multiplicity 1 at both ends.
    ExcludedSingleEdge,
}

impl fmt::Display for BrauerIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrauerIssue::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            BrauerIssue::DuplicateEdge(e) => write!(f, "duplicate edge `{e}`"),
            BrauerIssue::DuplicateHalfEdge(h) => write!(f, "half-edge `{h}` is used twice"),
            BrauerIssue::InvalidId(id) => write!(f, "invalid identifier `{id}`"),
            BrauerIssue::FixedPoint(e) => {
                write!(f, "edge `{e}` pairs a half-edge with itself")
            }
            BrauerIssue::ZeroMultiplicity(v) => write!(f, "vertex `{v}` has multiplicity 0"),
            BrauerIssue::UnknownVertex { edge, vertex } => {
                write!(f, "edge `{edge}` refers to undeclared vertex `{vertex}`")
            }
            BrauerIssue::OrderForUnknownVertex(v) => write!(f, "order given for undeclared vertex `{v}`"),
            BrauerIssue::DuplicateOrder(v) => write!(f, "two orders given for vertex `{v}`"),
            BrauerIssue::MissingOrder(v) => write!(f, "vertex `{v}` needs a cyclic order"),
            BrauerIssue::OrderMismatch(v) => {
                write!(f, "order at vertex `{v}` must list each of its half-edges exactly once")
            }
            BrauerIssue::Disconnected => write!(f, "graph is not connected"),
            BrauerIssue::NoEdges => write!(f, "graph has no edges"),
            BrauerIssue::ExcludedSingleEdge => {
                write!(f, "a single edge with multiplicity 1 at both ends is excluded")
            }
        }
    }
}

/// A validated Brauer graph. Vertices, edges and half-edges are addressed
/// by index; ids are kept for output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerGraph {
    vertex_ids: Vec<String>,
    mult: Vec<u32>,
    edge_ids: Vec<String>,
    edge_halves: Vec<[usize; 2]>,
    half_ids: Vec<String>,
    half_edge: Vec<usize>,
    half_vertex: Vec<usize>,
    succ: Vec<usize>,
    rotation: Vec<Vec<usize>>,
}

pub fn validate_brauer_graph(raw: &RawBrauerGraph) -> Result<BrauerGraph, Report<BrauerIssue>> {
    let mut report = Report::new();
    let mut vertex_index = BTreeMap::new();
    let mut vertex_ids = Vec::new();
    let mut mult = Vec::new();
    for (v, m) in &raw.vertices {
        if !crate::names::is_valid_id(v) {
            report.push(BrauerIssue::InvalidId(v.clone()));
        }
        if vertex_index.insert(v.clone(), vertex_ids.len()).is_some() {
            report.push(BrauerIssue::DuplicateVertex(v.clone()));
            continue;
        }
        if *m == 0 {
            report.push(BrauerIssue::ZeroMultiplicity(v.clone()));
        }
        vertex_ids.push(v.clone());
        mult.push(*m);
    }
    let mut edge_seen = BTreeSet::new();
    let mut half_index = BTreeMap::new();
    let mut edge_ids = Vec::new();
    let mut edge_halves = Vec::new();
    let mut half_ids = Vec::new();
    let mut half_edge = Vec::new();
    let mut half_vertex = Vec::new();
    for e in &raw.edges {
        if !crate::names::is_valid_id(&e.id) {
            report.push(BrauerIssue::InvalidId(e.id.clone()));
        }
        if !edge_seen.insert(e.id.clone()) {
            report.push(BrauerIssue::DuplicateEdge(e.id.clone()));
            continue;
        }
        if e.halves[0].0 == e.halves[1].0 {
            report.push(BrauerIssue::FixedPoint(e.id.clone()));
            continue;
        }
        let mut ok = true;
        for (h, v) in &e.halves {
            if !crate::names::is_valid_id(h) {
                report.push(BrauerIssue::InvalidId(h.clone()));
                ok = false;
            }
            if half_index.contains_key(h) {
                report.push(BrauerIssue::DuplicateHalfEdge(h.clone()));
                ok = false;
            }
            if !vertex_index.contains_key(v) {
                report.push(BrauerIssue::UnknownVertex {
                    edge: e.id.clone(),
                    vertex: v.clone(),
                });
                ok = false;
            }
        }
        if !ok {
            continue;
        }
        let k = edge_ids.len();
        let mut pair = [0; 2];
        for (slot, (h, v)) in e.halves.iter().enumerate() {
            pair[slot] = half_ids.len();
            half_index.insert(h.clone(), half_ids.len());
            half_ids.push(h.clone());
            half_edge.push(k);
            half_vertex.push(vertex_index[v]);
        }
        edge_ids.push(e.id.clone());
        edge_halves.push(pair);
    }
    if !report.is_empty() {
        return Err(report);
    }

    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); vertex_ids.len()];
    for (h, &v) in half_vertex.iter().enumerate() {
        at_vertex[v].push(h);
    }
    let mut given: BTreeMap<usize, &Vec<String>> = BTreeMap::new();
    for (v, order) in &raw.orders {
        match vertex_index.get(v) {
            None => report.push(BrauerIssue::OrderForUnknownVertex(v.clone())),
            Some(&k) => {
                if given.insert(k, order).is_some() {
                    report.push(BrauerIssue::DuplicateOrder(v.clone()));
                }
            }
        }
    }
    let mut rotation = Vec::with_capacity(vertex_ids.len());
    for (v, halves) in at_vertex.iter().enumerate() {
        match given.get(&v) {
            None => {
                if halves.len() > 2 {
                    report.push(BrauerIssue::MissingOrder(vertex_ids[v].clone()));
                }
                rotation.push(halves.clone());
            }
            Some(order) => {
                let listed: Option<Vec<usize>> = order.iter().map(|h| half_index.get(h).copied()).collect();
                let valid = listed.as_ref().is_some_and(|listed| {
                    let mut sorted = listed.clone();
                    sorted.sort_unstable();
                    sorted == *halves
                });
                if !valid {
                    report.push(BrauerIssue::OrderMismatch(vertex_ids[v].clone()));
                }
                rotation.push(listed.unwrap_or_default());
            }
        }
    }
    if edge_ids.is_empty() {
        report.push(BrauerIssue::NoEdges);
    }
    if !report.is_empty() {
        return Err(report);
    }

    let mut succ = vec![0; half_ids.len()];
    for order in &rotation {
        for (k, &h) in order.iter().enumerate() {
            succ[h] = order[(k + 1) % order.len()];
        }
    }
    let graph = BrauerGraph {
        vertex_ids,
        mult,
        edge_ids,
        edge_halves,
        half_ids,
        half_edge,
        half_vertex,
        succ,
        rotation,
    };
    if !graph.is_connected() {
        report.push(BrauerIssue::Disconnected);
    } else if graph.edge_count() == 1 && graph.mult.iter().all(|&m| m == 1) && graph.vertex_count() == 2 {
        report.push(BrauerIssue::ExcludedSingleEdge);
    }
    report.into_result(|| graph)
}

impl BrauerGraph {
    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &h in &self.rotation[v] {
                let w = self.vertex_of(self.partner(h));
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn half_count(&self) -> usize {
        self.half_ids.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertex_ids[v]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edge_ids[e]
    }

    pub fn half_id(&self, h: usize) -> &str {
        &self.half_ids[h]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_ids.iter().position(|v| v == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_ids.iter().position(|e| e == id)
    }

    pub fn half_index(&self, id: &str) -> Option<usize> {
        self.half_ids.iter().position(|h| h == id)
    }

    pub fn multiplicity(&self, v: usize) -> u32 {
        self.mult[v]
    }

    pub fn halves(&self, e: usize) -> [usize; 2] {
        self.edge_halves[e]
    }

    pub fn edge_of(&self, h: usize) -> usize {
        self.half_edge[h]
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.half_vertex[h]
    }

    /// The other half-edge of the same edge.
    pub fn partner(&self, h: usize) -> usize {
        let [a, b] = self.edge_halves[self.half_edge[h]];
        if a == h {
            b
        } else {
            a
        }
    }

    /// The next half-edge in the cyclic order around the vertex of `h`.
    pub fn successor(&self, h: usize) -> usize {
        self.succ[h]
    }

    /// The cyclic order around a vertex, starting where it was declared.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Whether `h` is the only half-edge at a vertex of multiplicity 1.
    /// Such half-edges contribute no arrow to the quiver.
    pub fn is_truncated(&self, h: usize) -> bool {
        let v = self.half_vertex[h];
        self.rotation[v].len() == 1 && self.mult[v] == 1
    }

    pub fn to_raw(&self) -> RawBrauerGraph {
        RawBrauerGraph {
            vertices: self
                .vertex_ids
                .iter()
                .cloned()
                .zip(self.mult.iter().copied())
                .collect(),
            edges: (0..self.edge_count())
                .map(|e| {
                    let [a, b] = self.edge_halves[e];
                    RawEdge {
                        id: self.edge_ids[e].clone(),
                        halves: [
                            (self.half_ids[a].clone(), self.vertex_ids[self.half_vertex[a]].clone()),
                            (self.half_ids[b].clone(), self.vertex_ids[self.half_vertex[b]].clone()),
                        ],
                    }
                })
                .collect(),
            orders: (0..self.vertex_count())
                .filter(|&v| !self.rotation[v].is_empty())
                .map(|v| {
                    (
                        self.vertex_ids[v].clone(),
                        self.rotation[v].iter().map(|&h| self.half_ids[h].clone()).collect(),
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn graph(text: &str) -> BrauerGraph {
        parse_brauer_graph(text).unwrap()
    }

    /// One edge from a vertex of multiplicity 2 to a leaf of multiplicity 1.
    pub const E21: &str = "bvertex u mult=2\nbvertex w mult=1\nbedge E1 h1@u h2@w\n";

    /// Path graph with three edges, all multiplicities 1.
    pub const LINE3: &str = "bvertex v0 mult=1\nbvertex v1 mult=1\nbvertex v2 mult=1\nbvertex v3 mult=1\n\
        bedge E1 a0@v0 a1@v1\nbedge E2 b1@v1 b2@v2\nbedge E3 c2@v2 c3@v3\n\
        order v1 = a1,b1\norder v2 = b2,c2\n";

    pub const LOOP: &str = "bvertex v mult=1\nbedge E h@v k@v\norder v = h,k\n";

    pub const STAR3: &str = "bvertex c mult=1\nbvertex x mult=1\nbvertex y mult=1\nbvertex z mult=1\n\
        bedge E1 h1@c k1@x\nbedge E2 h2@c k2@y\nbedge E3 h3@c k3@z\norder c = h1,h2,h3\n";

    /// The annulus graph: points a, b, c with arcs 1 and 2 from a to c and
    /// arc 3 from c to b.
    pub const ANNULUS: &str = "bvertex a mult=1\nbvertex b mult=1\nbvertex c mult=1\n\
        bedge 1 p@a u@c\nbedge 2 a@a b@c\nbedge 3 v@c c@b\n\
        order a = p,a\norder c = u,v,b\n";
}
