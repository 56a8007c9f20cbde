//! Quivers, paths and presentations by generators and relations.
//!
//! Paths compose left to right: `ab` means "first `a`, then `b`", so the
//! source of a path is the source of its first arrow.

mod format;
mod path;
mod presentation;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub use format::{parse_presentation, serialize_presentation};
pub use path::{Path, PathError};
pub use presentation::{Presentation, PresentationError, Relation};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("invalid identifier `{0}`")]
    InvalidId(String),
}

/// A finite quiver. Vertices and arrows keep their insertion order, which is
/// the order used when serializing.
#[derive(Debug, Clone, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: BTreeMap<String, usize>,
    arrow_index: BTreeMap<String, usize>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts<V, S>(vertices: V, arrows: &[(&str, &str, &str)]) -> Result<Self, QuiverError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (id, s, t) in arrows {
            q.add_arrow(*id, *s, *t)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> Result<(), QuiverError> {
        let id = id.into();
        if !crate::names::is_valid_id(&id) {
            return Err(QuiverError::InvalidId(id));
        }
        if self.vertex_index.contains_key(&id) {
            return Err(QuiverError::DuplicateVertex(id));
        }
        self.vertex_index.insert(id.clone(), self.vertices.len());
        self.vertices.push(id);
        Ok(())
    }

    pub fn add_arrow(
        &mut self,
        id: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
    ) -> Result<(), QuiverError> {
        let (id, source, target) = (id.into(), source.into(), target.into());
        if !crate::names::is_valid_id(&id) {
            return Err(QuiverError::InvalidId(id));
        }
        if self.arrow_index.contains_key(&id) {
            return Err(QuiverError::DuplicateArrow(id));
        }
        for v in [&source, &target] {
            if !self.vertex_index.contains_key(v) {
                return Err(QuiverError::UnknownVertex {
                    arrow: id,
                    vertex: v.clone(),
                });
            }
        }
        self.arrow_index.insert(id.clone(), self.arrows.len());
        self.arrows.push(Arrow { id, source, target });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertex_index.contains_key(id)
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrow_index.get(id).map(|&k| &self.arrows[k])
    }

    pub(crate) fn arrow_position(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }

    pub fn outgoing<'a>(&'a self, vertex: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.iter().filter(move |a| a.source == vertex)
    }

    pub fn incoming<'a>(&'a self, vertex: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.iter().filter(move |a| a.target == vertex)
    }

    /// Connectivity of the underlying undirected graph. The empty quiver
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let n = self.vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        for a in &self.arrows {
            let (s, t) = (self.vertex_index[&a.source], self.vertex_index[&a.target]);
            adjacency[s].push(t);
            adjacency[t].push(s);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The subquiver on all vertices with the given arrows removed.
    pub fn without_arrows(&self, removed: &BTreeSet<String>) -> Quiver {
        let mut q = Quiver::new();
        for v in &self.vertices {
            q.add_vertex(v.clone()).expect("vertices are unique");
        }
        for a in self.arrows.iter().filter(|a| !removed.contains(&a.id)) {
            q.add_arrow(a.id.clone(), a.source.clone(), a.target.clone())
                .expect("arrows are unique");
        }
        q
    }
}

/// Equality ignores declaration order.
impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_index.keys().eq(other.vertex_index.keys())
            && self.arrow_index.len() == other.arrow_index.len()
            && self
                .arrows
                .iter()
                .all(|a| other.arrow(&a.id) == Some(a))
    }
}

impl Eq for Quiver {}
