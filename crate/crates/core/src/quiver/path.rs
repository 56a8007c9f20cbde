use std::fmt;

use thiserror::Error;

use super::Quiver;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("cannot compose: path ends at `{target}` but the next starts at `{start}`")]
    NotComposable { target: String, start: String },
    #[error("path `{0}` is not cyclic")]
    NotCyclic(String),
    #[error("trivial path has no rotations")]
    Trivial,
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("path needs at least one arrow")]
    Empty,
}

/// A path in a quiver, recorded with the vertices it visits.
///
/// The vertex list always has one more entry than the arrow list, so the
/// trivial path `e_i` is `vertices = [i]`, `arrows = []`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    arrows: Vec<String>,
    vertices: Vec<String>,
}

impl Path {
    pub fn trivial(vertex: impl Into<String>) -> Self {
        Path {
            arrows: Vec::new(),
            vertices: vec![vertex.into()],
        }
    }

    /// Builds a nontrivial path from arrow ids, checking composability.
    pub fn from_arrows<S: AsRef<str>>(quiver: &Quiver, arrows: &[S]) -> Result<Self, PathError> {
        let first = arrows.first().ok_or(PathError::Empty)?.as_ref();
        let first = quiver
            .arrow(first)
            .ok_or_else(|| PathError::UnknownArrow(first.to_string()))?;
        let mut path = Path::trivial(first.source.clone());
        for id in arrows {
            let id = id.as_ref();
            let arrow = quiver
                .arrow(id)
                .ok_or_else(|| PathError::UnknownArrow(id.to_string()))?;
            if arrow.source != *path.target() {
                return Err(PathError::NotComposable {
                    target: path.target().clone(),
                    start: arrow.source.clone(),
                });
            }
            path.arrows.push(arrow.id.clone());
            path.vertices.push(arrow.target.clone());
        }
        Ok(path)
    }

    pub fn arrow(quiver: &Quiver, id: &str) -> Result<Self, PathError> {
        Self::from_arrows(quiver, &[id])
    }

    /// Checks that every arrow exists in `quiver` and runs between the
    /// recorded vertices.
    pub fn check_in(&self, quiver: &Quiver) -> Result<(), PathError> {
        for v in &self.vertices {
            if !quiver.has_vertex(v) {
                return Err(PathError::UnknownVertex(v.clone()));
            }
        }
        for (k, id) in self.arrows.iter().enumerate() {
            let arrow = quiver
                .arrow(id)
                .ok_or_else(|| PathError::UnknownArrow(id.clone()))?;
            if arrow.source != self.vertices[k] || arrow.target != self.vertices[k + 1] {
                return Err(PathError::NotComposable {
                    target: self.vertices[k].clone(),
                    start: arrow.source.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &String {
        &self.vertices[0]
    }

    pub fn target(&self) -> &String {
        self.vertices.last().expect("paths visit at least one vertex")
    }

    pub fn arrows(&self) -> &[String] {
        &self.arrows
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn is_cyclic(&self) -> bool {
        self.source() == self.target()
    }

    /// Left-to-right concatenation `self` then `other`.
    pub fn compose(&self, other: &Path) -> Result<Path, PathError> {
        if self.target() != other.source() {
            return Err(PathError::NotComposable {
                target: self.target().clone(),
                start: other.source().clone(),
            });
        }
        let mut out = self.clone();
        out.arrows.extend(other.arrows.iter().cloned());
        out.vertices.extend(other.vertices[1..].iter().cloned());
        Ok(out)
    }

    /// The rotation starting at arrow `k mod len`.
    pub fn rotate(&self, k: usize) -> Result<Path, PathError> {
        if self.is_trivial() {
            return Err(PathError::Trivial);
        }
        if !self.is_cyclic() {
            return Err(PathError::NotCyclic(self.to_string()));
        }
        let n = self.len();
        let k = k % n;
        let arrows: Vec<String> = (0..n).map(|j| self.arrows[(k + j) % n].clone()).collect();
        let vertices: Vec<String> = (0..=n).map(|j| self.vertices[(k + j) % n].clone()).collect();
        Ok(Path { arrows, vertices })
    }

    /// `self` repeated `times` times; `times = 0` gives the trivial path.
    pub fn power(&self, times: usize) -> Result<Path, PathError> {
        if !self.is_cyclic() {
            return Err(PathError::NotCyclic(self.to_string()));
        }
        let mut out = Path::trivial(self.source().clone());
        for _ in 0..times {
            out = out.compose(self)?;
        }
        Ok(out)
    }

    /// The prefix made of the first `k` arrows.
    pub fn prefix(&self, k: usize) -> Path {
        Path {
            arrows: self.arrows[..k].to_vec(),
            vertices: self.vertices[..=k].to_vec(),
        }
    }

    /// The subpath from arrow `start` (inclusive) to arrow `end` (exclusive).
    pub fn subpath(&self, start: usize, end: usize) -> Path {
        Path {
            arrows: self.arrows[start..end].to_vec(),
            vertices: self.vertices[start..=end].to_vec(),
        }
    }

    /// Whether `self` occurs as a contiguous block of `other`. A trivial
    /// path is a subpath exactly when `other` visits its vertex.
    pub fn is_subpath_of(&self, other: &Path) -> bool {
        if self.is_trivial() {
            return other.vertices.contains(self.source());
        }
        other.arrows.windows(self.len()).enumerate().any(|(k, w)| {
            w == self.arrows.as_slice() && other.vertices[k] == *self.source()
        })
    }

    /// Renames arrows and vertices.
    pub fn relabel(&self, vertex: impl Fn(&str) -> String, arrow: impl Fn(&str) -> String) -> Path {
        Path {
            arrows: self.arrows.iter().map(|a| arrow(a)).collect(),
            vertices: self.vertices.iter().map(|v| vertex(v)).collect(),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            write!(f, "e({})", self.source())
        } else {
            write!(f, "{}", self.arrows.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Quiver {
        Quiver::from_parts(["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap()
    }

    fn two_cycle() -> Quiver {
        Quiver::from_parts(["1", "2"], &[("x", "1", "2"), ("y", "2", "1")]).unwrap()
    }

    #[test]
    fn compose_examples() {
        let q = a3();
        let a = Path::arrow(&q, "a").unwrap();
        let b = Path::arrow(&q, "b").unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.arrows(), ["a", "b"]);
        assert_eq!(ab.source(), "1");
        assert_eq!(ab.target(), "3");
        assert_eq!(Path::trivial("1").compose(&a).unwrap(), a);
        assert_eq!(
            b.compose(&a),
            Err(PathError::NotComposable {
                target: "3".into(),
                start: "1".into()
            })
        );
    }

    #[test]
    fn rotate_examples() {
        let q = two_cycle();
        let xy = Path::from_arrows(&q, &["x", "y"]).unwrap();
        assert_eq!(xy.rotate(1).unwrap().arrows(), ["y", "x"]);
        assert_eq!(xy.rotate(1).unwrap().source(), "2");
        assert_eq!(xy.rotate(2).unwrap(), xy);
        assert_eq!(xy.rotate(0).unwrap(), xy);
        let ab = Path::from_arrows(&a3(), &["a", "b"]).unwrap();
        assert!(matches!(ab.rotate(1), Err(PathError::NotCyclic(_))));
        assert_eq!(Path::trivial("1").rotate(1), Err(PathError::Trivial));
    }

    #[test]
    fn subpath_examples() {
        let q = a3();
        let ab = Path::from_arrows(&q, &["a", "b"]).unwrap();
        let a = Path::arrow(&q, "a").unwrap();
        let b = Path::arrow(&q, "b").unwrap();
        assert!(b.is_subpath_of(&ab));
        assert!(!ab.is_subpath_of(&a));
        assert!(Path::trivial("2").is_subpath_of(&ab));
        assert!(!Path::trivial("2").is_subpath_of(&Path::trivial("1")));
    }

    #[test]
    fn non_composable_arrow_list() {
        assert!(matches!(
            Path::from_arrows(&a3(), &["b", "a"]),
            Err(PathError::NotComposable { .. })
        ));
    }
}
