use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::{Path, PathError, Quiver};

/// A generator of the ideal: a zero relation or a commutativity relation
/// `p - q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Monomial(Path),
    Binomial(Path, Path),
}

impl Relation {
    pub fn paths(&self) -> Vec<&Path> {
        match self {
            Relation::Monomial(p) => vec![p],
            Relation::Binomial(p, q) => vec![p, q],
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Monomial(p) => write!(f, "{p}"),
            Relation::Binomial(p, q) => write!(f, "{p} - {q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relation `{relation}`: {source}")]
    Path {
        relation: String,
        #[source]
        source: PathError,
    },
    #[error("zero relation `{0}` has length below 2")]
    ShortMonomial(String),
    #[error("commutativity relation `{0}` has a trivial side")]
    TrivialSide(String),
    #[error("commutativity relation `{0}` joins paths with different endpoints")]
    Endpoints(String),
    #[error("commutativity relation `{0}` has one side a prefix of the other")]
    Prefix(String),
}

/// A quiver with a finite list of relations generating the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    quiver: Quiver,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self, PresentationError> {
        for r in &relations {
            for p in r.paths() {
                p.check_in(&quiver).map_err(|source| PresentationError::Path {
                    relation: r.to_string(),
                    source,
                })?;
            }
            match r {
                Relation::Monomial(p) if p.len() < 2 => {
                    return Err(PresentationError::ShortMonomial(r.to_string()))
                }
                Relation::Monomial(_) => {}
                Relation::Binomial(p, q) => {
                    if p.is_trivial() || q.is_trivial() {
                        return Err(PresentationError::TrivialSide(r.to_string()));
                    }
                    if p.source() != q.source() || p.target() != q.target() {
                        return Err(PresentationError::Endpoints(r.to_string()));
                    }
                    if p.arrows().starts_with(q.arrows()) || q.arrows().starts_with(p.arrows()) {
                        return Err(PresentationError::Prefix(r.to_string()));
                    }
                }
            }
        }
        Ok(Presentation { quiver, relations })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Path> {
        self.relations.iter().filter_map(|r| match r {
            Relation::Monomial(p) => Some(p),
            _ => None,
        })
    }

    /// Whether the path contains a zero relation as a subpath.
    pub fn contains_monomial(&self, path: &Path) -> bool {
        self.monomials().any(|m| m.is_subpath_of(path))
    }

    /// Dimension of `kQ/I`, found by enumerating paths and merging the ones
    /// identified by commutativity relations.
    ///
    /// Returns `None` when no length bound up to a generous cap shows every
    /// long path to be zero (in particular for infinite-dimensional
    /// algebras).
    pub fn dimension(&self) -> Option<usize> {
        PathClasses::new(self).dimension()
    }
}

const PATH_LIMIT: usize = 250_000;

/// Paths in index form for the class computation.
struct PathClasses<'a> {
    presentation: &'a Presentation,
    monomials: Vec<Vec<usize>>,
    binomials: Vec<(Vec<usize>, Vec<usize>)>,
    max_relation: usize,
}

impl<'a> PathClasses<'a> {
    fn new(presentation: &'a Presentation) -> Self {
        let q = presentation.quiver();
        let encode =
            |p: &Path| -> Vec<usize> { p.arrows().iter().map(|a| q.arrow_position(a).unwrap()).collect() };
        let mut monomials = Vec::new();
        let mut binomials = Vec::new();
        for r in presentation.relations() {
            match r {
                Relation::Monomial(p) => monomials.push(encode(p)),
                Relation::Binomial(p, q) => binomials.push((encode(p), encode(q))),
            }
        }
        let max_relation = presentation
            .relations()
            .iter()
            .flat_map(|r| r.paths())
            .map(Path::len)
            .max()
            .unwrap_or(1);
        PathClasses {
            presentation,
            monomials,
            binomials,
            max_relation,
        }
    }

    fn dimension(&self) -> Option<usize> {
        let first = self.max_relation + 1;
        (first..=4 * first + 8).find_map(|bound| self.dimension_below(bound))
    }

    fn has_monomial_suffix(&self, word: &[usize]) -> bool {
        self.monomials.iter().any(|m| word.ends_with(m))
    }

    fn has_monomial(&self, word: &[usize]) -> bool {
        self.monomials
            .iter()
            .any(|m| word.windows(m.len()).any(|w| w == m.as_slice()))
    }

    /// Monomial-free nontrivial paths of length at most `reach`.
    fn monomial_free_paths(&self, reach: usize) -> Option<Vec<Vec<usize>>> {
        let q = self.presentation.quiver();
        let arrows = q.arrows();
        let mut out: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
        let mut frontier = out.clone();
        for _ in 1..reach {
            let mut next = Vec::new();
            for w in &frontier {
                let end = &arrows[*w.last().unwrap()].target;
                for (k, a) in arrows.iter().enumerate() {
                    if &a.source != end {
                        continue;
                    }
                    let mut longer = w.clone();
                    longer.push(k);
                    if !self.has_monomial_suffix(&longer) {
                        next.push(longer);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            if out.len() > PATH_LIMIT {
                return None;
            }
            frontier = next;
        }
        Some(out)
    }

    /// Counts the classes of paths shorter than `bound`, provided every path
    /// of length `bound` can be shown to be zero.
    fn dimension_below(&self, bound: usize) -> Option<usize> {
        let reach = bound + self.max_relation;
        let paths = self.monomial_free_paths(reach)?;
        let index: HashMap<&[usize], usize> =
            paths.iter().enumerate().map(|(k, w)| (w.as_slice(), k)).collect();
        let mut classes = UnionFind::new(paths.len());
        let mut killed = vec![false; paths.len()];
        for (k, word) in paths.iter().enumerate() {
            for (lhs, rhs) in &self.binomials {
                for (from, to) in [(lhs, rhs), (rhs, lhs)] {
                    if from.len() > word.len() {
                        continue;
                    }
                    for pos in 0..=word.len() - from.len() {
                        if word[pos..pos + from.len()] != from[..] {
                            continue;
                        }
                        let mut image = word[..pos].to_vec();
                        image.extend_from_slice(to);
                        image.extend_from_slice(&word[pos + from.len()..]);
                        if self.has_monomial(&image) {
                            killed[k] = true;
                        } else if let Some(&j) = index.get(image.as_slice()) {
                            classes.union(k, j);
                        }
                    }
                }
            }
        }
        let mut zero_class = vec![false; paths.len()];
        for k in 0..paths.len() {
            if killed[k] {
                zero_class[classes.find(k)] = true;
            }
        }
        let long_paths_vanish = paths
            .iter()
            .enumerate()
            .filter(|(_, w)| w.len() == bound)
            .all(|(k, _)| zero_class[classes.find(k)]);
        if !long_paths_vanish {
            return None;
        }
        for (k, w) in paths.iter().enumerate() {
            if w.len() >= bound {
                zero_class[classes.find(k)] = true;
            }
        }
        let mut roots: Vec<usize> = (0..paths.len())
            .filter(|&k| paths[k].len() < bound)
            .map(|k| classes.find(k))
            .filter(|&r| !zero_class[r])
            .collect();
        roots.sort_unstable();
        roots.dedup();
        Some(self.presentation.quiver().vertex_count() + roots.len())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(q: &Quiver, arrows: &[&str]) -> Path {
        Path::from_arrows(q, arrows).unwrap()
    }

    #[test]
    fn truncated_polynomial_ring() {
        let q = Quiver::from_parts(["1"], &[("x", "1", "1")]).unwrap();
        let p = Presentation::new(q.clone(), vec![Relation::Monomial(path(&q, &["x", "x", "x"]))]).unwrap();
        assert_eq!(p.dimension(), Some(3));
    }

    #[test]
    fn free_loop_is_infinite() {
        let q = Quiver::from_parts(["1"], &[("x", "1", "1")]).unwrap();
        let p = Presentation::new(q, vec![]).unwrap();
        assert_eq!(p.dimension(), None);
    }

    #[test]
    fn commuting_nilpotent_pair() {
        // k<x,y>/(x^2, y^2, xy - yx) has basis 1, x, y, xy.
        let q = Quiver::from_parts(["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let rels = vec![
            Relation::Binomial(path(&q, &["x", "y"]), path(&q, &["y", "x"])),
            Relation::Monomial(path(&q, &["x", "x"])),
            Relation::Monomial(path(&q, &["y", "y"])),
        ];
        assert_eq!(Presentation::new(q, rels).unwrap().dimension(), Some(4));
    }

    #[test]
    fn binomial_invariants() {
        let q = Quiver::from_parts(["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "1", "1")])
            .unwrap();
        let ab = path(&q, &["a", "b"]);
        let a = path(&q, &["a"]);
        let c = path(&q, &["c"]);
        assert!(matches!(
            Presentation::new(q.clone(), vec![Relation::Binomial(ab.clone(), a.clone())]),
            Err(PresentationError::Endpoints(_))
        ));
        assert!(matches!(
            Presentation::new(q.clone(), vec![Relation::Monomial(c.clone())]),
            Err(PresentationError::ShortMonomial(_))
        ));
        let cab = path(&q, &["c", "a", "b"]);
        assert!(Presentation::new(q.clone(), vec![Relation::Binomial(ab.clone(), cab)]).is_ok());
        let cc = path(&q, &["c", "c"]);
        assert!(matches!(
            Presentation::new(q, vec![Relation::Binomial(c, cc)]),
            Err(PresentationError::Prefix(_))
        ));
    }
}
