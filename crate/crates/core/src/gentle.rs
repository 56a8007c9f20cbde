//! Special biserial and gentle presentations, maximal paths and the socle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::quiver::{Path, Presentation, Quiver, Relation};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum GentleIssue {
    /// More than two arrows start at the vertex.
    TooManyOutgoing(String),
    /// More than two arrows end at the vertex.
    TooManyIncoming(String),
    /// The arrow is followed by two arrows without a relation.
    AmbiguousSuccessor(String),
    /// The arrow is preceded by two arrows without a relation.
    AmbiguousPredecessor(String),
    /// The arrow is followed by two arrows, both with a relation.
    ExtraZeroSuccessor(String),
    /// The arrow is preceded by two arrows, both with a relation.
    ExtraZeroPredecessor(String),
    NotQuadraticMonomial(String),
    /// A cycle of arrows with no relation between consecutive arrows.
    InfiniteDimensional(Vec<String>),
    Disconnected,
    Empty,
    NoArrows,
}

impl fmt::Display for GentleIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GentleIssue::TooManyOutgoing(v) => write!(f, "more than two arrows start at vertex `{v}`"),
            GentleIssue::TooManyIncoming(v) => write!(f, "more than two arrows end at vertex `{v}`"),
            GentleIssue::AmbiguousSuccessor(a) => {
                write!(f, "arrow `{a}` has two successors with nonzero composition")
            }
            GentleIssue::AmbiguousPredecessor(a) => {
                write!(f, "arrow `{a}` has two predecessors with nonzero composition")
            }
            GentleIssue::ExtraZeroSuccessor(a) => {
                write!(f, "arrow `{a}` has two successors with zero composition")
            }
            GentleIssue::ExtraZeroPredecessor(a) => {
                write!(f, "arrow `{a}` has two predecessors with zero composition")
            }
            GentleIssue::NotQuadraticMonomial(r) => {
                write!(f, "relation `{r}` is not a zero relation of length 2")
            }
            GentleIssue::InfiniteDimensional(c) => {
                write!(f, "cycle `{}` avoids all relations, so the algebra is infinite dimensional", c.join(" "))
            }
            GentleIssue::Disconnected => write!(f, "quiver is not connected"),
            GentleIssue::Empty => write!(f, "quiver has no vertices"),
            GentleIssue::NoArrows => write!(f, "quiver has a single vertex and no arrows"),
        }
    }
}

/// Composable arrow pairs that are length-2 zero relations.
pub(crate) fn zero_pairs(p: &Presentation) -> BTreeSet<(String, String)> {
    p.monomials()
        .filter(|m| m.len() == 2)
        .map(|m| (m.arrows()[0].clone(), m.arrows()[1].clone()))
        .collect()
}

/// Checks that each vertex has at most two arrows in and out, and that each
/// arrow has at most one nonzero continuation on either side.
pub fn validate_special_biserial(p: &Presentation) -> Report<GentleIssue> {
    let q = p.quiver();
    let zero = zero_pairs(p);
    let mut report = Report::new();
    for v in q.vertices() {
        if q.outgoing(v).count() > 2 {
            report.push(GentleIssue::TooManyOutgoing(v.clone()));
        }
        if q.incoming(v).count() > 2 {
            report.push(GentleIssue::TooManyIncoming(v.clone()));
        }
    }
    for a in q.arrows() {
        let allowed_after = q
            .outgoing(&a.target)
            .filter(|b| !zero.contains(&(a.id.clone(), b.id.clone())))
            .count();
        if allowed_after > 1 {
            report.push(GentleIssue::AmbiguousSuccessor(a.id.clone()));
        }
        let allowed_before = q
            .incoming(&a.source)
            .filter(|c| !zero.contains(&(c.id.clone(), a.id.clone())))
            .count();
        if allowed_before > 1 {
            report.push(GentleIssue::AmbiguousPredecessor(a.id.clone()));
        }
    }
    report
}

/// A presentation satisfying the gentle conditions, together with its
/// maximal paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentleAlgebra {
    presentation: Presentation,
    zero: BTreeSet<(String, String)>,
    maximal: Vec<Path>,
    extended: Vec<Path>,
}

pub fn validate_gentle(p: Presentation) -> Result<GentleAlgebra, Report<GentleIssue>> {
    let q = p.quiver();
    let mut report = Report::new();
    if q.vertex_count() == 0 {
        report.push(GentleIssue::Empty);
        return Err(report);
    }
    if q.vertex_count() == 1 && q.arrow_count() == 0 {
        report.push(GentleIssue::NoArrows);
        return Err(report);
    }
    if !q.is_connected() {
        report.push(GentleIssue::Disconnected);
    }
    for r in p.relations() {
        let quadratic = matches!(r, Relation::Monomial(m) if m.len() == 2);
        if !quadratic {
            report.push(GentleIssue::NotQuadraticMonomial(r.to_string()));
        }
    }
    report.extend(validate_special_biserial(&p).into_issues());
    let zero = zero_pairs(&p);
    for a in q.arrows() {
        let zero_after = q
            .outgoing(&a.target)
            .filter(|b| zero.contains(&(a.id.clone(), b.id.clone())))
            .count();
        if zero_after > 1 {
            report.push(GentleIssue::ExtraZeroSuccessor(a.id.clone()));
        }
        let zero_before = q
            .incoming(&a.source)
            .filter(|c| zero.contains(&(c.id.clone(), a.id.clone())))
            .count();
        if zero_before > 1 {
            report.push(GentleIssue::ExtraZeroPredecessor(a.id.clone()));
        }
    }
    if !report.is_empty() {
        return Err(report);
    }
    if let Some(cycle) = relation_free_cycle(q, &zero) {
        report.push(GentleIssue::InfiniteDimensional(cycle));
        return Err(report);
    }
    let maximal = maximal_paths_of(q, &zero);
    let extended = extended_of(q, &zero, &maximal);
    Ok(GentleAlgebra {
        presentation: p,
        zero,
        maximal,
        extended,
    })
}

/// Allowed successor of an arrow: the unique continuation without a relation.
fn allowed_next<'a>(q: &'a Quiver, zero: &BTreeSet<(String, String)>, a: &str) -> Vec<&'a str> {
    let target = &q.arrow(a).expect("known arrow").target;
    q.outgoing(target)
        .filter(|b| !zero.contains(&(a.to_string(), b.id.clone())))
        .map(|b| b.id.as_str())
        .collect()
}

/// Depth-first search for a cycle in the allowed-successor graph.
fn relation_free_cycle(q: &Quiver, zero: &BTreeSet<(String, String)>) -> Option<Vec<String>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    fn visit<'a>(
        q: &'a Quiver,
        zero: &BTreeSet<(String, String)>,
        a: &'a str,
        marks: &mut BTreeMap<&'a str, Mark>,
        stack: &mut Vec<&'a str>,
    ) -> Option<Vec<String>> {
        marks.insert(a, Mark::Open);
        stack.push(a);
        for b in allowed_next(q, zero, a) {
            match marks[b] {
                Mark::Open => {
                    let start = stack.iter().position(|x| *x == b).unwrap();
                    return Some(stack[start..].iter().map(|s| s.to_string()).collect());
                }
                Mark::New => {
                    if let Some(c) = visit(q, zero, b, marks, stack) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
        }
        stack.pop();
        marks.insert(a, Mark::Done);
        None
    }
    let mut marks: BTreeMap<&str, Mark> = q.arrows().iter().map(|a| (a.id.as_str(), Mark::New)).collect();
    for a in q.arrows() {
        if marks[a.id.as_str()] == Mark::New {
            if let Some(c) = visit(q, zero, &a.id, &mut marks, &mut Vec::new()) {
                return Some(c);
            }
        }
    }
    None
}

/// Chains of allowed successors starting at arrows without an allowed
/// predecessor, sorted.
fn maximal_paths_of(q: &Quiver, zero: &BTreeSet<(String, String)>) -> Vec<Path> {
    let has_predecessor: BTreeSet<&str> = q
        .arrows()
        .iter()
        .flat_map(|a| allowed_next(q, zero, &a.id))
        .collect();
    let mut out = Vec::new();
    for a in q.arrows() {
        if has_predecessor.contains(a.id.as_str()) {
            continue;
        }
        let mut arrows = vec![a.id.as_str()];
        while let Some(b) = allowed_next(q, zero, arrows.last().unwrap()).first().copied() {
            arrows.push(b);
        }
        out.push(Path::from_arrows(q, &arrows).expect("allowed chains compose"));
    }
    out.sort();
    out
}

fn extended_of(q: &Quiver, zero: &BTreeSet<(String, String)>, maximal: &[Path]) -> Vec<Path> {
    let mut out = maximal.to_vec();
    for v in q.vertices() {
        let incoming: Vec<_> = q.incoming(v).collect();
        let outgoing: Vec<_> = q.outgoing(v).collect();
        let add = match (incoming.as_slice(), outgoing.as_slice()) {
            ([_], []) | ([], [_]) => true,
            ([a], [b]) => !zero.contains(&(a.id.clone(), b.id.clone())),
            _ => false,
        };
        if add {
            out.push(Path::trivial(v.clone()));
        }
    }
    out
}

impl GentleAlgebra {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    /// Whether `ab` is one of the zero relations.
    pub fn is_zero_pair(&self, a: &str, b: &str) -> bool {
        self.zero.contains(&(a.to_string(), b.to_string()))
    }

    /// Nontrivial paths that cannot be extended on either side, sorted.
    pub fn maximal_paths(&self) -> &[Path] {
        &self.maximal
    }

    /// The maximal paths followed by the trivial paths `e_i` at vertices that
    /// lie on only one maximal path occurrence.
    pub fn extended_maximal_paths(&self) -> &[Path] {
        &self.extended
    }

    /// All paths avoiding the relations, trivial paths first.
    pub fn nonzero_paths(&self) -> Vec<Path> {
        let q = self.quiver();
        let mut out: Vec<Path> = q.vertices().iter().map(|v| Path::trivial(v.clone())).collect();
        let mut frontier: Vec<Path> = q
            .arrows()
            .iter()
            .map(|a| Path::arrow(q, &a.id).unwrap())
            .collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                let last = p.arrows().last().unwrap();
                for b in q.outgoing(p.target()) {
                    if !self.is_zero_pair(last, &b.id) {
                        next.push(p.compose(&Path::arrow(q, &b.id).unwrap()).unwrap());
                    }
                }
            }
            out.append(&mut frontier);
            frontier = next;
        }
        out
    }

    pub fn dimension(&self) -> usize {
        self.nonzero_paths().len()
    }

    /// Nonzero paths killed by every arrow on both sides, found by testing
    /// each product against the relations directly.
    pub fn socle_basis(&self) -> Vec<Path> {
        let q = self.quiver();
        let p = &self.presentation;
        let is_zero = |path: &Path| p.contains_monomial(path);
        let mut out: Vec<Path> = self
            .nonzero_paths()
            .into_iter()
            .filter(|path| {
                q.arrows().iter().all(|a| {
                    let a = Path::arrow(q, &a.id).unwrap();
                    let left = a.compose(path).map_or(true, |x| is_zero(&x));
                    let right = path.compose(&a).map_or(true, |x| is_zero(&x));
                    left && right
                })
            })
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_presentation;

    fn gentle(text: &str) -> GentleAlgebra {
        validate_gentle(parse_presentation(text).unwrap()).unwrap()
    }

    fn names(paths: &[Path]) -> Vec<String> {
        paths.iter().map(|p| p.to_string()).collect()
    }

    const A3R: &str = "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrel mono a b\n";
    const LOOPX: &str = "vertex 1\narrow x 1 1\nrel mono x x\n";
    const ANNULUS_JACOBIAN: &str = "vertex 1\nvertex 2\nvertex 3\narrow p 1 2\narrow u 1 3\narrow v 3 2\n";

    #[test]
    fn special_biserial_violations() {
        let p = parse_presentation("vertex 1\nvertex 2\narrow a 1 2").unwrap();
        assert!(validate_special_biserial(&p).is_empty());
        let p = parse_presentation(
            "vertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\narrow c 1 2",
        )
        .unwrap();
        assert_eq!(
            validate_special_biserial(&p).issues(),
            &[GentleIssue::TooManyOutgoing("1".into()), GentleIssue::TooManyIncoming("2".into())]
        );
        let p = parse_presentation(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a 1 2\narrow b 2 3\narrow c 2 4",
        )
        .unwrap();
        assert_eq!(
            validate_special_biserial(&p).issues(),
            &[GentleIssue::AmbiguousSuccessor("a".into())]
        );
    }

    #[test]
    fn gentle_examples() {
        assert!(validate_gentle(parse_presentation(A3R).unwrap()).is_ok());
        assert!(validate_gentle(parse_presentation(LOOPX).unwrap()).is_ok());
        let err = validate_gentle(parse_presentation("vertex 1\narrow x 1 1").unwrap()).unwrap_err();
        assert_eq!(err.issues(), &[GentleIssue::InfiniteDimensional(vec!["x".into()])]);
        let err = validate_gentle(parse_presentation("vertex 1").unwrap()).unwrap_err();
        assert_eq!(err.issues(), &[GentleIssue::NoArrows]);
        let err = validate_gentle(parse_presentation("vertex 1\nvertex 2").unwrap()).unwrap_err();
        assert_eq!(err.issues(), &[GentleIssue::Disconnected]);
    }

    #[test]
    fn longer_or_commutativity_relations_are_not_gentle() {
        let text = "vertex 1\narrow x 1 1\nrel mono x x x\n";
        let err = validate_gentle(parse_presentation(text).unwrap()).unwrap_err();
        assert_eq!(err.issues(), &[GentleIssue::NotQuadraticMonomial("x x x".into())]);
    }

    #[test]
    fn two_zero_successors_violate_s4() {
        let text = "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a 1 2\narrow b 2 3\narrow c 2 4\nrel mono a b\nrel mono a c\n";
        let err = validate_gentle(parse_presentation(text).unwrap()).unwrap_err();
        assert_eq!(err.issues(), &[GentleIssue::ExtraZeroSuccessor("a".into())]);
    }

    #[test]
    fn nonzero_paths_examples() {
        assert_eq!(names(&gentle(A3R).nonzero_paths()), ["e(1)", "e(2)", "e(3)", "a", "b"]);
        assert_eq!(names(&gentle(LOOPX).nonzero_paths()), ["e(1)", "x"]);
        assert_eq!(
            names(&gentle(ANNULUS_JACOBIAN).nonzero_paths()),
            ["e(1)", "e(2)", "e(3)", "p", "u", "v", "u v"]
        );
    }

    #[test]
    fn maximal_path_examples() {
        assert_eq!(names(gentle(A3R).maximal_paths()), ["a", "b"]);
        assert_eq!(names(gentle(LOOPX).maximal_paths()), ["x"]);
        let a = gentle("vertex 1\nvertex 2\narrow a 1 2");
        assert_eq!(names(a.maximal_paths()), ["a"]);
        assert_eq!(names(a.extended_maximal_paths()), ["a", "e(1)", "e(2)"]);
        assert_eq!(names(gentle(A3R).extended_maximal_paths()), ["a", "b", "e(1)", "e(3)"]);
        assert_eq!(names(gentle(LOOPX).extended_maximal_paths()), ["x"]);
        assert_eq!(names(gentle(ANNULUS_JACOBIAN).extended_maximal_paths()), ["p", "u v", "e(3)"]);
    }

    #[test]
    fn socle_examples() {
        assert_eq!(names(&gentle(A3R).socle_basis()), ["a", "b"]);
        assert_eq!(names(&gentle(LOOPX).socle_basis()), ["x"]);
        assert_eq!(names(&gentle(ANNULUS_JACOBIAN).socle_basis()), ["p", "u v"]);
    }
}
