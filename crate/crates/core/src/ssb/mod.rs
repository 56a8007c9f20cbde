//! Symmetric special biserial algebras in the normal form produced by
//! Brauer graphs: zero relations of length 2, commutativity relations
//! between powers of cycles, and zero relations `C^e a` where `C^e` is
//! the only path to the socle.

mod cycles;
mod graph;
mod iso;

use std::collections::BTreeMap;
use std::fmt;

pub use cycles::{p_cycle, rotation_class, simple_cycle_decomposition, SimpleCycleDecomp};
pub use graph::{graph_of_ssb, GraphError};
pub use iso::{distinguishing_invariant, find_ssb_isomorphism, is_isomorphic_ssb, SsbIsomorphism};

pub(crate) use cycles::least_rotation;

use crate::gentle::{validate_special_biserial, zero_pairs, GentleIssue};
use crate::quiver::{Path, Presentation, Relation};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SsbIssue {
    SpecialBiserial(GentleIssue),
    /// The presentation is `k` or `k[x]/x^2`.
    Excluded(&'static str),
    Empty,
    Disconnected,
    /// A relation that is none of the three allowed shapes.
    NotNormalized(String),
    /// The arrow is followed by different arrows in two cycle words.
    ConflictingSuccessor(String),
    /// The arrow is preceded by different arrows in cycle words.
    ConflictingPredecessor(String),
    /// The arrow lies on no cycle word.
    UncoveredArrow(String),
    /// `ab` is both a zero relation and consecutive in a cycle word.
    AllowedAndZero(String, String),
    /// `ab` is composable but neither a zero relation nor consecutive in a
    /// cycle word.
    MissingZeroRelation(String, String),
    /// Relations use the same vertex cycle with different exponents.
    MultiplicityMismatch(String),
    /// A loop equal to its own socle, which makes the ideal non-admissible.
    NotAdmissible(String),
    MissingDescriptor(String),
    DuplicateDescriptor(String),
    /// The two socle paths at a vertex start or end with the same arrow.
    SharedArrow(String),
    /// The number of socle paths starting with this arrow is not one.
    DescriptorCoverage(String),
    /// A commutativity relation has a side containing a zero relation.
    ZeroInsideRelation(String),
}

impl fmt::Display for SsbIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SsbIssue::SpecialBiserial(g) => write!(f, "{g}"),
            SsbIssue::Excluded(name) => write!(f, "the algebra {name} is excluded"),
            SsbIssue::Empty => write!(f, "quiver has no vertices"),
            SsbIssue::Disconnected => write!(f, "quiver is not connected"),
            SsbIssue::NotNormalized(r) => write!(
                f,
                "relation `{r}` is not a length-2 zero relation, a cycle power times an arrow, or a difference of cycle powers"
            ),
            SsbIssue::ConflictingSuccessor(a) => write!(f, "arrow `{a}` has two successors in cycle words"),
            SsbIssue::ConflictingPredecessor(a) => write!(f, "arrow `{a}` has two predecessors in cycle words"),
            SsbIssue::UncoveredArrow(a) => write!(f, "arrow `{a}` lies on no cycle relation"),
            SsbIssue::AllowedAndZero(a, b) => write!(f, "`{a} {b}` is both zero and part of a cycle"),
            SsbIssue::MissingZeroRelation(a, b) => {
                write!(f, "`{a} {b}` is neither zero nor part of a cycle")
            }
            SsbIssue::MultiplicityMismatch(c) => {
                write!(f, "vertex cycle `{c}` appears with different exponents")
            }
            SsbIssue::NotAdmissible(c) => write!(f, "loop `{c}` with exponent 1 is its own socle"),
            SsbIssue::MissingDescriptor(v) => write!(f, "vertex `{v}` has no socle relation"),
            SsbIssue::DuplicateDescriptor(v) => write!(f, "vertex `{v}` has more than one socle relation"),
            SsbIssue::SharedArrow(r) => {
                write!(f, "the sides of `{r}` start or end with the same arrow")
            }
            SsbIssue::DescriptorCoverage(a) => {
                write!(f, "arrow `{a}` does not start exactly one socle path")
            }
            SsbIssue::ZeroInsideRelation(r) => write!(f, "a side of `{r}` contains a zero relation"),
        }
    }
}

/// The indecomposable projective at a vertex: paths `first` and `second`
/// from the vertex to itself that both span the socle. `second` is trivial
/// when the projective is uniserial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveDescriptor {
    pub vertex: String,
    pub first: Path,
    pub second: Path,
}

impl ProjectiveDescriptor {
    pub fn dimension(&self) -> usize {
        if self.second.is_trivial() {
            self.first.len() + 1
        } else {
            self.first.len() + self.second.len()
        }
    }
}

/// An element of a path basis. The socle of a biserial projective is
/// spanned by two equal paths and is recorded as the set of both.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    Path(Path),
    Socle(Vec<Path>),
}

impl BasisElement {
    pub fn socle(mut paths: Vec<Path>) -> Self {
        paths.sort();
        paths.dedup();
        BasisElement::Socle(paths)
    }

    pub fn relabel(&self, vertex: impl Fn(&str) -> String, arrow: impl Fn(&str) -> String) -> Self {
        match self {
            BasisElement::Path(p) => BasisElement::Path(p.relabel(&vertex, &arrow)),
            BasisElement::Socle(ps) => {
                BasisElement::socle(ps.iter().map(|p| p.relabel(&vertex, &arrow)).collect())
            }
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Path(p) => write!(f, "{p}"),
            BasisElement::Socle(ps) => {
                let parts: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "[{}]", parts.join(" = "))
            }
        }
    }
}

/// The cycle of arrows around one vertex of the Brauer graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexCycle {
    /// The least rotation of the cycle.
    pub arrows: Vec<String>,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsbPresentation {
    presentation: Presentation,
    successor: BTreeMap<String, String>,
    cycles: Vec<VertexCycle>,
    cycle_of_arrow: BTreeMap<String, usize>,
    projectives: BTreeMap<String, ProjectiveDescriptor>,
}

/// Shape of a relation: a zero pair, or a socle path with its optional
/// partner.
enum Shape {
    ZeroPair,
    Socle { first: Path, second: Path },
}

fn shape(r: &Relation) -> Option<Shape> {
    match r {
        Relation::Monomial(m) if m.len() == 2 => Some(Shape::ZeroPair),
        Relation::Monomial(m) => {
            let c = m.prefix(m.len() - 1);
            (c.is_cyclic() && m.arrows().last() == c.arrows().first()).then(|| Shape::Socle {
                second: Path::trivial(c.source().clone()),
                first: c,
            })
        }
        Relation::Binomial(p, q) => (p.is_cyclic() && q.is_cyclic()).then(|| Shape::Socle {
            first: p.clone(),
            second: q.clone(),
        }),
    }
}

pub fn validate_ssb(p: Presentation) -> Result<SsbPresentation, Report<SsbIssue>> {
    let q = p.quiver();
    let mut report = Report::new();
    if q.vertex_count() == 0 {
        report.push(SsbIssue::Empty);
        return Err(report);
    }
    if q.vertex_count() == 1 && q.arrow_count() == 0 {
        report.push(SsbIssue::Excluded("k"));
        return Err(report);
    }
    if q.vertex_count() == 1
        && q.arrow_count() == 1
        && p.relations().iter().all(|r| matches!(r, Relation::Monomial(m) if m.len() == 2))
        && !p.relations().is_empty()
    {
        report.push(SsbIssue::Excluded("k[x]/x^2"));
        return Err(report);
    }
    if !q.is_connected() {
        report.push(SsbIssue::Disconnected);
    }
    report.extend(validate_special_biserial(&p).into_issues().into_iter().map(SsbIssue::SpecialBiserial));

    // Socle paths and the cycle words they are powers of.
    let mut socle_relations = Vec::new();
    for r in p.relations() {
        match shape(r) {
            None => report.push(SsbIssue::NotNormalized(r.to_string())),
            Some(Shape::ZeroPair) => {}
            Some(Shape::Socle { first, second }) => {
                if let Relation::Binomial(..) = r {
                    if p.contains_monomial(&first) || p.contains_monomial(&second) {
                        report.push(SsbIssue::ZeroInsideRelation(r.to_string()));
                    }
                    let (a, b) = (first.arrows(), second.arrows());
                    if a.first() == b.first() || a.last() == b.last() {
                        report.push(SsbIssue::SharedArrow(r.to_string()));
                    }
                }
                socle_relations.push((first, second));
            }
        }
    }

    let mut successor: BTreeMap<String, String> = BTreeMap::new();
    let mut predecessor: BTreeMap<String, String> = BTreeMap::new();
    let mut exponents: Vec<(Vec<String>, usize)> = Vec::new();
    for (first, second) in &socle_relations {
        for side in [first, second] {
            if side.is_trivial() {
                continue;
            }
            let d = simple_cycle_decomposition(side).expect("socle paths are cyclic");
            let word = d.primitive.arrows();
            for k in 0..word.len() {
                let (a, b) = (&word[k], &word[(k + 1) % word.len()]);
                if let Some(old) = successor.insert(a.clone(), b.clone()) {
                    if &old != b {
                        report.push(SsbIssue::ConflictingSuccessor(a.clone()));
                    }
                }
                if let Some(old) = predecessor.insert(b.clone(), a.clone()) {
                    if &old != a {
                        report.push(SsbIssue::ConflictingPredecessor(b.clone()));
                    }
                }
            }
            exponents.push((word.to_vec(), d.exponent));
        }
    }
    for a in q.arrows() {
        if !successor.contains_key(&a.id) {
            report.push(SsbIssue::UncoveredArrow(a.id.clone()));
        }
    }
    let mut report = Report::from_iter(dedup(report.into_issues()));
    let successor_is_permutation = !report.issues().iter().any(|i| {
        matches!(
            i,
            SsbIssue::ConflictingSuccessor(_) | SsbIssue::ConflictingPredecessor(_) | SsbIssue::UncoveredArrow(_)
        )
    });
    if !successor_is_permutation {
        return Err(report);
    }

    let zero = zero_pairs(&p);
    for a in q.arrows() {
        for b in q.outgoing(&a.target) {
            let allowed = successor[&a.id] == b.id;
            let is_zero = zero.contains(&(a.id.clone(), b.id.clone()));
            if allowed && is_zero {
                report.push(SsbIssue::AllowedAndZero(a.id.clone(), b.id.clone()));
            } else if !allowed && !is_zero {
                report.push(SsbIssue::MissingZeroRelation(a.id.clone(), b.id.clone()));
            }
        }
    }

    // Orbits of the successor permutation.
    let mut cycle_of_arrow: BTreeMap<String, usize> = BTreeMap::new();
    let mut orbits: Vec<Vec<String>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for a in q.arrows() {
        if seen.contains(&a.id) {
            continue;
        }
        let mut orbit = vec![a.id.clone()];
        loop {
            let next = &successor[orbit.last().unwrap()];
            if next == &orbit[0] {
                break;
            }
            orbit.push(next.clone());
        }
        seen.extend(orbit.iter().cloned());
        let r = least_rotation(&orbit);
        orbit.rotate_left(r);
        orbits.push(orbit);
    }
    orbits.sort();
    for (k, o) in orbits.iter().enumerate() {
        for a in o {
            cycle_of_arrow.insert(a.clone(), k);
        }
    }
    let mut multiplicity: Vec<Option<usize>> = vec![None; orbits.len()];
    for (word, e) in &exponents {
        let k = cycle_of_arrow[&word[0]];
        match multiplicity[k] {
            None => multiplicity[k] = Some(*e),
            Some(old) if old != *e => {
                report.push(SsbIssue::MultiplicityMismatch(orbits[k].join(" ")));
            }
            Some(_) => {}
        }
    }
    let cycles: Vec<VertexCycle> = orbits
        .iter()
        .zip(&multiplicity)
        .map(|(o, m)| VertexCycle {
            arrows: o.clone(),
            multiplicity: m.expect("every orbit meets a relation") as u32,
        })
        .collect();
    for c in &cycles {
        if c.arrows.len() == 1 && c.multiplicity == 1 {
            report.push(SsbIssue::NotAdmissible(c.arrows[0].clone()));
        }
    }

    let mut projectives = BTreeMap::new();
    let mut starts: BTreeMap<&str, usize> = BTreeMap::new();
    for (first, second) in &socle_relations {
        let vertex = first.source().clone();
        for side in [first, second] {
            if let Some(a) = side.arrows().first() {
                *starts.entry(a.as_str()).or_default() += 1;
            }
        }
        let descriptor = ProjectiveDescriptor {
            vertex: vertex.clone(),
            first: first.clone(),
            second: second.clone(),
        };
        if projectives.insert(vertex.clone(), descriptor).is_some() {
            report.push(SsbIssue::DuplicateDescriptor(vertex));
        }
    }
    for v in q.vertices() {
        if !projectives.contains_key(v) {
            report.push(SsbIssue::MissingDescriptor(v.clone()));
        }
    }
    for a in q.arrows() {
        if starts.get(a.id.as_str()) != Some(&1) {
            report.push(SsbIssue::DescriptorCoverage(a.id.clone()));
        }
    }
    let report = Report::from_iter(dedup(report.into_issues()));
    report.into_result(|| SsbPresentation {
        presentation: p,
        successor,
        cycles,
        cycle_of_arrow,
        projectives,
    })
}

fn dedup(mut issues: Vec<SsbIssue>) -> Vec<SsbIssue> {
    let mut seen = std::collections::BTreeSet::new();
    issues.retain(|i| seen.insert(i.clone()));
    issues
}

impl SsbPresentation {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &crate::quiver::Quiver {
        self.presentation.quiver()
    }

    /// The arrow following `a` on its vertex cycle.
    pub fn successor(&self, a: &str) -> &str {
        &self.successor[a]
    }

    /// Vertex cycles sorted by their least rotation.
    pub fn vertex_cycles(&self) -> &[VertexCycle] {
        &self.cycles
    }

    /// Index into `vertex_cycles` of the cycle containing `a`.
    pub fn cycle_index(&self, a: &str) -> usize {
        self.cycle_of_arrow[a]
    }

    pub fn projectives(&self) -> &BTreeMap<String, ProjectiveDescriptor> {
        &self.projectives
    }

    pub fn projective(&self, vertex: &str) -> Option<&ProjectiveDescriptor> {
        self.projectives.get(vertex)
    }

    /// Path basis of the projective at `vertex`: the trivial path, the
    /// proper prefixes of both socle paths, and the socle.
    pub fn projective_basis(&self, vertex: &str) -> Vec<BasisElement> {
        let d = &self.projectives[vertex];
        let mut out = vec![BasisElement::Path(Path::trivial(vertex.to_string()))];
        for side in [&d.first, &d.second] {
            for k in 1..side.len() {
                out.push(BasisElement::Path(side.prefix(k)));
            }
        }
        let socle = if d.second.is_trivial() {
            vec![d.first.clone()]
        } else {
            vec![d.first.clone(), d.second.clone()]
        };
        out.push(BasisElement::socle(socle));
        out.sort();
        out
    }

    pub fn dimension(&self) -> usize {
        self.projectives.values().map(ProjectiveDescriptor::dimension).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::fixtures::*;
    use crate::brauer::{algebra_of, presentation_of};
    use crate::quiver::parse_presentation;

    fn names(basis: &[BasisElement]) -> Vec<String> {
        basis.iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn descriptors_of_small_graphs() {
        let a = algebra_of(&graph(E21));
        let d = a.projective("E1").unwrap();
        assert_eq!(d.first.to_string(), "h1 h1");
        assert!(d.second.is_trivial());
        assert_eq!(names(&a.projective_basis("E1")), ["e(E1)", "h1", "[h1 h1]"]);

        let a = algebra_of(&graph(LOOP));
        let d = a.projective("E").unwrap();
        assert_eq!((d.first.to_string(), d.second.to_string()), ("h k".into(), "k h".into()));
        assert_eq!(names(&a.projective_basis("E")), ["e(E)", "h", "k", "[h k = k h]"]);
        assert_eq!(a.dimension(), 4);
    }

    #[test]
    fn dimensions_match_path_classes() {
        for text in [E21, LINE3, LOOP, STAR3, ANNULUS] {
            let a = algebra_of(&graph(text));
            assert_eq!(Some(a.dimension()), a.presentation().dimension(), "{text}");
        }
    }

    #[test]
    fn non_symmetric_algebra_rejected() {
        let p = parse_presentation("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrel mono a b").unwrap();
        let issues = validate_ssb(p).unwrap_err().into_issues();
        assert!(issues.contains(&SsbIssue::UncoveredArrow("a".into())));
    }

    #[test]
    fn excluded_algebras() {
        let k = parse_presentation("vertex 1").unwrap();
        assert_eq!(validate_ssb(k).unwrap_err().issues(), &[SsbIssue::Excluded("k")]);
        let dual_numbers = parse_presentation("vertex 1\narrow x 1 1\nrel mono x x").unwrap();
        assert_eq!(
            validate_ssb(dual_numbers).unwrap_err().issues(),
            &[SsbIssue::Excluded("k[x]/x^2")]
        );
    }

    #[test]
    fn missing_zero_relation_detected() {
        let g = graph(LINE3);
        let p = presentation_of(&g);
        let kept: Vec<Relation> = p
            .relations()
            .iter()
            .filter(|r| !matches!(r, Relation::Monomial(m) if m.len() == 2))
            .cloned()
            .collect();
        let p = Presentation::new(p.quiver().clone(), kept).unwrap();
        let issues = validate_ssb(p).unwrap_err().into_issues();
        assert!(issues.contains(&SsbIssue::MissingZeroRelation("a1".into(), "b2".into())));
        assert!(issues.contains(&SsbIssue::MissingZeroRelation("c2".into(), "b1".into())));
    }

    #[test]
    fn loop_equal_to_its_socle_rejected() {
        let p = parse_presentation(
            "vertex 1\narrow x 1 1\narrow y 1 1\nrel comm x x = y\nrel mono x y\nrel mono y x\n",
        )
        .unwrap();
        let issues = validate_ssb(p).unwrap_err().into_issues();
        assert!(issues.contains(&SsbIssue::NotAdmissible("y".into())));
    }
}
