//! Ideal triangulations of surfaces whose marked points all lie on the
//! boundary, their Jacobian algebras and their Brauer graphs.
//!
//! A triangulation is pure gluing data: triangles list three sides in
//! orientation order, each side an arc or a boundary segment. Boundary
//! segments are traversed from `from` to `to` by the triangle containing
//! them.

mod format;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use format::{parse_triangulation, serialize_triangulation};

use crate::brauer::{validate_brauer_graph, BrauerGraph, BrauerIssue, RawBrauerGraph, RawEdge};
use crate::gentle::{validate_gentle, GentleAlgebra, GentleIssue};
use crate::names::NameAllocator;
use crate::quiver::{Path, Presentation, Quiver, Relation};
use crate::report::Report;

/// Which way arrows point at a corner of a triangle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowConvention {
    /// From a side to the next side in orientation order.
    #[default]
    Successor,
    /// From a side to the previous side.
    Predecessor,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawTriangulation {
    pub points: Vec<String>,
    /// `(id, from, to)`.
    pub segments: Vec<(String, String, String)>,
    /// `(id, endpoint, endpoint)`.
    pub arcs: Vec<(String, String, String)>,
    pub triangles: Vec<(String, [String; 3])>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SurfaceIssue {
    Duplicate(String),
    InvalidId(String),
    UnknownPoint { side: String, point: String },
    UnknownSide { triangle: String, side: String },
    /// An arc not used by exactly two triangle sides.
    ArcOccurrences(String, usize),
    /// A boundary segment not used by exactly one triangle side.
    SegmentOccurrences(String, usize),
    /// A point that is not where exactly one boundary segment starts and
    /// one ends.
    NotOnBoundary(String),
    /// The sides of a triangle do not chain up end to start.
    OpenTriangle(String),
    /// No choice of directions makes every arc glued with opposite
    /// orientations.
    Inconsistent,
    /// The corners at a point do not form a single fan.
    BrokenFan(String),
    NoArcs,
}

impl fmt::Display for SurfaceIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceIssue::Duplicate(id) => write!(f, "duplicate identifier `{id}`"),
            SurfaceIssue::InvalidId(id) => write!(f, "invalid identifier `{id}`"),
            SurfaceIssue::UnknownPoint { side, point } => {
                write!(f, "`{side}` refers to undeclared point `{point}`")
            }
            SurfaceIssue::UnknownSide { triangle, side } => {
                write!(f, "triangle `{triangle}` refers to undeclared side `{side}`")
            }
            SurfaceIssue::ArcOccurrences(a, n) => {
                write!(f, "arc `{a}` is a side of {n} triangles instead of 2")
            }
            SurfaceIssue::SegmentOccurrences(s, n) => {
                write!(f, "boundary segment `{s}` is a side of {n} triangles instead of 1")
            }
            SurfaceIssue::NotOnBoundary(p) => write!(f, "point `{p}` is not on a boundary component"),
            SurfaceIssue::OpenTriangle(t) => write!(f, "sides of triangle `{t}` do not close up"),
            SurfaceIssue::Inconsistent => {
                write!(f, "no gluing traverses every arc in opposite directions")
            }
            SurfaceIssue::BrokenFan(p) => write!(f, "corners at point `{p}` do not form a fan"),
            SurfaceIssue::NoArcs => write!(f, "triangulation has no arcs"),
        }
    }
}

/// An end of a side at a point: arcs have ends 0 and 1 at their declared
/// endpoints, boundary segments have end 0 at `from` and 1 at `to`.
type End = (usize, u8);

/// A corner of a triangle: the end of one side meeting the start of the
/// next one at `point`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Corner {
    triangle: usize,
    point: usize,
    from: End,
    to: End,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    raw: RawTriangulation,
    /// Arcs first, then boundary segments.
    sides: Vec<Side>,
    corners: Vec<Corner>,
    /// Per point with arcs: the arc ends met turning around it, starting
    /// after the incoming boundary segment.
    fans: BTreeMap<usize, Vec<End>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Side {
    id: String,
    ends: [usize; 2],
    is_arc: bool,
}

pub fn validate_triangulation(raw: &RawTriangulation) -> Result<Triangulation, Report<SurfaceIssue>> {
    let mut report = Report::new();
    let mut points = BTreeMap::new();
    let mut side_index = BTreeMap::new();
    let mut triangle_ids = BTreeSet::new();
    for p in &raw.points {
        if !crate::names::is_valid_id(p) {
            report.push(SurfaceIssue::InvalidId(p.clone()));
        }
        if points.insert(p.clone(), points.len()).is_some() {
            report.push(SurfaceIssue::Duplicate(p.clone()));
        }
    }
    let mut sides = Vec::new();
    let declared = raw
        .arcs
        .iter()
        .map(|s| (s, true))
        .chain(raw.segments.iter().map(|s| (s, false)));
    for ((id, p, q), is_arc) in declared {
        if !crate::names::is_valid_id(id) {
            report.push(SurfaceIssue::InvalidId(id.clone()));
        }
        if side_index.insert(id.clone(), sides.len()).is_some() {
            report.push(SurfaceIssue::Duplicate(id.clone()));
            continue;
        }
        let mut ends = [0; 2];
        for (slot, x) in [p, q].into_iter().enumerate() {
            match points.get(x) {
                Some(&k) => ends[slot] = k,
                None => report.push(SurfaceIssue::UnknownPoint {
                    side: id.clone(),
                    point: x.clone(),
                }),
            }
        }
        sides.push(Side {
            id: id.clone(),
            ends,
            is_arc,
        });
    }
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut uses = vec![0usize; sides.len()];
    for (t, ss) in &raw.triangles {
        if !triangle_ids.insert(t.clone()) {
            report.push(SurfaceIssue::Duplicate(t.clone()));
        }
        let mut tri = [0; 3];
        for (slot, s) in ss.iter().enumerate() {
            match side_index.get(s) {
                Some(&k) => {
                    tri[slot] = k;
                    uses[k] += 1;
                }
                None => report.push(SurfaceIssue::UnknownSide {
                    triangle: t.clone(),
                    side: s.clone(),
                }),
            }
        }
        triangles.push(tri);
    }
    if !report.is_empty() {
        return Err(report);
    }
    for (s, &n) in sides.iter().zip(&uses) {
        if s.is_arc && n != 2 {
            report.push(SurfaceIssue::ArcOccurrences(s.id.clone(), n));
        }
        if !s.is_arc && n != 1 {
            report.push(SurfaceIssue::SegmentOccurrences(s.id.clone(), n));
        }
    }
    for (p, &k) in &points {
        let starts = sides.iter().filter(|s| !s.is_arc && s.ends[0] == k).count();
        let ends = sides.iter().filter(|s| !s.is_arc && s.ends[1] == k).count();
        if starts != 1 || ends != 1 {
            report.push(SurfaceIssue::NotOnBoundary(p.clone()));
        }
    }
    if !sides.iter().any(|s| s.is_arc) {
        report.push(SurfaceIssue::NoArcs);
    }
    if !report.is_empty() {
        return Err(report);
    }

    // Possible traversals of each triangle: for each side, whether it runs
    // from end 0 to end 1.
    let mut options: Vec<Vec<[bool; 3]>> = Vec::new();
    for (t, tri) in triangles.iter().enumerate() {
        let mut valid = Vec::new();
        for mask in 0..8u8 {
            let forward = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
            let ok = (0..3).all(|k| {
                let side = &sides[tri[k]];
                if !side.is_arc && !forward[k] {
                    return false;
                }
                let next = &sides[tri[(k + 1) % 3]];
                let finish = side.ends[usize::from(forward[k])];
                let start = next.ends[usize::from(!forward[(k + 1) % 3])];
                finish == start
            });
            if ok {
                valid.push(forward);
            }
        }
        if valid.is_empty() {
            report.push(SurfaceIssue::OpenTriangle(raw.triangles[t].0.clone()));
        }
        options.push(valid);
    }
    if !report.is_empty() {
        return Err(report);
    }
    let Some(directions) = choose_directions(&triangles, &options, &sides) else {
        report.push(SurfaceIssue::Inconsistent);
        return Err(report);
    };

    let mut corners = Vec::new();
    for (t, tri) in triangles.iter().enumerate() {
        for k in 0..3 {
            let (x, y) = (tri[k], tri[(k + 1) % 3]);
            let (fx, fy) = (directions[t][k], directions[t][(k + 1) % 3]);
            let x_end = u8::from(fx);
            let y_end = u8::from(!fy);
            corners.push(Corner {
                triangle: t,
                point: sides[x].ends[usize::from(x_end)],
                from: (x, x_end),
                to: (y, y_end),
            });
        }
    }
    let mut fans = BTreeMap::new();
    for (p, &k) in &points {
        let next: BTreeMap<End, End> = corners
            .iter()
            .filter(|c| c.point == k)
            .map(|c| (c.from, c.to))
            .collect();
        let incoming = sides
            .iter()
            .position(|s| !s.is_arc && s.ends[1] == k)
            .expect("checked above");
        let mut fan = Vec::new();
        let mut at = (incoming, 1u8);
        let mut closed = false;
        for _ in 0..=next.len() {
            let Some(&to) = next.get(&at) else { break };
            if !sides[to.0].is_arc {
                closed = to.1 == 0 && sides[to.0].ends[0] == k;
                break;
            }
            fan.push(to);
            at = to;
        }
        if !closed || fan.len() + 1 != next.len() {
            report.push(SurfaceIssue::BrokenFan(p.clone()));
        } else if !fan.is_empty() {
            fans.insert(k, fan);
        }
    }
    report.into_result(|| Triangulation {
        raw: raw.clone(),
        sides,
        corners,
        fans,
    })
}

/// Picks one traversal per triangle so that every arc is traversed once in
/// each direction.
fn choose_directions(triangles: &[[usize; 3]], options: &[Vec<[bool; 3]>], sides: &[Side]) -> Option<Vec<[bool; 3]>> {
    fn go(
        t: usize,
        triangles: &[[usize; 3]],
        options: &[Vec<[bool; 3]>],
        sides: &[Side],
        used: &mut BTreeMap<(usize, bool), usize>,
        chosen: &mut Vec<[bool; 3]>,
    ) -> bool {
        if t == triangles.len() {
            return true;
        }
        for option in &options[t] {
            let traversals: Vec<(usize, bool)> = (0..3)
                .filter(|&k| sides[triangles[t][k]].is_arc)
                .map(|k| (triangles[t][k], option[k]))
                .collect();
            if traversals.iter().any(|x| used.get(x).copied().unwrap_or(0) > 0) {
                continue;
            }
            let mut distinct = traversals.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != traversals.len() {
                continue;
            }
            for x in &traversals {
                *used.entry(*x).or_default() += 1;
            }
            chosen.push(*option);
            if go(t + 1, triangles, options, sides, used, chosen) {
                return true;
            }
            chosen.pop();
            for x in &traversals {
                *used.get_mut(x).unwrap() -= 1;
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(0, triangles, options, sides, &mut BTreeMap::new(), &mut chosen).then_some(chosen)
}

impl Triangulation {
    pub fn raw(&self) -> &RawTriangulation {
        &self.raw
    }

    pub fn arc_ids(&self) -> Vec<&str> {
        self.sides.iter().filter(|s| s.is_arc).map(|s| s.id.as_str()).collect()
    }

    /// Ids of arc ends, used as half-edge ids and arrow ids.
    fn end_names(&self) -> BTreeMap<End, String> {
        let mut names = NameAllocator::with_reserved(self.sides.iter().map(|s| s.id.clone()));
        let mut out = BTreeMap::new();
        for (k, s) in self.sides.iter().enumerate() {
            if s.is_arc {
                for end in 0..2u8 {
                    out.insert((k, end), names.allocate(&format!("{}.{end}", s.id)));
                }
            }
        }
        out
    }

    fn point_id(&self, k: usize) -> &str {
        &self.raw.points[k]
    }
}

/// The quiver has a vertex per arc and an arrow at every corner between two
/// arcs; the composition of two arrows in the same triangle with three arc
/// sides is zero. Arrows are named after the arc end they start from.
pub fn jacobian_presentation(t: &Triangulation, convention: ArrowConvention) -> Presentation {
    let names = t.end_names();
    let mut q = Quiver::new();
    for a in t.arc_ids() {
        q.add_vertex(a).expect("arc ids are unique");
    }
    // Corner arrows of each triangle, indexed by corner position.
    let mut per_triangle: BTreeMap<usize, Vec<Option<String>>> = BTreeMap::new();
    for c in &t.corners {
        let (x, y) = (&t.sides[c.from.0], &t.sides[c.to.0]);
        let arrow = (x.is_arc && y.is_arc).then(|| {
            let (id, s, tg) = match convention {
                ArrowConvention::Successor => (&names[&c.from], &x.id, &y.id),
                ArrowConvention::Predecessor => (&names[&c.to], &y.id, &x.id),
            };
            q.add_arrow(id.clone(), s.clone(), tg.clone()).expect("arc ends are unique");
            id.clone()
        });
        per_triangle.entry(c.triangle).or_default().push(arrow);
    }
    let mut relations = Vec::new();
    for arrows in per_triangle.values() {
        if arrows.iter().any(Option::is_none) {
            continue;
        }
        for k in 0..3 {
            let (a, b) = (arrows[k].as_ref().unwrap(), arrows[(k + 1) % 3].as_ref().unwrap());
            let pair = match convention {
                ArrowConvention::Successor => [a, b],
                ArrowConvention::Predecessor => [b, a],
            };
            relations.push(Relation::Monomial(Path::from_arrows(&q, &pair).expect("corners compose")));
        }
    }
    Presentation::new(q, relations).expect("relations are paths")
}

pub fn jacobian_algebra(t: &Triangulation, convention: ArrowConvention) -> Result<GentleAlgebra, Report<GentleIssue>> {
    validate_gentle(jacobian_presentation(t, convention))
}

/// Brauer graph with a vertex of multiplicity 1 per marked point on an arc
/// and an edge per arc; half-edges are the arc ends, ordered by turning
/// around each point. Under the predecessor convention the orders are
/// reversed.
pub fn brauer_graph_of_triangulation(
    t: &Triangulation,
    convention: ArrowConvention,
) -> Result<BrauerGraph, Report<BrauerIssue>> {
    let names = t.end_names();
    let mut raw = RawBrauerGraph::default();
    for (&p, fan) in &t.fans {
        raw.vertices.push((t.point_id(p).to_string(), 1));
        let mut order: Vec<String> = fan.iter().map(|e| names[e].clone()).collect();
        if convention == ArrowConvention::Predecessor {
            order.reverse();
        }
        raw.orders.push((t.point_id(p).to_string(), order));
    }
    for (k, s) in t.sides.iter().enumerate() {
        if s.is_arc {
            let half = |end: u8| (names[&(k, end)].clone(), t.point_id(s.ends[usize::from(end)]).to_string());
            raw.edges.push(RawEdge {
                id: s.id.clone(),
                halves: [half(0), half(1)],
            });
        }
    }
    validate_brauer_graph(&raw)
}

/// The triangulation of a convex polygon with points `0..n` and boundary
/// segments `s<i>` from `i` to `i+1`, cut into the given triangles
/// `(i, j, k)` with `i < j < k`. Diagonals are named `d<i>_<j>`.
pub fn polygon_triangulation(n: usize, triangles: &[(usize, usize, usize)]) -> RawTriangulation {
    let side = |i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        if j == i + 1 {
            format!("s{i}")
        } else if i == 0 && j == n - 1 {
            format!("s{j}")
        } else {
            format!("d{i}_{j}")
        }
    };
    let mut arcs = BTreeSet::new();
    let mut raw = RawTriangulation {
        points: (0..n).map(|i| i.to_string()).collect(),
        segments: (0..n)
            .map(|i| (format!("s{i}"), i.to_string(), ((i + 1) % n).to_string()))
            .collect(),
        ..Default::default()
    };
    for (k, &(i, j, l)) in triangles.iter().enumerate() {
        for (x, y) in [(i, j), (j, l), (i, l)] {
            if side(x, y).starts_with('d') {
                arcs.insert((x, y));
            }
        }
        raw.triangles.push((format!("t{k}"), [side(i, j), side(j, l), side(l, i)]));
    }
    raw.arcs = arcs
        .into_iter()
        .map(|(x, y)| (side(x, y), x.to_string(), y.to_string()))
        .collect();
    raw
}

/// The annulus with two marked points `a`, `b` on the outer boundary and
/// one marked point `c` on the inner boundary.
pub const ANNULUS: &str = "\
point a
point b
point c
bseg s1 b a
bseg s2 a b
bseg s3 c c
arc 1 a c
arc 2 a c
arc 3 c b
triangle t1 = 1,2,s3
triangle t2 = 1,3,s1
triangle t3 = 3,2,s2
";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{fixtures, is_isomorphic, quiver_of};
    use crate::cut::{admissible_cut, CuttingSet};
    use crate::ssb::is_isomorphic_ssb;
    use crate::trivext::trivial_extension;

    fn annulus() -> Triangulation {
        parse_triangulation(ANNULUS).unwrap()
    }

    fn arrows(p: &Presentation) -> Vec<(String, String, String)> {
        p.quiver()
            .arrows()
            .iter()
            .map(|a| (a.id.clone(), a.source.clone(), a.target.clone()))
            .collect()
    }

    fn triple(a: &str, s: &str, t: &str) -> (String, String, String) {
        (a.into(), s.into(), t.into())
    }

    #[test]
    fn annulus_jacobian() {
        let a = jacobian_algebra(&annulus(), ArrowConvention::Successor).unwrap();
        assert_eq!(a.quiver().vertex_count(), 3);
        assert!(a.presentation().relations().is_empty());
        assert_eq!(
            arrows(a.presentation()),
            [triple("1.0", "1", "2"), triple("1.1", "1", "3"), triple("3.0", "3", "2")]
        );
        assert_eq!(a.dimension(), 7);
    }

    #[test]
    fn annulus_brauer_graph() {
        let g = brauer_graph_of_triangulation(&annulus(), ArrowConvention::Successor).unwrap();
        assert!(is_isomorphic(&g, &fixtures::graph(fixtures::ANNULUS)));
        let valency = |p: &str| g.valency(g.vertex_index(p).unwrap());
        assert_eq!((valency("a"), valency("c"), valency("b")), (2, 3, 1));
        assert_eq!(quiver_of(&g).arrow_count(), 5);
    }

    #[test]
    fn annulus_cut_by_boundary_crossing_arrows() {
        let t = annulus();
        let a = jacobian_algebra(&t, ArrowConvention::Successor).unwrap();
        let l = crate::brauer::algebra_of(&brauer_graph_of_triangulation(&t, ArrowConvention::Successor).unwrap());
        let jacobian: BTreeSet<&str> = a.quiver().arrows().iter().map(|x| x.id.as_str()).collect();
        let d = CuttingSet::new(
            l.quiver()
                .arrows()
                .iter()
                .filter(|x| !jacobian.contains(x.id.as_str()))
                .map(|x| x.id.clone()),
        );
        assert_eq!(d.arrows.len(), 2);
        for x in &d.arrows {
            let arrow = l.quiver().arrow(x).unwrap();
            assert_eq!((arrow.source.as_str(), arrow.target.as_str()), ("2", "1"));
        }
        assert_eq!(admissible_cut(&l, &d).unwrap().presentation(), a.presentation());
        assert!(is_isomorphic_ssb(&trivial_extension(&a), &l));
    }

    #[test]
    fn predecessor_convention_flips_arrows() {
        let t = annulus();
        let a = jacobian_algebra(&t, ArrowConvention::Predecessor).unwrap();
        let mut flipped: Vec<(String, String)> =
            a.quiver().arrows().iter().map(|x| (x.source.clone(), x.target.clone())).collect();
        flipped.sort();
        assert_eq!(
            flipped,
            [("2".into(), "1".into()), ("2".into(), "3".into()), ("3".into(), "1".into())]
        );
        let g = brauer_graph_of_triangulation(&t, ArrowConvention::Predecessor).unwrap();
        let l = crate::brauer::algebra_of(&g);
        assert!(is_isomorphic_ssb(&trivial_extension(&a), &l));
    }

    #[test]
    fn hexagon_with_internal_triangle() {
        let raw = polygon_triangulation(6, &[(0, 2, 4), (0, 1, 2), (2, 3, 4), (0, 4, 5)]);
        let t = validate_triangulation(&raw).unwrap();
        let a = jacobian_algebra(&t, ArrowConvention::Successor).unwrap();
        assert_eq!((a.quiver().vertex_count(), a.quiver().arrow_count()), (3, 3));
        assert_eq!(a.presentation().relations().len(), 3);
        assert_eq!(a.dimension(), 6);
        let l = crate::brauer::algebra_of(&brauer_graph_of_triangulation(&t, ArrowConvention::Successor).unwrap());
        assert!(is_isomorphic_ssb(&trivial_extension(&a), &l));
    }

    #[test]
    fn single_arc_disk() {
        let t = validate_triangulation(&polygon_triangulation(4, &[(0, 1, 2), (0, 2, 3)])).unwrap();
        let p = jacobian_presentation(&t, ArrowConvention::Successor);
        assert_eq!((p.quiver().vertex_count(), p.quiver().arrow_count()), (1, 0));
        assert!(jacobian_algebra(&t, ArrowConvention::Successor).is_err());
        let err = brauer_graph_of_triangulation(&t, ArrowConvention::Successor).unwrap_err();
        assert_eq!(err.issues(), &[BrauerIssue::ExcludedSingleEdge]);
    }

    #[test]
    fn invalid_triangulations() {
        let mut raw = parse_triangulation(ANNULUS).unwrap().raw().clone();
        raw.triangles.push(("t4".into(), ["1".into(), "2".into(), "3".into()]));
        let issues = validate_triangulation(&raw).unwrap_err().into_issues();
        assert!(issues.contains(&SurfaceIssue::ArcOccurrences("1".into(), 3)));

        let mut raw = parse_triangulation(ANNULUS).unwrap().raw().clone();
        raw.points.push("d".into());
        raw.arcs.push(("4".into(), "a".into(), "d".into()));
        let issues = validate_triangulation(&raw).unwrap_err().into_issues();
        assert!(issues.contains(&SurfaceIssue::NotOnBoundary("d".into())));

        let mut raw = parse_triangulation(ANNULUS).unwrap().raw().clone();
        raw.triangles[2].1 = ["2".into(), "3".into(), "s2".into()];
        let issues = validate_triangulation(&raw).unwrap_err().into_issues();
        assert!(!issues.is_empty());
    }
}
