//! The Brauer graph of a gentle algebra and its trivial extension.
//!
//! Every maximal path `m` gets a new arrow `β_m` from its end back to its
//! start. The trivial extension is the Brauer graph algebra of the graph
//! whose vertices are the extended maximal paths and whose edges are the
//! quiver vertices. A second, independent construction of the projectives
//! is kept for cross-checking.

use std::collections::{BTreeMap, BTreeSet};

use crate::brauer::{algebra_of, validate_brauer_graph, BrauerGraph, RawBrauerGraph, RawEdge};
use crate::gentle::GentleAlgebra;
use crate::names::NameAllocator;
use crate::quiver::{Path, Quiver, Relation};
use crate::ssb::{BasisElement, SsbPresentation};

/// Names of the new arrows, keyed by the arrow list of each maximal path.
///
/// Each name is `beta(<arrows joined by dots>)`, primed if it collides with
/// an existing arrow.
pub fn new_arrow_names(q: &Quiver, maximal: &[Path]) -> BTreeMap<Vec<String>, String> {
    let mut names = NameAllocator::with_reserved(q.arrows().iter().map(|a| a.id.clone()));
    let mut sorted: Vec<&Path> = maximal.iter().collect();
    sorted.sort();
    sorted
        .into_iter()
        .map(|m| (m.arrows().to_vec(), names.allocate(&format!("beta({})", m.arrows().join(".")))))
        .collect()
}

/// The graph built from a gentle algebra, with the maximal path behind
/// each graph vertex. Edge ids are the quiver vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentleGraph {
    pub graph: BrauerGraph,
    pub vertex_labels: BTreeMap<String, Path>,
}

/// One graph vertex per extended maximal path, with a half-edge for each
/// vertex the path passes through, ordered along the path. The half-edge
/// at position `k < len` carries the id of the `k`-th arrow and the one at
/// the end carries the id of the new arrow, so that the Brauer graph
/// algebra uses the original arrow names.
pub fn graph_of_gentle(a: &GentleAlgebra) -> GentleGraph {
    let q = a.quiver();
    let betas = new_arrow_names(q, a.maximal_paths());
    let mut half_names =
        NameAllocator::with_reserved(q.arrows().iter().map(|x| x.id.clone()).chain(betas.values().cloned()));
    let mut vertex_names = NameAllocator::new();
    let mut raw = RawBrauerGraph::default();
    let mut labels = BTreeMap::new();
    let mut germs: BTreeMap<&str, Vec<(String, String)>> = BTreeMap::new();
    for m in a.extended_maximal_paths() {
        let id = vertex_names.allocate(&format!("max({})", label_text(m)));
        let mut halves: Vec<String> = m.arrows().to_vec();
        halves.push(if m.is_trivial() {
            half_names.allocate(&format!("t({})", m.source()))
        } else {
            betas[m.arrows()].clone()
        });
        for (h, v) in halves.iter().zip(m.vertices()) {
            germs.entry(v.as_str()).or_default().push((h.clone(), id.clone()));
        }
        raw.vertices.push((id.clone(), 1));
        raw.orders.push((id.clone(), halves));
        labels.insert(id, m.clone());
    }
    for v in q.vertices() {
        let pair = &germs[v.as_str()];
        assert_eq!(pair.len(), 2, "vertex {v} lies on two maximal path positions");
        raw.edges.push(RawEdge {
            id: v.clone(),
            halves: [pair[0].clone(), pair[1].clone()],
        });
    }
    let graph = validate_brauer_graph(&raw).unwrap_or_else(|r| panic!("graph of a gentle algebra is invalid:\n{r}"));
    GentleGraph {
        graph,
        vertex_labels: labels,
    }
}

fn label_text(m: &Path) -> String {
    if m.is_trivial() {
        format!("e({})", m.source())
    } else {
        m.arrows().join(".")
    }
}

/// The quiver with one new arrow per maximal path, from its end to its
/// start.
pub fn extended_quiver(a: &GentleAlgebra) -> Quiver {
    let mut q = a.quiver().clone();
    for (arrows, name) in new_arrow_names(a.quiver(), a.maximal_paths()) {
        let m = Path::from_arrows(a.quiver(), &arrows).unwrap();
        q.add_arrow(name, m.target().clone(), m.source().clone()).unwrap();
    }
    q
}

pub fn trivial_extension(a: &GentleAlgebra) -> SsbPresentation {
    algebra_of(&graph_of_gentle(a).graph)
}

/// Basis of the projective of the trivial extension at `vertex`, computed
/// directly from the relations of `a`.
///
/// Each maximal path through `vertex` splits there as `w1 w2`, and `w2 β w1`
/// is a path from `vertex` to itself spanning the socle. Nothing cached in
/// `a` is used apart from the raw presentation.
pub fn projectives_oracle(a: &GentleAlgebra, vertex: &str) -> Vec<BasisElement> {
    let p = a.presentation();
    let q = p.quiver();
    let zero: BTreeSet<(&str, &str)> = p
        .relations()
        .iter()
        .filter_map(|r| match r {
            Relation::Monomial(m) if m.len() == 2 => Some((m.arrows()[0].as_str(), m.arrows()[1].as_str())),
            _ => None,
        })
        .collect();
    let next = |x: &str| -> Option<&str> {
        let t = &q.arrow(x)?.target;
        q.outgoing(t).map(|y| y.id.as_str()).find(|y| !zero.contains(&(x, *y)))
    };
    let prev = |x: &str| -> Option<&str> {
        let s = &q.arrow(x)?.source;
        q.incoming(s).map(|y| y.id.as_str()).find(|y| !zero.contains(&(*y, x)))
    };
    let through = |x: &str| -> Vec<String> {
        let mut start = x;
        while let Some(y) = prev(start) {
            start = y;
        }
        let mut out = vec![start.to_string()];
        while let Some(y) = next(out.last().unwrap()) {
            out.push(y.to_string());
        }
        out
    };
    let maximal: Vec<Path> = q
        .arrows()
        .iter()
        .filter(|x| prev(&x.id).is_none())
        .map(|x| Path::from_arrows(q, &through(&x.id)).unwrap())
        .collect();
    let betas = new_arrow_names(q, &maximal);
    let mut eq = q.clone();
    for m in &maximal {
        eq.add_arrow(betas[m.arrows()].clone(), m.target().clone(), m.source().clone())
            .unwrap();
    }

    // Split points (arrow before, arrow after) of maximal paths at `vertex`.
    let mut splits: Vec<(Option<&str>, Option<&str>)> = Vec::new();
    let incoming: Vec<&str> = q.incoming(vertex).map(|x| x.id.as_str()).collect();
    let outgoing: Vec<&str> = q.outgoing(vertex).map(|x| x.id.as_str()).collect();
    for &y in &outgoing {
        match incoming.iter().find(|&&x| !zero.contains(&(x, y))) {
            Some(&x) => splits.push((Some(x), Some(y))),
            None => splits.push((None, Some(y))),
        }
    }
    for &x in &incoming {
        if outgoing.iter().all(|&y| zero.contains(&(x, y))) {
            splits.push((Some(x), None));
        }
    }
    let socle_paths: Vec<Path> = splits
        .iter()
        .map(|&(before, after)| {
            let arrows = through(before.or(after).unwrap());
            let cut = match before {
                Some(x) => arrows.iter().position(|y| y == x).unwrap() + 1,
                None => 0,
            };
            let mut word: Vec<String> = arrows[cut..].to_vec();
            word.push(betas[&arrows].clone());
            word.extend_from_slice(&arrows[..cut]);
            Path::from_arrows(&eq, &word).unwrap()
        })
        .collect();

    let mut out = vec![BasisElement::Path(Path::trivial(vertex.to_string()))];
    for s in &socle_paths {
        for k in 1..s.len() {
            out.push(BasisElement::Path(s.prefix(k)));
        }
    }
    out.push(BasisElement::socle(socle_paths));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{fixtures, is_isomorphic};
    use crate::gentle::validate_gentle;
    use crate::quiver::parse_presentation;
    use crate::ssb::graph_of_ssb;

    fn gentle(text: &str) -> GentleAlgebra {
        validate_gentle(parse_presentation(text).unwrap()).unwrap()
    }

    const A2: &str = "vertex 1\nvertex 2\narrow a 1 2\n";
    const A3R: &str = "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrel mono a b\n";
    const LOOPX: &str = "vertex 1\narrow x 1 1\nrel mono x x\n";
    const ANNULUS_JACOBIAN: &str = "vertex 1\nvertex 2\nvertex 3\narrow p 1 2\narrow u 1 3\narrow v 3 2\n";

    fn basis(items: &[BasisElement]) -> Vec<String> {
        items.iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn graphs_of_small_algebras() {
        let g = graph_of_gentle(&gentle(A2)).graph;
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        let line2 = fixtures::graph(
            "bvertex x mult=1\nbvertex y mult=1\nbvertex z mult=1\nbedge 1 h@x i@y\nbedge 2 j@y k@z\norder y = i,j\n",
        );
        assert!(is_isomorphic(&g, &line2));
        assert!(is_isomorphic(&graph_of_gentle(&gentle(A3R)).graph, &fixtures::graph(fixtures::LINE3)));
        assert!(is_isomorphic(&graph_of_gentle(&gentle(LOOPX)).graph, &fixtures::graph(fixtures::LOOP)));
    }

    #[test]
    fn extended_quivers() {
        let q = extended_quiver(&gentle(A2));
        assert_eq!(q.arrow_count(), 2);
        let b = q.arrow("beta(a)").unwrap();
        assert_eq!((b.source.as_str(), b.target.as_str()), ("2", "1"));
        assert_eq!(extended_quiver(&gentle(A3R)).arrow_count(), 4);
        assert_eq!(extended_quiver(&gentle(ANNULUS_JACOBIAN)).arrow_count(), 5);
    }

    #[test]
    fn trivial_extensions() {
        let t = trivial_extension(&gentle(A2));
        let rels: Vec<String> = t.presentation().relations().iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, ["a beta(a) a", "beta(a) a beta(a)"]);
        assert_eq!(t.dimension(), 6);
        let t = trivial_extension(&gentle(LOOPX));
        let rels: Vec<String> = t.presentation().relations().iter().map(|r| r.to_string()).collect();
        assert_eq!(rels[0], "x beta(x) - beta(x) x");
        assert_eq!(t.dimension(), 4);
        let a = gentle(ANNULUS_JACOBIAN);
        let t = trivial_extension(&a);
        assert_eq!(*t.quiver(), extended_quiver(&a));
        assert_eq!(t.dimension(), 14);
        assert_eq!(t.presentation().dimension(), Some(14));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(basis(&projectives_oracle(&gentle(A2), "1")), ["e(1)", "a", "[a beta(a)]"]);
        assert_eq!(
            basis(&projectives_oracle(&gentle(ANNULUS_JACOBIAN), "3")),
            ["e(3)", "v", "v beta(u.v)", "[v beta(u.v) u]"]
        );
        assert_eq!(
            basis(&projectives_oracle(&gentle(LOOPX), "1")),
            ["e(1)", "beta(x)", "x", "[beta(x) x = x beta(x)]"]
        );
    }

    #[test]
    fn oracle_agrees_with_construction() {
        for text in [A2, A3R, LOOPX, ANNULUS_JACOBIAN] {
            let a = gentle(text);
            let t = trivial_extension(&a);
            for v in a.quiver().vertices() {
                assert_eq!(projectives_oracle(&a, v), t.projective_basis(v), "{text} at {v}");
            }
            assert!(is_isomorphic(&graph_of_ssb(&t).unwrap(), &graph_of_gentle(&a).graph));
            assert_eq!(t.dimension(), 2 * a.dimension());
        }
    }
}
