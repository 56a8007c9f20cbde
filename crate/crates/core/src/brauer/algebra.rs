use super::BrauerGraph;
use crate::quiver::{Path, Presentation, Quiver, Relation};
use crate::ssb::{validate_ssb, SsbPresentation};

/// One vertex per edge and one arrow per half-edge, except half-edges at
/// leaves of multiplicity 1. The arrow of a half-edge carries its id and
/// runs from its edge to the edge of its successor.
pub fn quiver_of(g: &BrauerGraph) -> Quiver {
    let mut q = Quiver::new();
    for e in 0..g.edge_count() {
        q.add_vertex(g.edge_id(e)).expect("edge ids are unique");
    }
    for h in 0..g.half_count() {
        if g.is_truncated(h) {
            continue;
        }
        let s = g.edge_id(g.edge_of(h));
        let t = g.edge_id(g.edge_of(g.successor(h)));
        q.add_arrow(g.half_id(h), s, t).expect("half-edge ids are unique");
    }
    q
}

/// The cycle of arrows around the vertex of `h`, starting with the arrow
/// of `h`.
pub fn cycle_of(g: &BrauerGraph, q: &Quiver, h: usize) -> Path {
    let mut arrows = vec![g.half_id(h)];
    let mut next = g.successor(h);
    while next != h {
        arrows.push(g.half_id(next));
        next = g.successor(next);
    }
    Path::from_arrows(q, &arrows).expect("half-edge cycles compose")
}

/// For every edge, either `C^e - C'^e'` for the cycles at its two ends, or
/// `C^e a` when one end is a leaf of multiplicity 1; then every product of
/// two arrows that do not follow each other around a vertex.
pub fn relations_of(g: &BrauerGraph) -> Vec<Relation> {
    let q = quiver_of(g);
    let socle = |h: usize| {
        let m = g.multiplicity(g.vertex_of(h)) as usize;
        cycle_of(g, &q, h).power(m).unwrap()
    };
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        let [h, k] = g.halves(e);
        match (g.is_truncated(h), g.is_truncated(k)) {
            (false, false) => out.push(Relation::Binomial(socle(h), socle(k))),
            (false, true) | (true, false) => {
                let live = if g.is_truncated(h) { k } else { h };
                let first = Path::arrow(&q, g.half_id(live)).unwrap();
                out.push(Relation::Monomial(socle(live).compose(&first).unwrap()));
            }
            (true, true) => unreachable!("excluded by validation"),
        }
    }
    for h in 0..g.half_count() {
        if g.is_truncated(h) {
            continue;
        }
        let other = g.partner(g.successor(h));
        if !g.is_truncated(other) {
            let path = Path::from_arrows(&q, &[g.half_id(h), g.half_id(other)]).unwrap();
            out.push(Relation::Monomial(path));
        }
    }
    out
}

pub fn presentation_of(g: &BrauerGraph) -> Presentation {
    Presentation::new(quiver_of(g), relations_of(g)).expect("relations are valid paths")
}

/// The Brauer graph algebra of `g`.
pub fn algebra_of(g: &BrauerGraph) -> SsbPresentation {
    validate_ssb(presentation_of(g)).unwrap_or_else(|r| panic!("Brauer graph algebra failed validation:\n{r}"))
}
