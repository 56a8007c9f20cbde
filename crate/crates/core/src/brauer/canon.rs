use std::collections::{BTreeMap, VecDeque};

use super::BrauerGraph;

/// Relabeling-invariant encoding of a Brauer graph: for each half-edge in
/// traversal order, the labels of its successor and partner and the
/// multiplicity at its vertex.
pub type CanonicalForm = Vec<(u32, u32, u32)>;

/// Labels half-edges in breadth-first order from `root`, following the
/// successor first and the partner second.
fn traversal(g: &BrauerGraph, root: usize) -> (Vec<usize>, CanonicalForm) {
    let n = g.half_count();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    label[root] = 0;
    order.push(root);
    let mut code = Vec::with_capacity(n);
    while let Some(h) = queue.pop_front() {
        for next in [g.successor(h), g.partner(h)] {
            if label[next] == u32::MAX {
                label[next] = order.len() as u32;
                order.push(next);
                queue.push_back(next);
            }
        }
        code.push((label[g.successor(h)], label[g.partner(h)], g.multiplicity(g.vertex_of(h))));
    }
    (order, code)
}

/// The least traversal code over all starting half-edges.
pub fn canonical_form(g: &BrauerGraph) -> CanonicalForm {
    (0..g.half_count())
        .map(|root| traversal(g, root).1)
        .min()
        .unwrap_or_default()
}

pub fn is_isomorphic(g1: &BrauerGraph, g2: &BrauerGraph) -> bool {
    g1.half_count() == g2.half_count() && canonical_form(g1) == canonical_form(g2)
}

/// A bijection between two Brauer graphs, by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerIsomorphism {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
    pub half_map: BTreeMap<String, String>,
}

pub fn find_isomorphism(g1: &BrauerGraph, g2: &BrauerGraph) -> Option<BrauerIsomorphism> {
    if g1.half_count() != g2.half_count() || g1.half_count() == 0 {
        return None;
    }
    let best = |g: &BrauerGraph| {
        (0..g.half_count())
            .map(|root| traversal(g, root))
            .min_by(|a, b| a.1.cmp(&b.1))
            .unwrap()
    };
    let (order1, code1) = best(g1);
    let (order2, code2) = best(g2);
    if code1 != code2 {
        return None;
    }
    let mut iso = BrauerIsomorphism {
        vertex_map: BTreeMap::new(),
        edge_map: BTreeMap::new(),
        half_map: BTreeMap::new(),
    };
    for (&h1, &h2) in order1.iter().zip(&order2) {
        iso.half_map.insert(g1.half_id(h1).to_string(), g2.half_id(h2).to_string());
        iso.edge_map
            .insert(g1.edge_id(g1.edge_of(h1)).to_string(), g2.edge_id(g2.edge_of(h2)).to_string());
        iso.vertex_map.insert(
            g1.vertex_id(g1.vertex_of(h1)).to_string(),
            g2.vertex_id(g2.vertex_of(h2)).to_string(),
        );
    }
    Some(iso)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{validate_brauer_graph, RawBrauerGraph};
    use super::*;

    /// Renames every id and reverses declaration order.
    fn relabeled(g: &BrauerGraph) -> BrauerGraph {
        let raw = g.to_raw();
        let rename = |s: &String| format!("r_{s}");
        let relabeled = RawBrauerGraph {
            vertices: raw.vertices.iter().rev().map(|(v, m)| (rename(v), *m)).collect(),
            edges: raw
                .edges
                .iter()
                .rev()
                .map(|e| {
                    let mut e = e.clone();
                    e.id = rename(&e.id);
                    e.halves = [
                        (rename(&e.halves[1].0), rename(&e.halves[1].1)),
                        (rename(&e.halves[0].0), rename(&e.halves[0].1)),
                    ];
                    e
                })
                .collect(),
            orders: raw
                .orders
                .iter()
                .map(|(v, o)| {
                    let mut o: Vec<String> = o.iter().map(rename).collect();
                    o.rotate_left(1);
                    (rename(v), o)
                })
                .collect(),
        };
        validate_brauer_graph(&relabeled).unwrap()
    }

    #[test]
    fn relabeling_invariance() {
        for text in [E21, LINE3, LOOP, STAR3, ANNULUS] {
            let g = graph(text);
            let h = relabeled(&g);
            assert_eq!(canonical_form(&g), canonical_form(&h));
            let iso = find_isomorphism(&g, &h).unwrap();
            assert_eq!(iso.half_map.len(), g.half_count());
            let image = |x: usize| h.half_index(&iso.half_map[g.half_id(x)]).unwrap();
            for x in 0..g.half_count() {
                assert_eq!(image(g.successor(x)), h.successor(image(x)));
                assert_eq!(image(g.partner(x)), h.partner(image(x)));
                let v = g.vertex_id(g.vertex_of(x));
                assert_eq!(iso.vertex_map[v], h.vertex_id(h.vertex_of(image(x))));
            }
        }
    }

    #[test]
    fn distinguishes_graphs() {
        assert!(!is_isomorphic(&graph(LINE3), &graph(STAR3)));
        let loop2 = graph("bvertex v mult=2\nbedge E h@v k@v\norder v = h,k\n");
        assert!(!is_isomorphic(&graph(LOOP), &loop2));
    }

    #[test]
    fn cyclic_order_matters() {
        // Two loops at one vertex: interleaved versus nested.
        let nested = graph("bvertex v mult=1\nbedge E a@v b@v\nbedge F c@v d@v\norder v = a,b,c,d\n");
        let crossed = graph("bvertex v mult=1\nbedge E a@v b@v\nbedge F c@v d@v\norder v = a,c,b,d\n");
        assert!(!is_isomorphic(&nested, &crossed));
    }
}
