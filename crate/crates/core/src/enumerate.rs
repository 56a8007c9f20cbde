//! Exhaustive enumeration of small Brauer graphs, gentle algebras and
//! polygon triangulations, each up to isomorphism.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::brauer::{canonical_form, validate_brauer_graph, BrauerGraph, CanonicalForm, RawBrauerGraph, RawEdge};
use crate::gentle::{validate_gentle, GentleAlgebra};
use crate::quiver::{Path, Presentation, Quiver, Relation};
use crate::surface::{polygon_triangulation, RawTriangulation};

/// Calls `f` on every permutation of `0..n`.
fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn go(k: usize, perm: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for j in k..perm.len() {
            perm.swap(k, j);
            go(k + 1, perm, f);
            perm.swap(k, j);
        }
    }
    go(0, &mut (0..n).collect(), f);
}

/// Builds a graph from a successor permutation on `2n` half-edges, where
/// half-edges `2k` and `2k+1` form edge `k`. Vertices are the cycles of
/// the permutation, numbered by their least half-edge.
fn graph_from_rotation(succ: &[usize], mult: &[u32]) -> Option<BrauerGraph> {
    let n = succ.len();
    let mut vertex_of = vec![usize::MAX; n];
    let mut orders = Vec::new();
    for h in 0..n {
        if vertex_of[h] != usize::MAX {
            continue;
        }
        let mut order = vec![h];
        vertex_of[h] = orders.len();
        let mut x = succ[h];
        while x != h {
            vertex_of[x] = orders.len();
            order.push(x);
            x = succ[x];
        }
        orders.push(order);
    }
    if mult.len() != orders.len() {
        return None;
    }
    let raw = RawBrauerGraph {
        vertices: (0..orders.len()).map(|v| (format!("v{v}"), mult[v])).collect(),
        edges: (0..n / 2)
            .map(|k| {
                let half = |h: usize| (format!("h{h}"), format!("v{}", vertex_of[h]));
                RawEdge {
                    id: format!("E{}", k + 1),
                    halves: [half(2 * k), half(2 * k + 1)],
                }
            })
            .collect(),
        orders: orders
            .iter()
            .enumerate()
            .map(|(v, o)| (format!("v{v}"), o.iter().map(|h| format!("h{h}")).collect()))
            .collect(),
    };
    validate_brauer_graph(&raw).ok()
}

fn vertex_count(succ: &[usize]) -> usize {
    let mut seen = vec![false; succ.len()];
    let mut count = 0;
    for h in 0..succ.len() {
        if !seen[h] {
            count += 1;
            let mut x = h;
            while !seen[x] {
                seen[x] = true;
                x = succ[x];
            }
        }
    }
    count
}

/// Connected Brauer graphs with `1..=max_edges` edges and multiplicities in
/// `1..=max_mult`, one per isomorphism class, sorted by edge count and then
/// canonical form. The excluded single edge with multiplicities 1 is left
/// out.
pub fn brauer_graphs(max_edges: usize, max_mult: u32) -> Vec<BrauerGraph> {
    let mut out = Vec::new();
    for n in 1..=max_edges {
        let mut shapes: BTreeMap<CanonicalForm, Vec<usize>> = BTreeMap::new();
        for_each_permutation(2 * n, &mut |succ| {
            let ones = vec![1; vertex_count(succ)];
            // The single edge with both multiplicities 1 is excluded, so its
            // shape is registered with another multiplicity.
            let single_edge = n == 1 && ones.len() == 2;
            let graph = if single_edge {
                graph_from_rotation(succ, &[2, 1])
            } else {
                graph_from_rotation(succ, &ones)
            };
            if let Some(g) = graph {
                shapes.entry(canonical_form(&g)).or_insert_with(|| succ.to_vec());
            }
        });
        let mut classes: BTreeMap<CanonicalForm, BrauerGraph> = BTreeMap::new();
        for succ in shapes.values() {
            let v = vertex_count(succ);
            let mut mult = vec![1u32; v];
            loop {
                if let Some(g) = graph_from_rotation(succ, &mult) {
                    classes.entry(canonical_form(&g)).or_insert(g);
                }
                let Some(slot) = mult.iter().position(|&m| m < max_mult) else { break };
                mult[slot] += 1;
                for m in &mut mult[..slot] {
                    *m = 1;
                }
            }
        }
        out.extend(classes.into_values());
    }
    out
}

/// The Brauer graphs of [`brauer_graphs`] with every multiplicity 1.
pub fn multiplicity_one_graphs(max_edges: usize) -> Vec<BrauerGraph> {
    brauer_graphs(max_edges, 1)
}

/// Arrow lists `(source, target)` on `n` vertices with at most two arrows
/// in and out of each vertex, one list per isomorphism class of connected
/// quivers.
fn quiver_shapes(n: usize, max_arrows: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
    let mut perms = Vec::new();
    for_each_permutation(n, &mut |p| perms.push(p.to_vec()));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        start: usize,
        pairs: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        max_arrows: usize,
        visit: &mut impl FnMut(&[(usize, usize)]),
    ) {
        visit(chosen);
        if chosen.len() == max_arrows {
            return;
        }
        for k in start..pairs.len() {
            let (s, t) = pairs[k];
            let out_degree = chosen.iter().filter(|a| a.0 == s).count();
            let in_degree = chosen.iter().filter(|a| a.1 == t).count();
            if out_degree < 2 && in_degree < 2 {
                chosen.push((s, t));
                go(k, pairs, chosen, max_arrows, visit);
                chosen.pop();
            }
        }
    }
    go(0, &pairs, &mut chosen, max_arrows, &mut |arrows| {
        if arrows.is_empty() || !connected(n, arrows) {
            return;
        }
        let key = perms
            .iter()
            .map(|p| {
                let mut relabeled: Vec<(usize, usize)> = arrows.iter().map(|&(s, t)| (p[s], p[t])).collect();
                relabeled.sort_unstable();
                relabeled
            })
            .min()
            .unwrap();
        if seen.insert(key.clone()) {
            out.push(key);
        }
    });
    out
}

fn connected(n: usize, arrows: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &(s, t) in arrows {
            for (x, y) in [(s, t), (t, s)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn arrow_name(k: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if k < letters.len() {
        (letters[k] as char).to_string()
    } else {
        format!("a{k}")
    }
}

/// Zero relation choices at one vertex: sets of (incoming, outgoing) arrow
/// pairs leaving each arrow at most one allowed and at most one zero
/// continuation on either side.
fn local_relation_choices(incoming: &[usize], outgoing: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = incoming
        .iter()
        .flat_map(|&a| outgoing.iter().map(move |&b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0..(1u32 << pairs.len()) {
        let zero: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&k| mask & (1 << k) != 0)
            .map(|k| pairs[k])
            .collect();
        let ok = incoming.iter().all(|&a| {
            let z = zero.iter().filter(|p| p.0 == a).count();
            z <= 1 && outgoing.len() - z <= 1
        }) && outgoing.iter().all(|&b| {
            let z = zero.iter().filter(|p| p.1 == b).count();
            z <= 1 && incoming.len() - z <= 1
        });
        if ok {
            out.push(zero);
        }
    }
    out
}

/// Relabeling-invariant code of a gentle algebra, from a breadth-first
/// walk over arrows. From each arrow the walk looks at its allowed and
/// zero successor, its allowed and zero predecessor, and the other arrow
/// with the same source and with the same target.
pub fn gentle_canonical_form(a: &GentleAlgebra) -> Vec<[u32; 6]> {
    let q = a.quiver();
    let arrows = q.arrows();
    let index: BTreeMap<&str, usize> = arrows.iter().enumerate().map(|(k, x)| (x.id.as_str(), k)).collect();
    let neighbours: Vec<[Option<usize>; 6]> = arrows
        .iter()
        .map(|x| {
            let after = |zero: bool| {
                q.outgoing(&x.target)
                    .find(|y| a.is_zero_pair(&x.id, &y.id) == zero)
                    .map(|y| index[y.id.as_str()])
            };
            let before = |zero: bool| {
                q.incoming(&x.source)
                    .find(|y| a.is_zero_pair(&y.id, &x.id) == zero)
                    .map(|y| index[y.id.as_str()])
            };
            let sibling_out = q.outgoing(&x.source).find(|y| y.id != x.id).map(|y| index[y.id.as_str()]);
            let sibling_in = q.incoming(&x.target).find(|y| y.id != x.id).map(|y| index[y.id.as_str()]);
            [after(false), after(true), before(false), before(true), sibling_out, sibling_in]
        })
        .collect();
    (0..arrows.len())
        .map(|root| {
            let mut label = vec![u32::MAX; arrows.len()];
            let mut next_label = 1;
            label[root] = 0;
            let mut queue = VecDeque::from([root]);
            let mut code = Vec::new();
            while let Some(x) = queue.pop_front() {
                let mut row = [u32::MAX; 6];
                for (slot, y) in neighbours[x].iter().enumerate() {
                    if let Some(y) = *y {
                        if label[y] == u32::MAX {
                            label[y] = next_label;
                            next_label += 1;
                            queue.push_back(y);
                        }
                        row[slot] = label[y];
                    }
                }
                code.push(row);
            }
            code
        })
        .min()
        .unwrap_or_default()
}

/// Gentle algebras with `1..=max_vertices` vertices and at most
/// `max_arrows` arrows, one per isomorphism class. Vertices are named
/// `1, 2, ...` and arrows `a, b, ...`.
pub fn gentle_algebras(max_vertices: usize, max_arrows: usize) -> Vec<GentleAlgebra> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let mut classes: BTreeMap<Vec<[u32; 6]>, GentleAlgebra> = BTreeMap::new();
        for shape in quiver_shapes(n, max_arrows) {
            let mut q = Quiver::new();
            for v in 0..n {
                q.add_vertex((v + 1).to_string()).unwrap();
            }
            for (k, &(s, t)) in shape.iter().enumerate() {
                q.add_arrow(arrow_name(k), (s + 1).to_string(), (t + 1).to_string()).unwrap();
            }
            let per_vertex: Vec<Vec<Vec<(usize, usize)>>> = (0..n)
                .map(|v| {
                    let incoming: Vec<usize> = (0..shape.len()).filter(|&k| shape[k].1 == v).collect();
                    let outgoing: Vec<usize> = (0..shape.len()).filter(|&k| shape[k].0 == v).collect();
                    local_relation_choices(&incoming, &outgoing)
                })
                .collect();
            let mut pick = vec![0usize; n];
            loop {
                let relations: Vec<Relation> = (0..n)
                    .flat_map(|v| per_vertex[v][pick[v]].iter())
                    .map(|&(x, y)| Relation::Monomial(Path::from_arrows(&q, &[arrow_name(x), arrow_name(y)]).unwrap()))
                    .collect();
                let p = Presentation::new(q.clone(), relations).unwrap();
                if let Ok(a) = validate_gentle(p) {
                    classes.entry(gentle_canonical_form(&a)).or_insert(a);
                }
                let Some(slot) = (0..n).find(|&v| pick[v] + 1 < per_vertex[v].len()) else { break };
                pick[slot] += 1;
                for p in &mut pick[..slot] {
                    *p = 0;
                }
            }
        }
        out.extend(classes.into_values());
    }
    out
}

/// Every triangulation of a convex polygon with `n` points, as triangle
/// lists `(i, j, k)` with `i < j < k`.
pub fn polygon_triangulations(n: usize) -> Vec<RawTriangulation> {
    fn split(i: usize, k: usize) -> Vec<Vec<(usize, usize, usize)>> {
        if k < i + 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in i + 1..k {
            for left in split(i, j) {
                for right in split(j, k) {
                    let mut t = vec![(i, j, k)];
                    t.extend(left.iter().copied());
                    t.extend(right.iter().copied());
                    t.sort_unstable();
                    out.push(t);
                }
            }
        }
        out
    }
    if n < 3 {
        return Vec::new();
    }
    split(0, n - 1)
        .into_iter()
        .map(|t| polygon_triangulation(n, &t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::is_isomorphic;

    #[test]
    fn small_brauer_graph_counts() {
        // One edge: a single edge with multiplicities (2,1), (2,2) and a
        // loop with multiplicity 1 or 2.
        let graphs = brauer_graphs(1, 2);
        assert_eq!(graphs.len(), 4);
        for (k, g) in graphs.iter().enumerate() {
            for h in &graphs[k + 1..] {
                assert!(!is_isomorphic(g, h));
            }
        }
        // Two edges: a path, a loop with a pendant edge, two loops at one
        // vertex nested or crossed, and a double edge between two vertices.
        assert_eq!(multiplicity_one_graphs(2).len(), 1 + 5);
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (3..=7).map(|n| polygon_triangulations(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42]);
    }

    #[test]
    fn gentle_one_vertex() {
        // With two loops some product of allowed arrows always cycles, so
        // only the single loop with x^2 = 0 is left.
        let algebras = gentle_algebras(1, 2);
        assert_eq!(algebras.len(), 1);
        assert_eq!(algebras[0].dimension(), 2);
    }

    #[test]
    fn gentle_two_vertices_one_arrow() {
        assert_eq!(gentle_algebras(2, 1).len(), 1 + 1);
    }
}
