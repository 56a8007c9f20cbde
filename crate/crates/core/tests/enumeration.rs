use std::collections::BTreeMap;

use brauer::brauer::{parse_brauer_graph, BrauerGraph};
use brauer::enumerate::{brauer_graphs, gentle_algebras, multiplicity_one_graphs, polygon_triangulations};

/// Darts labeled in breadth-first order from `root`, following successor
/// then partner. Returns the labeling and the resulting code.
fn bfs_code(g: &BrauerGraph, root: usize) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = g.half_count();
    let mut label = vec![usize::MAX; n];
    let mut order = vec![root];
    label[root] = 0;
    let mut k = 0;
    while k < order.len() {
        let d = order[k];
        for next in [g.successor(d), g.partner(d)] {
            if label[next] == usize::MAX {
                label[next] = order.len();
                order.push(next);
            }
        }
        k += 1;
    }
    let code = order.iter().map(|&d| (label[g.successor(d)], label[g.partner(d)])).collect();
    (order, code)
}

/// Automorphisms of the underlying map, as permutations of vertices.
fn vertex_automorphisms(g: &BrauerGraph) -> Vec<Vec<usize>> {
    let (base, code) = bfs_code(g, 0);
    (0..g.half_count())
        .filter_map(|r| {
            let (image, c) = bfs_code(g, r);
            (c == code).then(|| {
                let mut perm = vec![0; g.vertex_count()];
                for (d, e) in base.iter().zip(&image) {
                    perm[g.vertex_of(*d)] = g.vertex_of(*e);
                }
                perm
            })
        })
        .collect()
}

fn cycle_count(perm: &[usize]) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if !seen[start] {
            cycles += 1;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = perm[v];
            }
        }
    }
    cycles
}

fn single_edge() -> BrauerGraph {
    parse_brauer_graph("bvertex u mult=2\nbvertex w mult=1\nbedge E h@u k@w\n").unwrap()
}

fn shapes(max_edges: usize) -> BTreeMap<usize, Vec<BrauerGraph>> {
    let mut by_size: BTreeMap<usize, Vec<BrauerGraph>> = BTreeMap::new();
    by_size.entry(1).or_default().push(single_edge());
    for g in multiplicity_one_graphs(max_edges) {
        by_size.entry(g.edge_count()).or_default().push(g);
    }
    by_size
}

#[test]
fn shapes_match_rooted_map_counts() {
    // Rooted maps with n edges on orientable surfaces of any genus.
    let rooted = [2usize, 10, 74, 706];
    for (n, graphs) in shapes(4) {
        let total: usize = graphs.iter().map(|g| 2 * n / vertex_automorphisms(g).len()).sum();
        assert_eq!(total, rooted[n - 1], "{n} edges");
    }
}

#[test]
fn multiplicity_classes_match_burnside() {
    let max_mult = 3u64;
    let mut expected = 0u64;
    for graphs in shapes(3).values() {
        for g in graphs {
            let autos = vertex_automorphisms(g);
            let fixed: u64 = autos.iter().map(|p| max_mult.pow(cycle_count(p))).sum();
            expected += fixed / autos.len() as u64;
        }
    }
    // The single edge with both multiplicities 1 is excluded.
    assert_eq!(brauer_graphs(3, max_mult as u32).len() as u64, expected - 1);
}

#[test]
fn enumeration_counts_are_stable() {
    assert_eq!(brauer_graphs(4, 3).len(), 2952);
    assert_eq!(multiplicity_one_graphs(4).len(), 133);
    assert_eq!(gentle_algebras(4, 6).len(), 876);
    let catalan: Vec<usize> = (3..=8).map(|n| polygon_triangulations(n).len()).collect();
    assert_eq!(catalan, [1, 2, 5, 14, 42, 132]);
}
