//! Graphviz export. Nodes and edges are emitted in lexicographic id order.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::brauer::BrauerGraph;
use crate::quiver::Quiver;
use crate::surface::Triangulation;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT for a Brauer graph. Vertices carry `mult=k`, edge ends
/// carry their half-edge ids.
pub fn brauer_graph_dot(g: &BrauerGraph) -> String {
    let mut out = String::from("graph brauer {\n");
    let mut vertices: Vec<usize> = (0..g.vertex_count()).collect();
    vertices.sort_by_key(|&v| g.vertex_id(v));
    for v in vertices {
        let label = format!("{}\\nmult={}", g.vertex_id(v), g.multiplicity(v));
        writeln!(out, "  {} [label=\"{}\"];", quote(g.vertex_id(v)), label.replace('"', "\\\"")).unwrap();
    }
    let mut edges: Vec<usize> = (0..g.edge_count()).collect();
    edges.sort_by_key(|&e| g.edge_id(e));
    for e in edges {
        let [h, k] = g.halves(e);
        writeln!(
            out,
            "  {} -- {} [label={}, taillabel={}, headlabel={}];",
            quote(g.vertex_id(g.vertex_of(h))),
            quote(g.vertex_id(g.vertex_of(k))),
            quote(g.edge_id(e)),
            quote(g.half_id(h)),
            quote(g.half_id(k)),
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Directed DOT for a quiver; arrows in `dashed` are drawn dashed.
pub fn quiver_dot(q: &Quiver, dashed: &BTreeSet<String>) -> String {
    let mut out = String::from("digraph quiver {\n");
    let vertices: BTreeSet<&str> = q.vertices().iter().map(String::as_str).collect();
    for v in vertices {
        writeln!(out, "  {};", quote(v)).unwrap();
    }
    let mut arrows: Vec<_> = q.arrows().iter().collect();
    arrows.sort_by(|a, b| a.id.cmp(&b.id));
    for a in arrows {
        let style = if dashed.contains(&a.id) { ", style=dashed" } else { "" };
        writeln!(
            out,
            "  {} -> {} [label={}{style}];",
            quote(&a.source),
            quote(&a.target),
            quote(&a.id)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Undirected DOT for a triangulation: boundary segments bold, arcs plain.
pub fn triangulation_dot(t: &Triangulation) -> String {
    let raw = t.raw();
    let mut out = String::from("graph triangulation {\n");
    let points: BTreeSet<&str> = raw.points.iter().map(String::as_str).collect();
    for p in points {
        writeln!(out, "  {};", quote(p)).unwrap();
    }
    let mut lines: Vec<(&str, &str, &str, &str)> = raw
        .segments
        .iter()
        .map(|(id, a, b)| (id.as_str(), a.as_str(), b.as_str(), ", style=bold"))
        .chain(raw.arcs.iter().map(|(id, a, b)| (id.as_str(), a.as_str(), b.as_str(), "")))
        .collect();
    lines.sort();
    for (id, a, b, style) in lines {
        writeln!(out, "  {} -- {} [label={}{style}];", quote(a), quote(b), quote(id)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::fixtures::{graph, E21};
    use crate::quiver::Quiver;

    #[test]
    fn brauer_labels_multiplicity() {
        let dot = brauer_graph_dot(&graph(E21));
        assert!(dot.contains("label=\"u\\nmult=2\""), "{dot}");
        assert!(dot.starts_with("graph brauer {\n") && dot.ends_with("}\n"));
    }

    #[test]
    fn quiver_order_and_dashes() {
        let q = Quiver::from_parts(["2", "1"], &[("b", "2", "1"), ("a", "1", "2")]).unwrap();
        let dot = quiver_dot(&q, &BTreeSet::from(["b".to_string()]));
        assert_eq!(
            dot,
            "digraph quiver {\n  \"1\";\n  \"2\";\n  \"1\" -> \"2\" [label=\"a\"];\n  \"2\" -> \"1\" [label=\"b\", style=dashed];\n}\n"
        );
    }

    #[test]
    fn quoting_escapes() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
