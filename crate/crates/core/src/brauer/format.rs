use std::fmt::Write;

use super::{validate_brauer_graph, BrauerGraph, RawBrauerGraph, RawEdge};
use crate::text::{check_id, content_lines, ParseError};

/// Parses the line format
///
/// ```text
/// bvertex u mult=2
/// bedge E1 h1@u h2@w
/// order u = h1,h3
/// ```
pub fn parse_brauer_graph(text: &str) -> Result<BrauerGraph, ParseError> {
    let mut raw = RawBrauerGraph::default();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["bvertex", id, mult] => {
                check_id(line, id)?;
                let mult = mult
                    .strip_prefix("mult=")
                    .and_then(|m| m.parse::<u32>().ok())
                    .ok_or_else(|| ParseError::syntax(line, format!("expected `mult=<int>`, found `{mult}`")))?;
                raw.vertices.push((id.to_string(), mult));
            }
            ["bedge", id, first, second] => {
                check_id(line, id)?;
                let first = half(line, first)?;
                let second = half(line, second)?;
                raw.edges.push(RawEdge::new(id, first, second));
            }
            ["order", vertex, "=", rest @ ..] => {
                check_id(line, vertex)?;
                let halves: Vec<String> = rest
                    .join("")
                    .split(',')
                    .map(str::to_string)
                    .collect();
                for h in &halves {
                    check_id(line, h)?;
                }
                raw.orders.push((vertex.to_string(), halves));
            }
            [keyword, ..] => {
                return Err(ParseError::syntax(line, format!("unexpected `{keyword}`")));
            }
            [] => unreachable!(),
        }
    }
    validate_brauer_graph(&raw).map_err(|r| ParseError::Structure(r.to_string()))
}

fn half(line: usize, token: &str) -> Result<(&str, &str), ParseError> {
    let (h, v) = token
        .split_once('@')
        .ok_or_else(|| ParseError::syntax(line, format!("expected `<half>@<vertex>`, found `{token}`")))?;
    check_id(line, h)?;
    check_id(line, v)?;
    Ok((h, v))
}

pub fn serialize_brauer_graph(g: &BrauerGraph) -> String {
    let raw = g.to_raw();
    let mut out = String::new();
    for (v, m) in &raw.vertices {
        writeln!(out, "bvertex {v} mult={m}").unwrap();
    }
    for e in &raw.edges {
        let [(h0, v0), (h1, v1)] = &e.halves;
        writeln!(out, "bedge {} {h0}@{v0} {h1}@{v1}", e.id).unwrap();
    }
    for (v, order) in &raw.orders {
        writeln!(out, "order {v} = {}", order.join(",")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn round_trip() {
        for text in [E21, LINE3, LOOP, STAR3, ANNULUS] {
            let g = parse_brauer_graph(text).unwrap();
            let out = serialize_brauer_graph(&g);
            assert_eq!(parse_brauer_graph(&out).unwrap(), g);
            assert_eq!(serialize_brauer_graph(&parse_brauer_graph(&out).unwrap()), out);
        }
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_brauer_graph("bvertex u mult=x"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_brauer_graph("bvertex u mult=1\nbedge E h u"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_brauer_graph("bvertex u mult=2\nbedge E h@u k@w"),
            Err(ParseError::Structure(_))
        ));
    }

    #[test]
    fn order_accepts_spaces_after_commas() {
        let g = parse_brauer_graph(
            "bvertex c mult=1\nbvertex x mult=1\nbvertex y mult=1\nbvertex z mult=1\n\
             bedge E1 h1@c k1@x\nbedge E2 h2@c k2@y\nbedge E3 h3@c k3@z\norder c = h1, h3, h2\n",
        )
        .unwrap();
        let h1 = g.half_index("h1").unwrap();
        assert_eq!(g.half_id(g.successor(h1)), "h3");
    }
}
