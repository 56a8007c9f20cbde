use std::fmt::Write;

use super::{validate_triangulation, RawTriangulation, Triangulation};
use crate::text::{check_id, content_lines, ParseError};

/// Parses the line format
///
/// ```text
/// point a
/// bseg s1 b a
/// arc 1 a c
/// triangle t1 = 1,2,s3
/// ```
pub fn parse_triangulation(text: &str) -> Result<Triangulation, ParseError> {
    let mut raw = RawTriangulation::default();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["point", id] => {
                check_id(line, id)?;
                raw.points.push(id.to_string());
            }
            [kind @ ("bseg" | "arc"), id, p, q] => {
                for x in [id, p, q] {
                    check_id(line, x)?;
                }
                let entry = (id.to_string(), p.to_string(), q.to_string());
                if *kind == "bseg" {
                    raw.segments.push(entry);
                } else {
                    raw.arcs.push(entry);
                }
            }
            ["triangle", id, "=", rest @ ..] => {
                check_id(line, id)?;
                let sides: Vec<String> = rest.join("").split(',').map(str::to_string).collect();
                let sides: [String; 3] = sides
                    .try_into()
                    .map_err(|_| ParseError::syntax(line, "a triangle needs three sides"))?;
                for s in &sides {
                    check_id(line, s)?;
                }
                raw.triangles.push((id.to_string(), sides));
            }
            [keyword, ..] => {
                return Err(ParseError::syntax(line, format!("unexpected `{keyword}`")));
            }
            [] => unreachable!(),
        }
    }
    validate_triangulation(&raw).map_err(|r| ParseError::Structure(r.to_string()))
}

pub fn serialize_triangulation(t: &Triangulation) -> String {
    let raw = t.raw();
    let mut out = String::new();
    for p in &raw.points {
        writeln!(out, "point {p}").unwrap();
    }
    for (id, p, q) in &raw.segments {
        writeln!(out, "bseg {id} {p} {q}").unwrap();
    }
    for (id, p, q) in &raw.arcs {
        writeln!(out, "arc {id} {p} {q}").unwrap();
    }
    for (id, sides) in &raw.triangles {
        writeln!(out, "triangle {id} = {}", sides.join(",")).unwrap();
    }
    out
}
