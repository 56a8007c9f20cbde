use std::fmt::Write;

use super::{Path, Presentation, Quiver, QuiverError, Relation};
use crate::text::{check_id, content_lines, ParseError};

/// Parses the line format
///
/// ```text
/// vertex 1
/// arrow a 1 2
/// rel mono a b
/// rel comm a b = c d
/// ```
///
/// Identifiers must be declared before they are used. A trivial path is
/// written `e(<vertex>)`.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut quiver = Quiver::new();
    let mut relations = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["vertex", id] => {
                check_id(line, id)?;
                quiver.add_vertex(*id).map_err(|e| quiver_error(line, e))?;
            }
            ["arrow", id, s, t] => {
                for x in [id, s, t] {
                    check_id(line, x)?;
                }
                quiver.add_arrow(*id, *s, *t).map_err(|e| quiver_error(line, e))?;
            }
            ["rel", "mono", rest @ ..] => {
                relations.push(Relation::Monomial(parse_path(&quiver, line, rest)?));
            }
            ["rel", "comm", rest @ ..] => {
                let split = rest
                    .iter()
                    .position(|t| *t == "=")
                    .ok_or_else(|| ParseError::syntax(line, "commutativity relation needs `=`"))?;
                let lhs = parse_path(&quiver, line, &rest[..split])?;
                let rhs = parse_path(&quiver, line, &rest[split + 1..])?;
                relations.push(Relation::Binomial(lhs, rhs));
            }
            [keyword, ..] => {
                return Err(ParseError::syntax(line, format!("unexpected `{keyword}`")));
            }
            [] => unreachable!("content_lines skips blank lines"),
        }
    }
    Presentation::new(quiver, relations).map_err(|e| ParseError::Structure(e.to_string()))
}

fn quiver_error(line: usize, error: QuiverError) -> ParseError {
    match error {
        QuiverError::DuplicateVertex(id) => ParseError::Duplicate { line, kind: "vertex", id },
        QuiverError::DuplicateArrow(id) => ParseError::Duplicate { line, kind: "arrow", id },
        QuiverError::UnknownVertex { vertex, .. } => ParseError::Undeclared {
            line,
            kind: "vertex",
            id: vertex,
        },
        QuiverError::InvalidId(id) => ParseError::syntax(line, format!("invalid identifier `{id}`")),
    }
}

fn parse_path(quiver: &Quiver, line: usize, tokens: &[&str]) -> Result<Path, ParseError> {
    if let [single] = tokens {
        if let Some(v) = single.strip_prefix("e(").and_then(|s| s.strip_suffix(')')) {
            if !quiver.has_vertex(v) {
                return Err(ParseError::Undeclared {
                    line,
                    kind: "vertex",
                    id: v.to_string(),
                });
            }
            return Ok(Path::trivial(v));
        }
    }
    if tokens.is_empty() {
        return Err(ParseError::syntax(line, "empty path"));
    }
    for t in tokens {
        if quiver.arrow(t).is_none() {
            return Err(ParseError::Undeclared {
                line,
                kind: "arrow",
                id: t.to_string(),
            });
        }
    }
    Path::from_arrows(quiver, tokens).map_err(|e| ParseError::Invalid {
        line,
        message: e.to_string(),
    })
}

pub fn serialize_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    let q = p.quiver();
    for v in q.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for a in q.arrows() {
        writeln!(out, "arrow {} {} {}", a.id, a.source, a.target).unwrap();
    }
    for r in p.relations() {
        match r {
            Relation::Monomial(m) => writeln!(out, "rel mono {}", path_text(m)).unwrap(),
            Relation::Binomial(l, r) => {
                writeln!(out, "rel comm {} = {}", path_text(l), path_text(r)).unwrap()
            }
        }
    }
    out
}

fn path_text(p: &Path) -> String {
    if p.is_trivial() {
        format!("e({})", p.source())
    } else {
        p.arrows().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_quiver() {
        let p = parse_presentation("vertex 1\nvertex 2\narrow a 1 2").unwrap();
        assert_eq!(p.quiver().vertex_count(), 2);
        assert_eq!(p.quiver().arrow("a").unwrap().target, "2");
        assert!(p.relations().is_empty());
    }

    #[test]
    fn undeclared_vertex() {
        let err = parse_presentation("arrow a 1 2").unwrap_err();
        assert!(matches!(err, ParseError::Undeclared { line: 1, kind: "vertex", .. }));
    }

    #[test]
    fn relation_paths_must_compose() {
        let err = parse_presentation("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrel mono b a")
            .unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: 6, .. }));
    }

    #[test]
    fn round_trip_with_comments() {
        let text = "# loop\nvertex 1\narrow x 1 1   # the loop\narrow y 1 1\nrel comm x y = y x\nrel mono x x\n";
        let p = parse_presentation(text).unwrap();
        let canonical = serialize_presentation(&p);
        assert_eq!(
            canonical,
            "vertex 1\narrow x 1 1\narrow y 1 1\nrel comm x y = y x\nrel mono x x\n"
        );
        assert_eq!(parse_presentation(&canonical).unwrap(), p);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_presentation("vertex 1\nvertx 2").unwrap_err();
        assert_eq!(err, ParseError::syntax(2, "unexpected `vertx`"));
        let err = parse_presentation("vertex 1\narrow x 1 1\nrel comm x x").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
    }
}
