//! Shared plumbing for the line-oriented text formats.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared {kind} `{id}`")]
    Undeclared {
        line: usize,
        kind: &'static str,
        id: String,
    },
    #[error("line {line}: duplicate {kind} `{id}`")]
    Duplicate {
        line: usize,
        kind: &'static str,
        id: String,
    },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("{0}")]
    Structure(String),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((k + 1, tokens))
    })
}

pub(crate) fn check_id(line: usize, id: &str) -> Result<(), ParseError> {
    if crate::names::is_valid_id(id) {
        Ok(())
    } else {
        Err(ParseError::syntax(line, format!("invalid identifier `{id}`")))
    }
}
