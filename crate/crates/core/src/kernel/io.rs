//! Cayley-table file formats.
//!
//! JSON: `{"order": n, "table": [[..], ..], "names": [..]}` with `names`
//! optional. Plain text: the order on the first line, then `n` rows of `n`
//! whitespace-separated 0-based indices. Both parse to the same value; the
//! writer always emits JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{validate_table, FiniteSemigroup, KernelError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON table: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Text { line: usize, message: String },
    #[error("declared order {declared} does not match the {rows} table rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error(transparent)]
    Invalid(#[from] KernelError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_table(text: &str) -> Result<FiniteSemigroup, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<FiniteSemigroup, FormatError> {
    let file: TableFile = serde_json::from_str(text)?;
    if file.table.len() != file.order {
        return Err(FormatError::OrderMismatch {
            declared: file.order,
            rows: file.table.len(),
        });
    }
    let s = validate_table(file.order, file.table)?;
    Ok(match file.names {
        Some(names) => s.with_names(names)?,
        None => s,
    })
}

fn parse_text(text: &str) -> Result<FiniteSemigroup, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::Text {
        line: 1,
        message: "empty input".into(),
    })?;
    let order: usize = header.parse().map_err(|_| FormatError::Text {
        line,
        message: format!("expected the order, found {header:?}"),
    })?;
    let mut rows = Vec::with_capacity(order);
    for (line, content) in lines {
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| FormatError::Text {
                    line,
                    message: format!("{tok:?} is not an element index"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(FormatError::OrderMismatch {
            declared: order,
            rows: rows.len(),
        });
    }
    Ok(validate_table(order, rows)?)
}

pub fn to_json(s: &FiniteSemigroup) -> String {
    let file = TableFile {
        order: s.order(),
        table: s.rows(),
        names: s.names().map(<[String]>::to_vec),
    };
    serde_json::to_string(&file).expect("table serialization cannot fail")
}

pub fn load_table(path: impl AsRef<Path>) -> Result<FiniteSemigroup, FormatError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text)
}

pub fn save_table(s: &FiniteSemigroup, path: impl AsRef<Path>) -> Result<(), FormatError> {
    let path = path.as_ref();
    std::fs::write(path, to_json(s) + "\n").map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
