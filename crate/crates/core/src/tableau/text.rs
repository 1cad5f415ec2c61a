//! Plain-text tableau format.
//!
//! One row per line, boxes separated by whitespace. `.` marks a box of the
//! inner shape (or a gap), `*` a bullet, `N` a high letter and `N'` a low one.
//! Row `i` implicitly starts in column `i`, so no indentation is written.

use thiserror::Error;

use super::ShiftedTableau;
use crate::shapes::{Letter, SkewShape, StrictPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Token {
    Gap,
    Bullet,
    Entry(Letter),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Located {
    pub token: Token,
    pub line: usize,
    pub column: usize,
}

/// Splits text into rows of tokens. Blank lines are skipped.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Vec<Located>>, ParseError> {
    let mut rows = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let mut row = Vec::new();
        let mut chars = line.char_indices().peekable();
        while let Some(&(start, ch)) = chars.peek() {
            if ch.is_whitespace() {
                chars.next();
                continue;
            }
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let word = &line[start..end];
            let column = line[..start].chars().count() + 1;
            let token = match word {
                "." => Token::Gap,
                "*" => Token::Bullet,
                w => Token::Entry(
                    w.parse::<Letter>()
                        .map_err(|e| ParseError::new(ln + 1, column, e))?,
                ),
            };
            row.push(Located {
                token,
                line: ln + 1,
                column,
            });
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn parse_tableau(text: &str) -> Result<ShiftedTableau, ParseError> {
    let rows = tokenize(text)?;
    let mut outer = Vec::with_capacity(rows.len());
    let mut inner = Vec::new();
    let mut letters = Vec::with_capacity(rows.len());
    for row in &rows {
        let mut gaps = 0u32;
        let mut entries = Vec::new();
        for tok in row {
            match tok.token {
                Token::Gap if entries.is_empty() => gaps += 1,
                Token::Gap => {
                    return Err(ParseError::new(
                        tok.line,
                        tok.column,
                        "inner-shape boxes must precede the entries of a row",
                    ))
                }
                Token::Bullet => {
                    return Err(ParseError::new(tok.line, tok.column, "bullets are not allowed here"))
                }
                Token::Entry(l) => entries.push(l),
            }
        }
        outer.push(gaps + entries.len() as u32);
        if gaps > 0 {
            if inner.len() != letters.len() {
                return Err(ParseError::new(
                    row[0].line,
                    row[0].column,
                    "inner shape must be a strict partition",
                ));
            }
            inner.push(gaps);
        }
        letters.push(entries);
    }
    let at_end = |msg: String| {
        let line = rows.last().map_or(1, |r| r[0].line);
        ParseError::new(line, 1, msg)
    };
    let outer = StrictPartition::new(outer).map_err(|e| at_end(e.to_string()))?;
    let inner = StrictPartition::new(inner).map_err(|e| at_end(e.to_string()))?;
    let shape = SkewShape::new(outer, inner).map_err(|e| at_end(e.to_string()))?;
    ShiftedTableau::new(shape, letters).map_err(|e| at_end(e.to_string()))
}

/// Canonical text: every row terminated by a newline, nothing for the empty
/// tableau.
pub fn print_tableau(t: &ShiftedTableau) -> String {
    let mut out = String::new();
    for (i, row) in t.rows().iter().enumerate() {
        let gaps = t.shape().inner().part(i) as usize;
        let cells: Vec<String> = std::iter::repeat_n(".".to_string(), gaps)
            .chain(row.iter().map(Letter::to_string))
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
