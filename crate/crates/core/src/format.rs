//! Line-oriented text formats.
//!
//! Tree file:
//!
//! ```text
//! tree <n>
//! <vertex-id> <parent-id>      (n lines, -1 marks the root)
//! ```
//!
//! Coloring file:
//!
//! ```text
//! coloring <n> <k>
//! <vertex-id> <color>          (n lines)
//! ```
//!
//! Ids must cover `0..n` exactly once, in any order. Lines starting with `#`
//! and blank lines are ignored. Writers emit ids in ascending order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Coloring, ColoringError, LrfCertificate, Violation};
use crate::trees::{RootedTree, TreeError, Vertex};
use crate::words::SquareWitness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("expected {expected} entries, found {found}")]
    Count { expected: usize, found: usize },
    #[error("vertex {vertex} has no entry")]
    MissingVertex { vertex: Vertex },
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeError),
    #[error("invalid coloring: {0}")]
    Coloring(#[from] ColoringError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("bad {what} {token:?}")))
}

/// Reads `n` lines of `<id> <value>` into a dense table.
fn read_table<'a, T: std::str::FromStr + Clone>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    what: &str,
) -> Result<Vec<T>, FormatError> {
    let mut table: Vec<Option<T>> = vec![None; n];
    let mut found = 0;
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [id, value] = tokens[..] else {
            return Err(syntax(line, format!("expected `<vertex-id> <{what}>`")));
        };
        let id: Vertex = parse_num(line, id, "vertex id")?;
        if id >= n {
            return Err(syntax(line, format!("vertex id {id} out of range 0..{n}")));
        }
        if table[id].is_some() {
            return Err(syntax(line, format!("vertex id {id} listed twice")));
        }
        table[id] = Some(parse_num(line, value, what)?);
        found += 1;
    }
    if found != n {
        return Err(FormatError::Count { expected: n, found });
    }
    table
        .into_iter()
        .enumerate()
        .map(|(vertex, v)| v.ok_or(FormatError::MissingVertex { vertex }))
        .collect()
}

pub fn parse_tree(text: &str) -> Result<RootedTree, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["tree", n] => parse_num(line, n, "vertex count")?,
        _ => return Err(syntax(line, "expected header `tree <n>`")),
    };
    if n == 0 {
        return Err(syntax(line, "a tree needs at least one vertex"));
    }
    let raw: Vec<i64> = read_table(lines, n, "parent-id")?;
    let parents = raw
        .iter()
        .enumerate()
        .map(|(vertex, &p)| match p {
            -1 => Ok(None),
            p if p >= 0 => Ok(Some(p as Vertex)),
            p => Err(FormatError::Tree(TreeError::ParentOutOfRange {
                vertex,
                parent: p.unsigned_abs() as Vertex,
                count: n,
            })),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RootedTree::from_parents(&parents)?)
}

pub fn write_tree(tree: &RootedTree) -> String {
    let mut out = format!("tree {}\n", tree.len());
    for v in tree.vertices() {
        match tree.parent(v) {
            Some(p) => writeln!(out, "{v} {p}"),
            None => writeln!(out, "{v} -1"),
        }
        .expect("writing to a String");
    }
    out
}

/// Edge list, one `<parent> <child>` per line.
pub fn write_edges(tree: &RootedTree) -> String {
    tree.edges().map(|(p, c)| format!("{p} {c}\n")).collect()
}

pub fn parse_coloring(text: &str) -> Result<Coloring, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let (n, k): (usize, u8) = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["coloring", n, k] => (
            parse_num(line, n, "vertex count")?,
            parse_num(line, k, "color count")?,
        ),
        _ => return Err(syntax(line, "expected header `coloring <n> <k>`")),
    };
    let colors: Vec<u8> = read_table(lines, n, "color")?;
    Ok(Coloring::new(colors, k)?)
}

pub fn write_coloring(coloring: &Coloring) -> String {
    let mut out = format!("coloring {} {}\n", coloring.len(), coloring.k());
    for (v, c) in coloring.colors().iter().enumerate() {
        writeln!(out, "{v} {c}").expect("writing to a String");
    }
    out
}

/// Reads a certificate in the `key: value` form produced by its `Display`.
pub fn parse_certificate(text: &str) -> Result<LrfCertificate, FormatError> {
    let mut verdict = None;
    let mut path = None;
    let mut word = None;
    let mut offset = None;
    let mut period = None;
    for (line, text) in content_lines(text) {
        let (key, value) = text
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "verdict" => verdict = Some((line, value.to_owned())),
            "path" => {
                path = Some(
                    value
                        .split_whitespace()
                        .map(|t| parse_num::<Vertex>(line, t, "vertex id"))
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
            "word" => {
                word = Some(
                    value
                        .chars()
                        .map(|ch| {
                            ch.to_digit(36)
                                .map(|d| d as u8)
                                .ok_or_else(|| syntax(line, format!("bad letter {ch:?}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
            "offset" => offset = Some(parse_num::<usize>(line, value, "offset")?),
            "period" => period = Some(parse_num::<usize>(line, value, "period")?),
            // Reports may carry extra fields around the certificate.
            _ => {}
        }
    }
    let (line, verdict) = verdict.ok_or_else(|| syntax(0, "missing `verdict`"))?;
    match verdict.as_str() {
        "VALID" => Ok(LrfCertificate::Valid),
        "VIOLATION" => {
            let missing = |k: &str| syntax(line, format!("VIOLATION without `{k}`"));
            Ok(LrfCertificate::Violation(Violation {
                path: path.ok_or_else(|| missing("path"))?,
                word: word.ok_or_else(|| missing("word"))?,
                square: SquareWitness {
                    offset: offset.ok_or_else(|| missing("offset"))?,
                    period: period.ok_or_else(|| missing("period"))?,
                },
            }))
        }
        other => Err(syntax(line, format!("unknown verdict {other:?}"))),
    }
}
