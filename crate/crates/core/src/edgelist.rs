//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 4          optional header, must precede the arcs
//! 1 2          one arc per line, 1-based vertex ids
//! 2 1  # trailing comments are allowed
//! ```
//!
//! Without a header the vertex count is the largest id that appears.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<Digraph> {
    let mut header: Option<usize> = None;
    let mut arcs: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens[0] == "n" {
            if header.is_some() {
                return Err(parse_err(line_no, "duplicate header"));
            }
            if !arcs.is_empty() {
                return Err(parse_err(line_no, "header must precede the arcs"));
            }
            let [_, count] = tokens[..] else {
                return Err(parse_err(line_no, "expected `n <count>`"));
            };
            let count: usize =
                count.parse().map_err(|_| parse_err(line_no, format!("invalid vertex count `{count}`")))?;
            if count == 0 {
                return Err(parse_err(line_no, "vertex count must be positive"));
            }
            header = Some(count);
            continue;
        }
        let [a, b] = tokens[..] else {
            return Err(parse_err(line_no, format!("expected `<i> <j>`, got `{body}`")));
        };
        let id = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(0) => Err(parse_err(line_no, "vertex ids are 1-based")),
                Ok(v) => Ok(v),
                Err(_) => Err(parse_err(line_no, format!("invalid vertex id `{s}`"))),
            }
        };
        let (i, j) = (id(a)?, id(b)?);
        if i == j {
            return Err(parse_err(line_no, format!("loop at vertex {i}")));
        }
        if let Some(n) = header {
            if i.max(j) > n {
                return Err(parse_err(line_no, format!("vertex {} exceeds declared n = {n}", i.max(j))));
            }
        }
        arcs.push((line_no, i - 1, j - 1));
    }
    let n = header.or_else(|| arcs.iter().map(|&(_, i, j)| i.max(j) + 1).max()).unwrap_or(0);
    if arcs.is_empty() {
        return Err(parse_err(text.lines().count().max(1), "no arcs"));
    }
    Digraph::from_arc_list(n, arcs.iter().map(|&(_, i, j)| (i, j)))
}

/// Header plus one arc per line in lexicographic order.
pub fn serialize(g: &Digraph) -> String {
    let mut s = String::new();
    writeln!(s, "n {}", g.vertex_count()).unwrap();
    for &(i, j) in g.arcs() {
        writeln!(s, "{} {}", i + 1, j + 1).unwrap();
    }
    s
}

pub fn read_file(path: &std::path::Path) -> std::result::Result<Digraph, ReadError> {
    let text = std::fs::read_to_string(path).map_err(ReadError::Io)?;
    parse(&text).map_err(ReadError::Parse)
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(std::io::Error),
    #[error(transparent)]
    Parse(Error),
}
