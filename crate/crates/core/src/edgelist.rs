//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 4 4
//! 0 1
//! 0 3
//! 1 2
//! 2 3
//! ```
//!
//! The first data line holds the order and the number of edge lines that
//! follow. Ids are 0-based. Reading collapses duplicate and reversed pairs;
//! writing emits each edge once as `u v` with `u < v`, sorted.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the edge-list text format.
pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let [order, count] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(count);
    for (line, text) in lines {
        if edges.len() == count {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {count} edges"),
            });
        }
        let [u, v] = parse_pair(line, text)?;
        edges.push((u, v));
    }
    if edges.len() != count {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("expected {count} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(order, edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let bad = |message: String| Error::Parse { line, message };
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| bad("expected two integers".into()))?;
        field
            .parse()
            .map_err(|_| bad(format!("`{field}` is not a non-negative integer")))
    };
    let pair = [next()?, next()?];
    if let Some(extra) = fields.next() {
        return Err(bad(format!("unexpected trailing field `{extra}`")));
    }
    Ok(pair)
}

/// Renders `graph` in canonical form.
pub fn render(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", graph.order(), graph.size()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse(&text)
}

pub fn write_file(path: &Path, graph: &Graph) -> Result<()> {
    fs::write(path, render(graph)).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}
