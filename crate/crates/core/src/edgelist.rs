//! Edge-list text format.
//!
//! ```text
//! v e
//! u1 v1
//! ...
//! ```
//!
//! The header gives the vertex and edge counts, followed by one line per edge with
//! 1-based vertex ids.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| err("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| err(format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if let Some(extra) = it.next() {
        return Err(err(format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let (v, e) = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(e);
    for (lineno, line) in lines {
        let (a, b) = parse_pair(line, lineno)?;
        if a == 0 || b == 0 || a > v || b > v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("vertex id out of range 1..={v}"),
            });
        }
        edges.push((a - 1, b - 1));
    }
    if edges.len() != e {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {e} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(v, edges)
}
