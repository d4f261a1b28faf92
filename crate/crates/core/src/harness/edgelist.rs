//! Edge-list text: first line `n m`, then `m` lines `u v` (0-based).
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::EdgeList { line: 1, reason: "missing `n m` header".into() })?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        edges.push(pair(line, text)?);
    }
    if edges.len() != m {
        return Err(Error::EdgeList { line: hline, reason: format!("header declares {m} edges, found {}", edges.len()) });
    }
    Graph::from_edges(n, edges)
}

fn pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |reason: &str| Error::EdgeList { line, reason: reason.to_string() };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("expected exactly two integers"));
    }
    let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
    Ok((a, b))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
