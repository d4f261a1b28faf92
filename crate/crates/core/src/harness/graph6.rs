//! graph6, short form only (ν ≤ 62).
//!
//! Byte 0 is `ν + 63`. The upper triangle follows column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, most significant
//! bit first, each byte offset by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match body.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 { offset: skip + offset, reason: reason.to_string() };
    let first = *bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, "byte outside 63..=126"));
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_MAX_ORDER {
        return Err(err(0, "long-form orders (> 62) are not supported"));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < 1 + nbytes {
        return Err(err(bytes.len(), "truncated edge bits"));
    }
    if bytes.len() > 1 + nbytes {
        return Err(err(1 + nbytes, "trailing bytes after edge bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let offset = 1 + k / 6;
            let byte = bytes[offset];
            if !(63..=126).contains(&byte) {
                return Err(err(offset, "byte outside 63..=126"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = bytes[nbytes];
        if !(63..=126).contains(&last) {
            return Err(err(nbytes, "byte outside 63..=126"));
        }
        if (last - 63) & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err(nbytes, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge { what: "graph6 short form", order: n, limit: GRAPH6_MAX_ORDER });
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
