//! All graphs of a given order up to isomorphism, by vertex augmentation:
//! every graph on `n` vertices arises from some graph on `n − 1` vertices
//! plus one vertex with some neighbourhood. Candidates are bucketed by an
//! isomorphism invariant and deduplicated with the backtracking test.

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::Graph;
use crate::iso::{invariant_key, is_isomorphic_with_limit};

pub const CATALOG_LIMIT: usize = 8;

/// Non-isomorphic graphs on `n` vertices, in a deterministic order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOG_LIMIT {
        return Err(crate::error::Error::TooLarge { what: "graph catalog", order: n, limit: CATALOG_LIMIT });
    }
    let mut level = vec![Graph::empty(0)?];
    for order in 1..=n {
        let mut out: Vec<Graph> = Vec::new();
        let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
        for base in &level {
            let prev = order - 1;
            for nbhd in 0u32..(1u32 << prev) {
                let edges = base
                    .edges()
                    .chain((0..prev).filter(|&u| nbhd >> u & 1 == 1).map(|u| (u, prev)));
                let g = Graph::from_edges(order, edges)?;
                let bucket = buckets.entry(invariant_key(&g)).or_default();
                let mut dup = false;
                for &i in bucket.iter() {
                    if is_isomorphic_with_limit(&g, &out[i], order)? {
                        dup = true;
                        break;
                    }
                }
                if !dup {
                    bucket.push(out.len());
                    out.push(g);
                }
            }
        }
        level = out;
    }
    Ok(level)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(|g| g.is_connected()).collect())
}

/// Connected graphs of every order in `1..=max_order`.
pub fn connected_up_to(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}
