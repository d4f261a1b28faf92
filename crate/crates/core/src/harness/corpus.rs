//! Seeded random graphs and self-complementary graph search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{find_isomorphism, is_isomorphic_with_limit};

/// Erdős–Rényi `G(n, p)`. Pairs `(i, j)`, `i < j`, are visited in
/// lexicographic order and each draws `gen_bool(p)` from
/// `ChaCha8Rng::seed_from_u64(seed)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Self-complementary graphs on `n = 4t` vertices generated from the
/// antimorphism `σ = (0 1 2 3)(4 5 6 7)...`: pairs fall into σ-orbits of
/// even length, and taking alternate pairs of every orbit gives a graph
/// that σ maps onto its complement. Returns pairwise non-isomorphic graphs
/// in generation order, at most `want` of them.
pub fn self_complementary_graphs(n: usize, want: usize) -> Result<Vec<Graph>> {
    if n % 4 != 0 {
        return Err(Error::InvalidParameter(format!("antimorphism search needs n divisible by 4, got {n}")));
    }
    let sigma = |v: usize| v / 4 * 4 + (v % 4 + 1) % 4;
    let norm = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    let mut seen = std::collections::BTreeSet::new();
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if seen.contains(&(i, j)) {
                continue;
            }
            let mut orbit = vec![(i, j)];
            let mut e = norm((sigma(i), sigma(j)));
            while e != (i, j) {
                orbit.push(e);
                e = norm((sigma(e.0), sigma(e.1)));
            }
            seen.extend(orbit.iter().copied());
            orbits.push(orbit);
        }
    }
    if orbits.iter().any(|o| o.len() % 2 == 1) {
        return Err(Error::InvalidParameter("antimorphism has an odd pair orbit".into()));
    }
    let mut found: Vec<Graph> = Vec::new();
    for choice in 0u64..(1u64 << orbits.len()) {
        let edges = orbits.iter().enumerate().flat_map(|(k, orbit)| {
            let parity = (choice >> k & 1) as usize;
            orbit.iter().skip(parity).step_by(2).copied()
        });
        let g = Graph::from_edges(n, edges)?;
        debug_assert!(find_isomorphism(&g, &g.complement(), n)?.is_some());
        let mut fresh = true;
        for h in &found {
            if is_isomorphic_with_limit(&g, h, n)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            found.push(g);
            if found.len() == want {
                break;
            }
        }
    }
    Ok(found)
}
