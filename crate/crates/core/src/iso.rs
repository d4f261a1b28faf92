//! Isomorphism testing for small graphs by invariant screening and
//! backtracking over signature-compatible assignments.

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

/// Default order cap for [`is_isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 12;

/// Per-vertex invariant: degree, sorted neighbour degrees, triangle count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct Signature {
    degree: usize,
    neighbor_degrees: Vec<usize>,
    triangles: usize,
}

fn signatures(g: &Graph) -> Vec<Signature> {
    let rows = g.rows();
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = Bits(rows[v]).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            let triangles =
                Bits(rows[v]).map(|u| (rows[u] & rows[v]).count_ones() as usize).sum::<usize>() / 2;
            Signature { degree: g.degree(v), neighbor_degrees: nd, triangles }
        })
        .collect()
}

/// Graph-level invariant: equal for isomorphic graphs.
pub fn invariant_key(g: &Graph) -> (usize, usize, Vec<(usize, usize, Vec<usize>)>) {
    let mut sigs: Vec<(usize, usize, Vec<usize>)> = signatures(g)
        .into_iter()
        .map(|s| (s.degree, s.triangles, s.neighbor_degrees))
        .collect();
    sigs.sort_unstable();
    (g.order(), g.size(), sigs)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_with_limit(g, h, DEFAULT_ISO_LIMIT)
}

pub fn is_isomorphic_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    Ok(find_isomorphism(g, h, limit)?.is_some())
}

/// Returns `map` with `map[v]` the image in `h` of vertex `v` of `g`.
pub fn find_isomorphism(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order().max(h.order());
    if n > limit {
        return Err(Error::TooLarge { what: "isomorphism test", order: n, limit });
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    let sg = signatures(g);
    let sh = signatures(h);
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    // Candidate images per vertex of g.
    let cand: Vec<u128> = sg
        .iter()
        .map(|s| (0..n).filter(|&u| sh[u] == *s).fold(0u128, |acc, u| acc | bit(u)))
        .collect();

    // Visit order: rarest class first, then most already-placed neighbours.
    let rows = g.rows();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u128;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .min_by_key(|&v| {
                let links = (rows[v] & placed).count_ones();
                (std::cmp::Reverse(links), cand[v].count_ones(), v)
            })
            .expect("unplaced vertex");
        order.push(next);
        placed |= bit(next);
    }

    let mut map = vec![usize::MAX; n];
    let found = extend(g, h, &order, &cand, 0, 0, &mut map);
    Ok(found.then_some(map))
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    cand: &[u128],
    depth: usize,
    used: u128,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let gv = g.rows()[v];
    // Image of v's already-mapped neighbours must equal the image's mapped neighbours.
    let mut want = 0u128;
    for &u in &order[..depth] {
        if gv & bit(u) != 0 {
            want |= bit(map[u]);
        }
    }
    for w in Bits(cand[v] & !used) {
        if h.rows()[w] & used != want {
            continue;
        }
        map[v] = w;
        if extend(g, h, order, cand, depth + 1, used | bit(w), map) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}
