//! Binary graph operations. Product vertex `(i, j)` has flat index
//! `i * ν(H) + j`; join and corona list the left operand's vertices first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Join,
    Corona,
    Cartesian,
    Tensor,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 6] = [
        ProductKind::Join,
        ProductKind::Corona,
        ProductKind::Cartesian,
        ProductKind::Tensor,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ProductKind::Join => "join",
            ProductKind::Corona => "corona",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Tensor => "tensor",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lex",
        }
    }

    pub fn apply(self, g: &Graph, h: &Graph) -> Result<Graph> {
        match self {
            ProductKind::Join => join(g, h),
            ProductKind::Corona => corona(g, h),
            kind => product(kind, g, h),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown product kind `{s}`")))
    }
}

fn check(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::TooLarge { what: "graph product", order, limit: MAX_ORDER });
    }
    Ok(())
}

/// `G + H`: disjoint union plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    check(n + m)?;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (n + u, n + v)));
    edges.extend((0..n).flat_map(|i| (0..m).map(move |j| (i, n + j))));
    Graph::from_edges(n + m, edges)
}

/// `G ∘ H`: copy `i` of `H` occupies `n + i*m .. n + (i+1)*m` and is
/// joined to vertex `i` of `G`. With `ν(H) = 0` this is `G` itself.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    let order = n * (1 + m);
    check(order)?;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n {
        let base = n + i * m;
        edges.extend(h.edges().map(|(u, v)| (base + u, base + v)));
        edges.extend((0..m).map(|j| (i, base + j)));
    }
    Graph::from_edges(order, edges)
}

/// Cartesian, tensor, strong or lexicographic product.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    check(n * m)?;
    let adjacent = |i: usize, j: usize, k: usize, l: usize| -> bool {
        let gi = g.adjacent(i, k);
        let hj = h.adjacent(j, l);
        match kind {
            ProductKind::Cartesian => (i == k && hj) || (j == l && gi),
            ProductKind::Tensor => gi && hj,
            ProductKind::Strong => (i == k && hj) || (j == l && gi) || (gi && hj),
            ProductKind::Lexicographic => gi || (i == k && hj),
            ProductKind::Join | ProductKind::Corona => unreachable!("not a vertex-set product"),
        }
    };
    if matches!(kind, ProductKind::Join | ProductKind::Corona) {
        return Err(Error::InvalidParameter(format!("`{kind}` is not a V(G)xV(H) product")));
    }
    let mut edges = Vec::new();
    for a in 0..n * m {
        for b in a + 1..n * m {
            if adjacent(a / m, a % m, b / m, b % m) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n * m, edges)
}

/// Decodes a flat product index into `(i, j)`.
pub fn decode_pair(flat: usize, right_order: usize) -> (usize, usize) {
    (flat / right_order, flat % right_order)
}
