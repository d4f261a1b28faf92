//! Immutable finite simple graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one `u128` bitset row per vertex, so every
//! structural operation is a handful of word operations and all set
//! iteration is naturally ascending.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 128;

#[inline]
pub(crate) const fn bit(v: usize) -> u128 {
    1u128 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Ascending iterator over the set bits of a mask.
#[derive(Clone)]
pub(crate) struct Bits(pub(crate) u128);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Compares two masks as ascending member lists.
pub(crate) fn lex_cmp(a: u128, b: u128) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let v = diff.trailing_zeros();
    // Members below `v` agree. Whichever side holds `v` wins the position
    // unless the other side has run out of members.
    let a_holds = a >> v & 1 == 1;
    let other = if a_holds { b } else { a };
    let holder_smaller = (other >> v) != 0;
    if a_holds == holder_smaller {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// A subset of the vertices of some host graph.
///
/// Ordering is lexicographic on the ascending member list, which is the
/// tie-break order used throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u128) -> Self {
        VertexSet(mask)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn mask(self) -> u128 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_ORDER, "vertex {v} beyond MAX_ORDER");
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_ORDER {
            self.0 &= !bit(v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl ExactSizeIterator<Item = usize> + Clone {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.0, other.0)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u128>,
    size: usize,
}

/// An induced subgraph together with the host indices of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `original[i]` is the host vertex relabelled to `i`.
    pub original: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, rows: vec![0; n], size: 0 })
    }

    /// Builds a graph from an edge list. Duplicates and reversed duplicates
    /// merge; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        g.recount();
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, rows: Vec<u128>) -> Graph {
        debug_assert_eq!(rows.len(), n);
        let mut g = Graph { n, rows, size: 0 };
        g.recount();
        debug_assert!(g.check_invariants());
        g
    }

    fn recount(&mut self) {
        let twice: usize = self.rows.iter().map(|r| r.count_ones() as usize).sum();
        self.size = twice / 2;
    }

    fn check_invariants(&self) -> bool {
        let all = low_mask(self.n);
        (0..self.n).all(|v| {
            self.rows[v] & bit(v) == 0
                && self.rows[v] & !all == 0
                && Bits(self.rows[v]).all(|u| self.rows[u] & bit(v) != 0)
        })
    }

    /// Order ν(G).
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size ε(G).
    pub fn size(&self) -> usize {
        self.size
    }

    /// si(G) = ν(G) + ε(G).
    pub fn structor_index(&self) -> usize {
        self.n + self.size
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        edges_in(&self.rows, set.0)
    }

    /// si of the subgraph induced by `set`.
    pub fn structor_index_of(&self, set: VertexSet) -> usize {
        set.len() + self.edges_within(set)
    }

    pub fn validate_set(&self, set: VertexSet) -> Result<()> {
        match set.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, order: self.n }),
            _ => Ok(()),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.size == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected with every degree 2 and odd order.
    pub fn is_odd_cycle(&self) -> bool {
        self.n >= 3 && self.n % 2 == 1 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || component_of(&self.rows, low_mask(self.n), 0) == low_mask(self.n)
    }

    /// Induced subgraph on `set`, relabelled ascending.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Induced> {
        self.validate_set(set)?;
        let original = set.to_vec();
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in original.iter().enumerate() {
            pos[v] = i;
        }
        let rows = original
            .iter()
            .map(|&v| Bits(self.rows[v] & set.0).fold(0u128, |acc, u| acc | bit(pos[u])))
            .collect();
        Ok(Induced { graph: Graph::from_rows(original.len(), rows), original })
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect();
        Graph::from_rows(self.n, rows)
    }

    /// Line graph; vertex `i` is the `i`-th edge in lexicographic order.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        check_order(edges.len())?;
        let mut rows = vec![0u128; edges.len()];
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
        }
        Ok(Graph::from_rows(edges.len(), rows))
    }

    /// Mycielskian: `0..n` original, `n..2n` shadows, `2n` the apex.
    pub fn mycielski(&self) -> Result<Graph> {
        let n = self.n;
        check_order(2 * n + 1)?;
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        for (u, v) in self.edges() {
            edges.push((u, n + v));
            edges.push((v, n + u));
        }
        for i in 0..n {
            edges.push((n + i, 2 * n));
        }
        Graph::from_edges(2 * n + 1, edges)
    }

    /// Vertex-disjoint union; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n;
        check_order(n + other.n)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n));
        Ok(Graph::from_rows(n + other.n, rows))
    }

    /// Components, each ascending, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        components(&self.rows, low_mask(self.n)).into_iter().map(VertexSet).collect()
    }

    /// Eccentricity-based diameter; `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 || !self.is_connected() {
            return None;
        }
        let all = low_mask(self.n);
        let mut diam = 0;
        for s in 0..self.n {
            let mut seen = bit(s);
            let mut frontier = bit(s);
            let mut d = 0;
            while seen != all {
                frontier = Bits(frontier).fold(0, |acc, v| acc | self.rows[v]) & !seen;
                seen |= frontier;
                d += 1;
            }
            diam = diam.max(d);
        }
        Some(diam)
    }

    /// Stable content hash (SHA-256 over order and upper-triangle bits).
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        for r in &self.rows {
            h.update(r.to_le_bytes());
        }
        hex::encode(&h.finalize()[..8])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::TooLarge { what: "graph", order: n, limit: MAX_ORDER })
    } else {
        Ok(())
    }
}

pub(crate) fn edges_in(rows: &[u128], mask: u128) -> usize {
    Bits(mask).map(|v| (rows[v] & mask).count_ones() as usize).sum::<usize>() / 2
}

/// Vertices of `mask` reachable from `start` inside `mask`.
pub(crate) fn component_of(rows: &[u128], mask: u128, start: usize) -> u128 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let next = Bits(frontier).fold(0, |acc, v| acc | rows[v]) & mask & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn components(rows: &[u128], mask: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let c = component_of(rows, mask, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}

pub(crate) fn is_connected_mask(rows: &[u128], mask: u128) -> bool {
    mask == 0 || component_of(rows, mask, mask.trailing_zeros() as usize) == mask
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.size(), 3);
        let g = Graph::from_edges(4, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
        assert!(g.adjacent(1, 0));
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(Graph::empty(MAX_ORDER + 1).unwrap_err().is_capability());
    }

    #[test]
    fn structor_index_examples() {
        assert_eq!(complete(1).structor_index(), 1);
        assert_eq!(complete(2).structor_index(), 3);
        assert_eq!(complete(3).structor_index(), 6);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap().graph, c5);
        let k3 = complete(4).induced_subgraph([0, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(k3.graph, complete(3));
        assert_eq!(k3.original, vec![0, 2, 3]);
        let p3 = c5.induced_subgraph([1, 2, 3].into_iter().collect()).unwrap().graph;
        assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert!(c5.induced_subgraph([0, 7].into_iter().collect()).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement(), Graph::empty(4).unwrap());
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.complement(), Graph::from_edges(3, [(0, 2)]).unwrap());
    }

    #[test]
    fn line_graph_examples() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.line_graph().unwrap(), complete(3));
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.line_graph().unwrap(), Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(Graph::empty(5).unwrap().line_graph().unwrap().order(), 0);
    }

    #[test]
    fn mycielski_examples() {
        let m = Graph::empty(1).unwrap().mycielski().unwrap();
        assert_eq!(m, Graph::from_edges(3, [(1, 2)]).unwrap());
        let grotzsch = cycle(5).mycielski().unwrap();
        assert_eq!((grotzsch.order(), grotzsch.size()), (11, 20));
    }

    #[test]
    fn components_examples() {
        let g = complete(3).disjoint_union(&complete(2)).unwrap();
        let sizes: Vec<usize> = g.connected_components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 2]);
        assert_eq!(Graph::empty(4).unwrap().connected_components().len(), 4);
        assert_eq!(cycle(6).connected_components().len(), 1);
    }

    #[test]
    fn lex_order_on_sets() {
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert!(s(&[0, 1]) < s(&[0, 2]));
        assert!(s(&[0, 1]) < s(&[0, 1, 2]));
        assert!(s(&[0, 5]) < s(&[1]));
        assert!(s(&[]) < s(&[0]));
        assert!(s(&[1, 2]) > s(&[1]));
        let mut v = vec![s(&[2]), s(&[0, 3]), s(&[0]), s(&[0, 1, 9])];
        v.sort();
        let lists: Vec<Vec<usize>> = v.iter().map(|x| x.to_vec()).collect();
        let mut expect = lists.clone();
        expect.sort();
        assert_eq!(lists, expect);
    }

    #[test]
    fn diameter_values() {
        assert_eq!(complete(4).diameter(), Some(1));
        assert_eq!(cycle(6).diameter(), Some(3));
        assert_eq!(Graph::empty(2).unwrap().diameter(), None);
    }
}
