//! Chromatic core subgraphs: induced subgraphs of minimum structor index
//! (vertices plus edges) with the host's chromatic number.
//!
//! [`CoreFinder`] reduces to the components of maximum χ, answers weakly
//! perfect components with a χ-clique (the smallest graph of chromatic
//! number k is `K_k`), and otherwise searches vertex subsets. Only
//! connected subsets with minimum degree at least k−1 are examined: a core
//! of minimum si is vertex-critical, since if deleting some vertex kept χ
//! the smaller subset would have smaller si, and a vertex of degree below
//! k−1 in a k-chromatic graph can always be deleted without losing χ.
//!
//! [`oracle_core`] is an exhaustive sweep over all subsets driven by the
//! subset dynamic programme in [`crate::coloring::induced_tables`]; it
//! shares no search code with the finder.

use serde::Serialize;

use crate::coloring::{
    chi_of, cliques_of_size, first_clique_of_size, induced_tables, is_colorable, max_clique_mask,
};
use crate::error::{Error, Result};
use crate::graph::{bit, components, edges_in, is_connected_mask, low_mask, Bits, Graph, VertexSet};
use crate::iso::is_isomorphic_with_limit;

pub const DEFAULT_SEARCH_LIMIT: usize = 16;
pub const ORACLE_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Minimality {
    OracleVerified,
    PrunedSearch,
    BoundMatched,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreCertificate {
    pub vertices: VertexSet,
    pub chi: usize,
    pub si: usize,
    pub minimality: Minimality,
    pub host_hash: String,
}

impl CoreCertificate {
    fn new(g: &Graph, mask: u128, chi: usize, minimality: Minimality) -> Self {
        let vertices = VertexSet::from_mask(mask);
        CoreCertificate { vertices, chi, si: g.structor_index_of(vertices), minimality, host_hash: g.content_hash() }
    }

    /// The core as a standalone graph.
    pub fn subgraph(&self, host: &Graph) -> Result<Graph> {
        Ok(host.induced_subgraph(self.vertices)?.graph)
    }
}

/// si(K_k) = k + k(k−1)/2, the least si of any graph with χ = k.
pub fn core_si_lower_bound(k: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidParameter("core si lower bound needs k >= 1".into()));
    }
    Ok(k + k * (k - 1) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreFinder {
    /// Largest component order searched when no χ-clique exists.
    pub search_limit: usize,
}

impl Default for CoreFinder {
    fn default() -> Self {
        CoreFinder { search_limit: DEFAULT_SEARCH_LIMIT }
    }
}

impl CoreFinder {
    pub fn new(search_limit: usize) -> Self {
        CoreFinder { search_limit }
    }

    /// The lexicographically smallest minimum-si core.
    pub fn find_core(&self, g: &Graph) -> Result<CoreCertificate> {
        Ok(self.solve(g, false)?.swap_remove(0))
    }

    /// Every minimum-si core, lexicographic order.
    pub fn enumerate_cores(&self, g: &Graph) -> Result<Vec<CoreCertificate>> {
        self.solve(g, true)
    }

    fn solve(&self, g: &Graph, all: bool) -> Result<Vec<CoreCertificate>> {
        if g.order() == 0 {
            return Err(Error::InvalidParameter("core of the empty graph".into()));
        }
        let rows = g.rows();
        let full = low_mask(g.order());
        let k = chi_of(rows, full);
        let top: Vec<u128> = components(rows, full).into_iter().filter(|&c| chi_of(rows, c) == k).collect();

        let mut cliques: Vec<u128> = Vec::new();
        for &comp in &top {
            if max_clique_mask(rows, comp).count_ones() as usize == k {
                if all {
                    cliques.extend(cliques_of_size(rows, comp, k));
                } else {
                    cliques.extend(first_clique_of_size(rows, comp, k));
                }
            }
        }
        if !cliques.is_empty() {
            return Ok(finish(g, cliques, k, Minimality::BoundMatched, all));
        }

        let mut best = usize::MAX;
        let mut hits: Vec<u128> = Vec::new();
        for &comp in &top {
            let (si, found) = self.search(rows, comp, k)?;
            if si < best {
                best = si;
                hits.clear();
            }
            if si == best {
                hits.extend(found);
            }
        }
        Ok(finish(g, hits, k, Minimality::PrunedSearch, all))
    }

    /// Minimum si and all argmin subsets inside one component with no k-clique.
    fn search(&self, rows: &[u128], comp: u128, k: usize) -> Result<(usize, Vec<u128>)> {
        // Deletion pass: drop each vertex whose removal keeps χ = k. The
        // result is vertex-critical and seeds the si bound.
        let mut peeled = comp;
        for v in Bits(comp) {
            if !is_colorable(rows, peeled & !bit(v), k - 1) {
                peeled &= !bit(v);
            }
        }
        let mut best_si = peeled.count_ones() as usize + edges_in(rows, peeled);

        let order = comp.count_ones() as usize;
        if order > self.search_limit {
            return Err(Error::CoreSearchTooLarge {
                order,
                limit: self.search_limit,
                best_si,
                lower_bound: core_si_lower_bound(k)? + 1,
            });
        }

        let members: Vec<usize> = Bits(comp).collect();
        let contiguous = comp == low_mask(order);
        let mut hits = Vec::new();
        // Without a k-clique a k-chromatic subset has at least k+1 vertices.
        for s in k + 1..=order {
            let degree_floor = (s * (k - 1)).div_ceil(2);
            if s + degree_floor > best_si {
                break;
            }
            let mut combo: u128 = low_mask(s);
            let end = bit(order);
            while combo < end {
                let set = if contiguous {
                    combo
                } else {
                    Bits(combo).fold(0u128, |acc, i| acc | bit(members[i]))
                };
                if let Some(si) = admissible(rows, set, s, k, best_si) {
                    if si < best_si {
                        best_si = si;
                        hits.clear();
                    }
                    hits.push(set);
                }
                combo = next_combination(combo);
            }
        }
        Ok((best_si, hits))
    }
}

/// si of `set` if it is a vertex-critical-shaped k-chromatic candidate with
/// si at most `bound`.
#[inline]
fn admissible(rows: &[u128], set: u128, s: usize, k: usize, bound: usize) -> Option<usize> {
    let mut twice_edges = 0usize;
    for v in Bits(set) {
        let d = (rows[v] & set).count_ones() as usize;
        if d + 1 < k {
            return None;
        }
        twice_edges += d;
    }
    let si = s + twice_edges / 2;
    if si > bound || !is_connected_mask(rows, set) || is_colorable(rows, set, k - 1) {
        return None;
    }
    Some(si)
}

/// Next integer with the same popcount (Gosper).
#[inline]
fn next_combination(x: u128) -> u128 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn finish(g: &Graph, mut sets: Vec<u128>, k: usize, minimality: Minimality, all: bool) -> Vec<CoreCertificate> {
    sets.sort_by(|a, b| VertexSet::from_mask(*a).cmp(&VertexSet::from_mask(*b)));
    sets.dedup();
    if !all {
        sets.truncate(1);
    }
    sets.into_iter().map(|m| CoreCertificate::new(g, m, k, minimality)).collect()
}

pub fn find_core(g: &Graph) -> Result<CoreCertificate> {
    CoreFinder::default().find_core(g)
}

pub fn enumerate_cores(g: &Graph) -> Result<Vec<CoreCertificate>> {
    CoreFinder::default().enumerate_cores(g)
}

/// Keeps the first certificate of each isomorphism class of core subgraph.
pub fn collapse_isomorphic(g: &Graph, certs: Vec<CoreCertificate>) -> Result<Vec<CoreCertificate>> {
    let mut kept: Vec<(Graph, CoreCertificate)> = Vec::new();
    for cert in certs {
        let sub = cert.subgraph(g)?;
        let mut seen = false;
        for (other, _) in &kept {
            if is_isomorphic_with_limit(&sub, other, g.order())? {
                seen = true;
                break;
            }
        }
        if !seen {
            kept.push((sub, cert));
        }
    }
    Ok(kept.into_iter().map(|(_, c)| c).collect())
}

/// χ(G − v) < χ(G) for every vertex v.
pub fn is_vertex_critical(g: &Graph) -> bool {
    if g.order() == 0 {
        return false;
    }
    let rows = g.rows();
    let full = low_mask(g.order());
    let k = chi_of(rows, full);
    (0..g.order()).all(|v| is_colorable(rows, full & !bit(v), k - 1))
}

/// Result of the exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCore {
    pub chi: usize,
    pub si: usize,
    /// Every subset attaining `si` with χ = `chi`, lexicographic order.
    pub argmin: Vec<VertexSet>,
}

impl OracleCore {
    pub fn certificate(&self, g: &Graph) -> CoreCertificate {
        CoreCertificate::new(g, self.argmin[0].mask(), self.chi, Minimality::OracleVerified)
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.argmin.binary_search(&set).is_ok()
    }
}

/// Brute force over all `2^ν − 1` nonempty subsets (ν ≤ 10).
pub fn oracle_core(g: &Graph) -> Result<OracleCore> {
    let n = g.order();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge { what: "oracle core sweep", order: n, limit: ORACLE_LIMIT });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("core of the empty graph".into()));
    }
    let tables = induced_tables(g, ORACLE_LIMIT)?;
    let full = (1usize << n) - 1;
    let chi = tables.chi[full] as usize;
    let mut si = usize::MAX;
    let mut argmin = Vec::new();
    for s in 1..=full {
        if tables.chi[s] as usize != chi {
            continue;
        }
        let set = VertexSet::from_mask(s as u128);
        let this = g.structor_index_of(set);
        if this < si {
            si = this;
            argmin.clear();
        }
        if this == si {
            argmin.push(set);
        }
    }
    argmin.sort();
    Ok(OracleCore { chi, si, argmin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{petersen, FamilySpec};
    use crate::iso::is_isomorphic;

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(core_si_lower_bound(1).unwrap(), 1);
        assert_eq!(core_si_lower_bound(2).unwrap(), 3);
        assert_eq!(core_si_lower_bound(4).unwrap(), 10);
        assert!(core_si_lower_bound(0).is_err());
    }

    #[test]
    fn find_core_examples() {
        assert_eq!(find_core(&fam("cycle:6")).unwrap().si, 3);
        let c7 = find_core(&fam("cycle:7")).unwrap();
        assert_eq!((c7.si, c7.vertices.len()), (14, 7));
        let w4 = fam("wheel:4");
        let core = find_core(&w4).unwrap();
        assert_eq!(core.si, 6);
        assert!(core.vertices.contains(0));
        assert!(is_isomorphic(&core.subgraph(&w4).unwrap(), &fam("complete:3")).unwrap());
        let w5 = find_core(&fam("wheel:5")).unwrap();
        assert_eq!((w5.si, w5.vertices.len()), (16, 6));
        let p = petersen();
        let core = find_core(&p).unwrap();
        assert_eq!(core.si, 10);
        assert!(is_isomorphic(&core.subgraph(&p).unwrap(), &fam("cycle:5")).unwrap());
        assert!(find_core(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let p4 = enumerate_cores(&fam("path:4")).unwrap();
        assert_eq!(p4.len(), 3);
        assert!(p4.iter().all(|c| c.si == 3));
        assert_eq!(enumerate_cores(&fam("complete:4")).unwrap().len(), 1);
        let c5 = enumerate_cores(&fam("cycle:5")).unwrap();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].vertices, VertexSet::full(5));
    }

    #[test]
    fn collapse_examples() {
        let g = fam("path:4");
        let all = enumerate_cores(&g).unwrap();
        assert_eq!(collapse_isomorphic(&g, all).unwrap().len(), 1);
    }

    #[test]
    fn vertex_critical_examples() {
        assert!(is_vertex_critical(&fam("cycle:5")));
        assert!(is_vertex_critical(&fam("complete:5")));
        assert!(!is_vertex_critical(&fam("path:3")));
        assert!(is_vertex_critical(&fam("complete:1")));
    }

    #[test]
    fn oracle_examples() {
        let k3 = oracle_core(&fam("complete:3")).unwrap();
        assert_eq!((k3.si, k3.argmin.len()), (6, 1));
        assert_eq!(oracle_core(&fam("cycle:6")).unwrap().si, 3);
        let h4 = fam("helm:4");
        let o = oracle_core(&h4).unwrap();
        assert_eq!(o.si, 6);
        let tri = o.certificate(&h4).subgraph(&h4).unwrap();
        assert!(is_isomorphic(&tri, &fam("complete:3")).unwrap());
        assert!(oracle_core(&fam("cycle:11")).unwrap_err().is_capability());
    }

    #[test]
    fn search_limit_error_carries_bounds() {
        let g = fam("cycle:19");
        match CoreFinder::new(16).find_core(&g) {
            Err(Error::CoreSearchTooLarge { order, best_si, lower_bound, .. }) => {
                assert_eq!(order, 19);
                assert_eq!(best_si, 38);
                assert_eq!(lower_bound, 7);
            }
            other => panic!("expected capability error, got {other:?}"),
        }
        assert_eq!(CoreFinder::new(19).find_core(&g).unwrap().si, 38);
    }

    #[test]
    fn disconnected_uses_smallest_component_core() {
        // C_7 ∪ C_5: both 3-chromatic, C_5 is smaller.
        let g = fam("cycle:7").disjoint_union(&fam("cycle:5")).unwrap();
        let core = find_core(&g).unwrap();
        assert_eq!(core.si, 10);
        assert_eq!(core.vertices.to_vec(), (7..12).collect::<Vec<_>>());
        // C_5 ∪ K_3: the triangle wins.
        let g = fam("cycle:5").disjoint_union(&fam("complete:3")).unwrap();
        assert_eq!(find_core(&g).unwrap().vertices.to_vec(), vec![5, 6, 7]);
    }

    #[test]
    fn combination_walk_counts() {
        let mut x = low_mask(3);
        let mut count = 0;
        while x < bit(6) {
            count += 1;
            x = next_combination(x);
        }
        assert_eq!(count, 20);
    }
}
