//! Exact vertex colouring and clique search on bitset graphs.
//!
//! The k-colouring search is DSATUR-ordered backtracking (highest
//! saturation, then highest residual degree, then smallest index), with a
//! vertex allowed to open at most one fresh colour. Components are coloured
//! independently. Maximum clique is branch and bound with greedy colour
//! bounds. The whole-subset dynamic programme in [`induced_tables`] is a
//! second, independent route to χ and ω used for perfectness checks and by
//! the brute-force core oracle.

use std::collections::HashMap;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, components, low_mask, Bits, Graph, VertexSet};

pub const PERFECT_LIMIT: usize = 14;
pub const CHI_MINUS_LIMIT: usize = 16;
pub const INDEPENDENT_SETS_LIMIT: usize = 20;
/// Table memory is `2^n` bytes per table.
const SWEEP_HARD_LIMIT: usize = 24;

/// A proper colouring using every colour in `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Validates that `assignment` is proper for `g` and uses a dense colour range.
    pub fn new(g: &Graph, assignment: Vec<usize>) -> Result<Coloring> {
        if assignment.len() != g.order() {
            return Err(Error::InvalidParameter(format!(
                "colouring has {} entries for a graph of order {}",
                assignment.len(),
                g.order()
            )));
        }
        let k = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &assignment {
            used[c] = true;
        }
        if used.iter().any(|u| !u) {
            return Err(Error::InvalidParameter("colouring skips a colour index".into()));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| assignment[u] == assignment[v]) {
            return Err(Error::InvalidParameter(format!("edge ({u},{v}) is monochromatic")));
        }
        Ok(Coloring { assignment, k })
    }

    /// Relabels colours densely by first appearance.
    fn normalized(raw: &[usize]) -> Coloring {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let assignment = raw
            .iter()
            .map(|&c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        Coloring { assignment, k: relabel.len() }
    }

    pub fn colors(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }

    /// Class sizes indexed by colour.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes().iter().map(|c| c.len()).collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.order() && g.edges().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.assignment.serialize(s)
    }
}

/// Exact chromatic number with a witness colouring and clique evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub chi: usize,
    pub witness: Coloring,
    /// A clique (hence a lower bound), found greedily.
    pub clique: VertexSet,
}

// ---------------------------------------------------------------------------
// mask-level kernels
// ---------------------------------------------------------------------------

/// Greedy clique: repeatedly take the candidate of largest residual degree.
pub(crate) fn greedy_clique(rows: &[u128], mask: u128) -> u128 {
    let mut clique = 0u128;
    let mut cand = mask;
    while cand != 0 {
        let v = Bits(cand)
            .max_by_key(|&v| ((rows[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("nonempty");
        clique |= bit(v);
        cand &= rows[v];
    }
    clique
}

fn pick_dsatur(rows: &[u128], classes: &[u128], uncolored: u128) -> (usize, usize) {
    let mut best = (usize::MAX, 0usize, 0u32);
    for v in Bits(uncolored) {
        let sat = classes.iter().filter(|&&c| c & rows[v] != 0).count();
        let deg = (rows[v] & uncolored).count_ones();
        if best.0 == usize::MAX || (sat, deg) > (best.1, best.2) {
            best = (v, sat, deg);
        }
    }
    (best.0, best.1)
}

/// DSATUR greedy colouring; `color[v]` for `v` in `mask`, `usize::MAX` elsewhere.
pub(crate) fn dsatur_greedy(rows: &[u128], mask: u128) -> (usize, Vec<usize>) {
    let mut color = vec![usize::MAX; rows.len()];
    let mut classes: Vec<u128> = Vec::new();
    let mut uncolored = mask;
    while uncolored != 0 {
        let (v, _) = pick_dsatur(rows, &classes, uncolored);
        let c = match classes.iter().position(|&cl| cl & rows[v] == 0) {
            Some(c) => c,
            None => {
                classes.push(0);
                classes.len() - 1
            }
        };
        classes[c] |= bit(v);
        color[v] = c;
        uncolored &= !bit(v);
    }
    (classes.len(), color)
}

struct KSearch<'a> {
    rows: &'a [u128],
    k: usize,
    classes: Vec<u128>,
    color: Vec<usize>,
}

impl KSearch<'_> {
    fn run(&mut self, uncolored: u128) -> bool {
        if uncolored == 0 {
            return true;
        }
        let mut best = (usize::MAX, 0usize, 0u32);
        for v in Bits(uncolored) {
            let sat = self.classes.iter().filter(|&&c| c & self.rows[v] != 0).count();
            if sat == self.k {
                return false;
            }
            let deg = (self.rows[v] & uncolored).count_ones();
            if best.0 == usize::MAX || (sat, deg) > (best.1, best.2) {
                best = (v, sat, deg);
            }
        }
        let v = best.0;
        let rest = uncolored & !bit(v);
        for c in 0..self.classes.len() {
            if self.classes[c] & self.rows[v] == 0 {
                self.classes[c] |= bit(v);
                self.color[v] = c;
                if self.run(rest) {
                    return true;
                }
                self.classes[c] &= !bit(v);
            }
        }
        if self.classes.len() < self.k {
            self.classes.push(bit(v));
            self.color[v] = self.classes.len() - 1;
            if self.run(rest) {
                return true;
            }
            self.classes.pop();
        }
        self.color[v] = usize::MAX;
        false
    }
}

/// A proper colouring of `mask` with at most `k` colours, if one exists.
pub(crate) fn color_with_at_most(rows: &[u128], mask: u128, k: usize) -> Option<Vec<usize>> {
    if mask == 0 {
        return Some(vec![usize::MAX; rows.len()]);
    }
    if k == 0 {
        return None;
    }
    let mut color = vec![usize::MAX; rows.len()];
    for comp in components(rows, mask) {
        if greedy_clique(rows, comp).count_ones() as usize > k {
            return None;
        }
        let (used, greedy) = dsatur_greedy(rows, comp);
        if used <= k {
            for v in Bits(comp) {
                color[v] = greedy[v];
            }
            continue;
        }
        let mut s = KSearch { rows, k, classes: Vec::new(), color: vec![usize::MAX; rows.len()] };
        if !s.run(comp) {
            return None;
        }
        for v in Bits(comp) {
            color[v] = s.color[v];
        }
    }
    Some(color)
}

pub(crate) fn is_colorable(rows: &[u128], mask: u128, k: usize) -> bool {
    color_with_at_most(rows, mask, k).is_some()
}

/// χ of the subgraph induced by `mask`, with a colouring of it.
pub(crate) fn chromatic_mask(rows: &[u128], mask: u128) -> (usize, Vec<usize>) {
    if mask == 0 {
        return (0, vec![usize::MAX; rows.len()]);
    }
    let lower = greedy_clique(rows, mask).count_ones() as usize;
    let (upper, heuristic) = dsatur_greedy(rows, mask);
    for k in lower..upper {
        if let Some(c) = color_with_at_most(rows, mask, k) {
            return (k, c);
        }
    }
    (upper, heuristic)
}

pub(crate) fn chi_of(rows: &[u128], mask: u128) -> usize {
    chromatic_mask(rows, mask).0
}

/// Sequential greedy colouring of `cand` for clique bounds: `(vertex, colour)`
/// pairs in nondecreasing colour (colours from 1).
fn colour_sort(rows: &[u128], cand: u128) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut col = 0;
    while uncolored != 0 {
        col += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            out.push((v, col));
            uncolored &= !bit(v);
            q &= !rows[v] & !bit(v);
        }
    }
    out
}

fn expand_clique(rows: &[u128], current: u128, mut cand: u128, best: &mut u128) {
    let order = colour_sort(rows, cand);
    for &(v, col) in order.iter().rev() {
        if current.count_ones() as usize + col <= best.count_ones() as usize {
            return;
        }
        let next = current | bit(v);
        let next_cand = cand & rows[v];
        if next_cand == 0 {
            if next.count_ones() > best.count_ones() {
                *best = next;
            }
        } else {
            expand_clique(rows, next, next_cand, best);
        }
        cand &= !bit(v);
    }
}

pub(crate) fn max_clique_mask(rows: &[u128], mask: u128) -> u128 {
    let mut best = if mask == 0 { 0 } else { greedy_clique(rows, mask) };
    expand_clique(rows, 0, mask, &mut best);
    best
}

fn cliques_rec(rows: &[u128], current: u128, cand: u128, need: usize, out: &mut Vec<u128>, first_only: bool) -> bool {
    if need == 0 {
        out.push(current);
        return first_only;
    }
    let mut rest = cand;
    while rest.count_ones() as usize >= need {
        let v = rest.trailing_zeros() as usize;
        rest &= !bit(v);
        if cliques_rec(rows, current | bit(v), rest & rows[v], need - 1, out, first_only) {
            return true;
        }
    }
    false
}

/// All cliques of exactly `k` vertices inside `mask`, lexicographic order.
pub(crate) fn cliques_of_size(rows: &[u128], mask: u128, k: usize) -> Vec<u128> {
    let mut out = Vec::new();
    cliques_rec(rows, 0, mask, k, &mut out, false);
    out
}

/// Lexicographically first clique of exactly `k` vertices.
pub(crate) fn first_clique_of_size(rows: &[u128], mask: u128, k: usize) -> Option<u128> {
    let mut out = Vec::new();
    cliques_rec(rows, 0, mask, k, &mut out, true);
    out.pop()
}

fn complement_rows(rows: &[u128]) -> Vec<u128> {
    let all = low_mask(rows.len());
    (0..rows.len()).map(|v| !rows[v] & all & !bit(v)).collect()
}

/// χ and ω of every induced subgraph, indexed by vertex mask.
pub struct InducedTables {
    pub chi: Vec<u8>,
    pub omega: Vec<u8>,
}

/// Subset dynamic programme over all `2^n` vertex subsets:
/// `ω(S) = max(ω(S−v), 1 + ω(S∩N(v)))` and
/// `χ(S) = 1 + min χ(S−I)` over independent `I ⊆ S` containing `v`,
/// where `v` is the lowest vertex of `S`.
pub fn induced_tables(g: &Graph, limit: usize) -> Result<InducedTables> {
    let n = g.order();
    let limit = limit.min(SWEEP_HARD_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { what: "induced-subgraph sweep", order: n, limit });
    }
    let rows = g.rows();
    let size = 1usize << n;
    let mut indep = vec![false; size];
    let mut omega = vec![0u8; size];
    let mut chi = vec![0u8; size];
    indep[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let without = s & !(1 << v);
        let nbrs = (rows[v] as usize) & s;
        indep[s] = indep[without] && nbrs == 0;
        omega[s] = omega[without].max(1 + omega[nbrs]);
        let free = s & !nbrs & !(1 << v);
        let mut best = u8::MAX;
        let mut t = free;
        loop {
            if indep[t | 1 << v] {
                best = best.min(chi[s & !(t | 1 << v)]);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
        chi[s] = best + 1;
    }
    Ok(InducedTables { chi, omega })
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// A proper colouring with at most `k` colours, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let color = color_with_at_most(g.rows(), low_mask(g.order()), k)?;
    Some(Coloring::normalized(&color))
}

/// Exact χ: climb from a greedy clique bound towards the DSATUR bound.
pub fn chromatic_number(g: &Graph) -> Result<ChiResult> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("chromatic number of the empty graph".into()));
    }
    let mask = low_mask(g.order());
    let (chi, color) = chromatic_mask(g.rows(), mask);
    let witness = Coloring::normalized(&color);
    debug_assert_eq!(witness.colors(), chi);
    Ok(ChiResult { chi, witness, clique: VertexSet::from_mask(greedy_clique(g.rows(), mask)) })
}

pub fn clique_number(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("clique number of the empty graph".into()));
    }
    let c = max_clique_mask(g.rows(), low_mask(g.order()));
    Ok((c.count_ones() as usize, VertexSet::from_mask(c)))
}

/// ω(G) = χ(G). The empty graph counts as weakly perfect.
pub fn is_weakly_perfect(g: &Graph) -> bool {
    let mask = low_mask(g.order());
    max_clique_mask(g.rows(), mask).count_ones() as usize == chi_of(g.rows(), mask)
}

pub fn is_perfect(g: &Graph) -> Result<bool> {
    is_perfect_with_limit(g, PERFECT_LIMIT)
}

/// ω = χ on every nonempty induced subgraph, by the subset sweep.
pub fn is_perfect_with_limit(g: &Graph, limit: usize) -> Result<bool> {
    let t = induced_tables(g, limit)?;
    Ok(t.chi.iter().zip(&t.omega).skip(1).all(|(c, w)| c == w))
}

/// All maximum independent sets, lexicographic order.
pub fn maximum_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > INDEPENDENT_SETS_LIMIT {
        return Err(Error::TooLarge { what: "maximum independent sets", order: n, limit: INDEPENDENT_SETS_LIMIT });
    }
    let co = complement_rows(g.rows());
    let alpha = max_clique_mask(&co, low_mask(n)).count_ones() as usize;
    Ok(cliques_of_size(&co, low_mask(n), alpha).into_iter().map(VertexSet::from_mask).collect())
}

type ClassMemo = HashMap<(u128, usize), Option<Vec<u128>>>;

/// Lexicographically largest class-size vector for partitioning `rest` into
/// exactly `j` nonempty independent classes.
fn best_partition(rows: &[u128], co: &[u128], rest: u128, j: usize, memo: &mut ClassMemo) -> Option<Vec<u128>> {
    if let Some(hit) = memo.get(&(rest, j)) {
        return hit.clone();
    }
    let result = if j == 0 {
        (rest == 0).then(Vec::new)
    } else if (rest.count_ones() as usize) < j {
        None
    } else if j == 1 {
        (Bits(rest).all(|v| rows[v] & rest == 0)).then(|| vec![rest])
    } else {
        let alpha = max_clique_mask(co, rest).count_ones() as usize;
        let max_first = alpha.min(rest.count_ones() as usize - (j - 1));
        let mut found = None;
        for s in (1..=max_first).rev() {
            let mut best: Option<Vec<u128>> = None;
            for class in cliques_of_size(co, rest, s) {
                let remainder = rest & !class;
                if !is_colorable(rows, remainder, j - 1) {
                    continue;
                }
                if let Some(tail) = best_partition(rows, co, remainder, j - 1, memo) {
                    let mut cand = vec![class];
                    cand.extend(tail);
                    let better = match &best {
                        None => true,
                        Some(b) => sizes(&cand) > sizes(b),
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
            if best.is_some() {
                found = best;
                break;
            }
        }
        found
    };
    memo.insert((rest, j), result.clone());
    result
}

fn sizes(classes: &[u128]) -> Vec<u32> {
    classes.iter().map(|c| c.count_ones()).collect()
}

/// χ⁻-colouring: among proper colourings with exactly χ(G) colours, one
/// whose class sizes `(|c_1|, |c_2|, ...)` are lexicographically largest.
/// Ties go to the lexicographically first class at each position.
pub fn chi_minus_coloring(g: &Graph) -> Result<Coloring> {
    let n = g.order();
    if n > CHI_MINUS_LIMIT {
        return Err(Error::TooLarge { what: "chi-minus colouring", order: n, limit: CHI_MINUS_LIMIT });
    }
    let chi = chromatic_number(g)?.chi;
    let co = complement_rows(g.rows());
    let mut memo = ClassMemo::new();
    let classes = best_partition(g.rows(), &co, low_mask(n), chi, &mut memo)
        .expect("a chi-colouring always partitions into chi nonempty classes");
    let mut assignment = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for v in Bits(*class) {
            assignment[v] = c;
        }
    }
    Coloring::new(g, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{petersen, FamilySpec};

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn k_colorable_examples() {
        let c5 = fam("cycle:5");
        assert!(is_k_colorable(&c5, 2).is_none());
        let c = is_k_colorable(&c5, 3).unwrap();
        assert!(c.is_proper(&c5));
        assert_eq!(c.colors(), 3);
        let p = petersen();
        let c = is_k_colorable(&p, 3).unwrap();
        assert!(c.is_proper(&p));
        assert!(is_k_colorable(&p, 2).is_none());
        assert!(is_k_colorable(&Graph::empty(0).unwrap(), 0).is_some());
        assert!(is_k_colorable(&fam("null:3"), 0).is_none());
    }

    #[test]
    fn chromatic_examples() {
        for n in 1..=6 {
            assert_eq!(chromatic_number(&fam(&format!("complete:{n}"))).unwrap().chi, n);
        }
        assert_eq!(chromatic_number(&fam("wheel:5")).unwrap().chi, 4);
        let grotzsch = fam("cycle:5").mycielski().unwrap();
        let r = chromatic_number(&grotzsch).unwrap();
        assert_eq!(r.chi, 4);
        assert!(r.witness.is_proper(&grotzsch));
        assert!(chromatic_number(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&fam("complete:5")).unwrap().0, 5);
        assert_eq!(clique_number(&fam("cycle:5")).unwrap().0, 2);
        let l = fam("star:4").line_graph().unwrap();
        assert_eq!(clique_number(&l).unwrap().0, 4);
    }

    #[test]
    fn weakly_perfect_examples() {
        assert!(is_weakly_perfect(&fam("cycle:4")));
        assert!(!is_weakly_perfect(&fam("cycle:5")));
        assert!(!is_weakly_perfect(&petersen()));
    }

    #[test]
    fn perfect_examples() {
        assert!(!is_perfect(&fam("cycle:5")).unwrap());
        assert!(is_perfect(&fam("cycle:6")).unwrap());
        let j = crate::families::jaco_graph(crate::families::JacoSpec::new(10, 1, 0)).unwrap();
        assert!(is_perfect(&j).unwrap());
        assert!(is_perfect(&fam("cycle:15")).unwrap_err().is_capability());
    }

    #[test]
    fn chi_minus_examples() {
        assert_eq!(chi_minus_coloring(&fam("cycle:4")).unwrap().class_sizes(), vec![2, 2]);
        let star = fam("star:4");
        let c = chi_minus_coloring(&star).unwrap();
        assert_eq!(c.class_sizes(), vec![4, 1]);
        assert_eq!(c.classes()[0].to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(chi_minus_coloring(&fam("cycle:5")).unwrap().class_sizes(), vec![2, 2, 1]);
        assert!(chi_minus_coloring(&fam("cycle:17")).unwrap_err().is_capability());
    }

    #[test]
    fn independent_set_examples() {
        let k4 = maximum_independent_sets(&fam("complete:4")).unwrap();
        assert_eq!(k4.iter().map(|s| s.to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![1], vec![2], vec![3]]);
        let c4 = maximum_independent_sets(&fam("cycle:4")).unwrap();
        assert_eq!(c4.iter().map(|s| s.to_vec()).collect::<Vec<_>>(), vec![vec![0, 2], vec![1, 3]]);
        let c5 = maximum_independent_sets(&fam("cycle:5")).unwrap();
        assert_eq!(
            c5.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
        );
    }

    #[test]
    fn coloring_validation() {
        let p3 = fam("path:3");
        assert!(Coloring::new(&p3, vec![0, 1, 0]).is_ok());
        assert!(Coloring::new(&p3, vec![0, 0, 1]).is_err());
        assert!(Coloring::new(&p3, vec![0, 2, 0]).is_err());
        assert!(Coloring::new(&p3, vec![0, 1]).is_err());
        let c = Coloring::new(&p3, vec![1, 0, 1]).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1,0,1]");
    }

    #[test]
    fn clique_enumeration_order() {
        let k4 = fam("complete:4");
        let all = cliques_of_size(k4.rows(), low_mask(4), 3);
        let lists: Vec<Vec<usize>> = all.iter().map(|&m| VertexSet::from_mask(m).to_vec()).collect();
        assert_eq!(lists, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        assert_eq!(first_clique_of_size(k4.rows(), low_mask(4), 5), None);
        assert_eq!(first_clique_of_size(k4.rows(), low_mask(4), 0), Some(0));
    }
}
