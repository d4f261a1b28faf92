//! Generators for the classical graph families and finite linear Jaco graphs.
//!
//! Conventions: `wheel:n` is a hub (vertex 0) joined to a rim cycle
//! `1..=n`; `helm:n` adds one pendant `n+i` to each rim vertex `i`;
//! `star:n` is `K_{1,n}` with the centre at 0.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Null,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    Helm,
    Star,
    RandomTree,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Null => "null",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Wheel => "wheel",
            Family::Helm => "helm",
            Family::Star => "star",
            Family::RandomTree => "random_tree",
        }
    }

    fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "null" => Family::Null,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "complete_bipartite" => Family::CompleteBipartite,
            "wheel" => Family::Wheel,
            "helm" => Family::Helm,
            "star" => Family::Star,
            "random_tree" => Family::RandomTree,
            _ => return None,
        })
    }
}

/// A named family member, canonical text form `name:p1,p2,...`.
/// For `random_tree` the text form is `random_tree:n,seed`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> Self {
        FamilySpec { family, params: params.to_vec(), seed: None }
    }

    pub fn null(n: usize) -> Self {
        Self::new(Family::Null, &[n])
    }
    pub fn path(n: usize) -> Self {
        Self::new(Family::Path, &[n])
    }
    pub fn cycle(n: usize) -> Self {
        Self::new(Family::Cycle, &[n])
    }
    pub fn complete(n: usize) -> Self {
        Self::new(Family::Complete, &[n])
    }
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::new(Family::CompleteBipartite, &[a, b])
    }
    pub fn wheel(n: usize) -> Self {
        Self::new(Family::Wheel, &[n])
    }
    pub fn helm(n: usize) -> Self {
        Self::new(Family::Helm, &[n])
    }
    pub fn star(n: usize) -> Self {
        Self::new(Family::Star, &[n])
    }
    pub fn random_tree(n: usize, seed: u64) -> Self {
        FamilySpec { family: Family::RandomTree, params: vec![n], seed: Some(seed) }
    }

    pub fn generate(&self) -> Result<Graph> {
        generate(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.name())?;
        let mut parts: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        if let Some(s) = self.seed {
            parts.push(s.to_string());
        }
        write!(f, "{}", parts.join(","))
    }
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|_| Error::InvalidParameter(format!("{what}: `{p}` is not a non-negative integer")))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("family spec `{s}` lacks `name:params`")))?;
        let family = Family::from_name(name.trim())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{name}`")))?;
        let mut params: Vec<u64> = parse_list(rest, s)?;
        let seed = if family == Family::RandomTree {
            if params.len() != 2 {
                return Err(Error::InvalidParameter(format!("`{s}`: random_tree takes n,seed")));
            }
            params.pop()
        } else {
            None
        };
        Ok(FamilySpec { family, params: params.into_iter().map(|p| p as usize).collect(), seed })
    }
}

fn arity(spec: &FamilySpec, k: usize) -> Result<()> {
    if spec.params.len() != k {
        return Err(Error::InvalidParameter(format!(
            "{} takes {k} parameter(s), got {}",
            spec.family.name(),
            spec.params.len()
        )));
    }
    Ok(())
}

fn at_least(spec: &FamilySpec, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter(format!(
            "{}: parameter {value} below minimum {min}",
            spec.family.name()
        )));
    }
    Ok(())
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    match spec.family {
        Family::Null => {
            arity(spec, 1)?;
            Graph::empty(p[0])
        }
        Family::Path => {
            arity(spec, 1)?;
            at_least(spec, p[0], 1)?;
            Graph::from_edges(p[0], (1..p[0]).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            arity(spec, 1)?;
            at_least(spec, p[0], 3)?;
            let n = p[0];
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete => {
            arity(spec, 1)?;
            at_least(spec, p[0], 1)?;
            let n = p[0];
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::CompleteBipartite => {
            arity(spec, 2)?;
            at_least(spec, p[0], 1)?;
            at_least(spec, p[1], 1)?;
            let (a, b) = (p[0], p[1]);
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Star => {
            arity(spec, 1)?;
            at_least(spec, p[0], 1)?;
            Graph::from_edges(p[0] + 1, (1..=p[0]).map(|i| (0, i)))
        }
        Family::Wheel => {
            arity(spec, 1)?;
            at_least(spec, p[0], 3)?;
            Graph::from_edges(p[0] + 1, wheel_edges(p[0]))
        }
        Family::Helm => {
            arity(spec, 1)?;
            at_least(spec, p[0], 3)?;
            let n = p[0];
            let mut edges = wheel_edges(n);
            edges.extend((1..=n).map(|i| (i, n + i)));
            Graph::from_edges(2 * n + 1, edges)
        }
        Family::RandomTree => {
            arity(spec, 1)?;
            let seed = spec
                .seed
                .ok_or_else(|| Error::InvalidParameter("random_tree requires a seed".into()))?;
            random_tree(p[0], seed)
        }
    }
}

fn wheel_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (i, i % n + 1)));
    edges
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

/// Uniform labelled tree on `n` vertices by Prüfer decoding. The sequence
/// entries are drawn from `ChaCha8Rng::seed_from_u64(seed)` with
/// `gen_range(0..n)`, in order.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("random_tree needs n >= 1".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Linear Jaco graph parameters: order `n`, `f(x) = m*x + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JacoSpec {
    pub n: usize,
    pub m: usize,
    pub c: usize,
}

impl JacoSpec {
    pub fn new(n: usize, m: usize, c: usize) -> Self {
        JacoSpec { n, m, c }
    }

    fn f(&self, x: usize) -> usize {
        self.m * x + self.c
    }

    fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameter("jaco: order must be >= 1".into()));
        }
        Ok(())
    }
}

impl fmt::Display for JacoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "jaco:{},{},{}", self.n, self.m, self.c)
    }
}

impl FromStr for JacoSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .strip_prefix("jaco:")
            .ok_or_else(|| Error::InvalidParameter(format!("`{s}` is not a jaco spec")))?;
        let p: Vec<usize> = parse_list(rest, s)?;
        if p.len() != 3 {
            return Err(Error::InvalidParameter(format!("`{s}`: jaco takes n,m,c")));
        }
        let spec = JacoSpec::new(p[0], p[1], p[2]);
        spec.validate()?;
        Ok(spec)
    }
}

/// Arcs of the Jaco digraph on `v_1..v_n`, labelled 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacoDigraph {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl JacoDigraph {
    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, j)| j == v).count()
    }
}

/// Sequential construction: targets `j = 2..=n` in increasing order; `v_i`
/// (`i < j`) sends an arc to `v_j` iff `f(i) + i - d⁻(v_i) >= j`. All arcs
/// into `v_i` were decided at step `i`, so `d⁻(v_i)` is final when read.
pub fn jaco_digraph(spec: JacoSpec) -> Result<JacoDigraph> {
    spec.validate()?;
    let n = spec.n;
    let mut indeg = vec![0usize; n + 1];
    let mut arcs = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            if spec.f(i) + i >= j + indeg[i] {
                arcs.push((i, j));
            }
        }
        indeg[j] = arcs.iter().filter(|&&(_, t)| t == j).count();
    }
    Ok(JacoDigraph { n, arcs })
}

/// Underlying undirected graph; `v_i` becomes vertex `i - 1`.
pub fn jaco_graph(spec: JacoSpec) -> Result<Graph> {
    let d = jaco_digraph(spec)?;
    Graph::from_edges(d.n, d.arcs.iter().map(|&(i, j)| (i - 1, j - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let c5 = FamilySpec::cycle(5).generate().unwrap();
        assert_eq!((c5.order(), c5.size(), c5.structor_index()), (5, 5, 10));
        let w4 = FamilySpec::wheel(4).generate().unwrap();
        assert_eq!((w4.order(), w4.size()), (5, 8));
        let h5 = FamilySpec::helm(5).generate().unwrap();
        assert_eq!((h5.order(), h5.size()), (11, 15));
    }

    #[test]
    fn closed_forms() {
        for n in 3..10 {
            let w = FamilySpec::wheel(n).generate().unwrap();
            assert_eq!((w.order(), w.size()), (n + 1, 2 * n));
            let h = FamilySpec::helm(n).generate().unwrap();
            assert_eq!((h.order(), h.size()), (2 * n + 1, 3 * n));
            let c = FamilySpec::cycle(n).generate().unwrap();
            assert_eq!((c.order(), c.size()), (n, n));
        }
        for n in 1..8 {
            let k = FamilySpec::complete(n).generate().unwrap();
            assert_eq!(k.size(), n * (n - 1) / 2);
            let s = FamilySpec::star(n).generate().unwrap();
            assert_eq!((s.order(), s.size()), (n + 1, n));
            let p = FamilySpec::path(n).generate().unwrap();
            assert_eq!(p.size(), n - 1);
            assert_eq!(FamilySpec::null(n).generate().unwrap().size(), 0);
        }
        let kb = FamilySpec::complete_bipartite(2, 3).generate().unwrap();
        assert_eq!((kb.order(), kb.size()), (5, 6));
        let p = petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn parameter_errors() {
        assert!(FamilySpec::cycle(2).generate().is_err());
        assert!(FamilySpec::wheel(2).generate().is_err());
        assert!(FamilySpec::new(Family::Cycle, &[5, 6]).generate().is_err());
        assert!(random_tree(0, 1).is_err());
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("hexagon:6".parse::<FamilySpec>().is_err());
        assert!("cycle:x".parse::<FamilySpec>().is_err());
        assert!("jaco:0,1,0".parse::<JacoSpec>().is_err());
    }

    #[test]
    fn text_form_round_trip() {
        for s in ["cycle:5", "complete_bipartite:2,3", "random_tree:8,42", "helm:7", "null:0"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert_eq!("jaco:10,1,0".parse::<JacoSpec>().unwrap(), JacoSpec::new(10, 1, 0));
        assert_eq!(JacoSpec::new(15, 0, 3).to_string(), "jaco:15,0,3");
    }

    #[test]
    fn jaco_digraph_examples() {
        let d = jaco_digraph(JacoSpec::new(5, 1, 0)).unwrap();
        assert_eq!(d.arcs, vec![(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]);
        let d = jaco_digraph(JacoSpec::new(2, 1, 0)).unwrap();
        assert_eq!(d.arcs, vec![(1, 2)]);
        let d = jaco_digraph(JacoSpec::new(4, 0, 3)).unwrap();
        assert_eq!(d.arcs, vec![(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn jaco_graph_examples() {
        let g = jaco_graph(JacoSpec::new(5, 1, 0)).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(jaco_graph(JacoSpec::new(1, 4, 2)).unwrap(), Graph::empty(1).unwrap());
        // J*_4(x) is P_4.
        assert_eq!(
            jaco_graph(JacoSpec::new(4, 1, 0)).unwrap(),
            FamilySpec::path(4).generate().unwrap()
        );
    }

    #[test]
    fn jaco_prefix_and_determinism() {
        for (m, c) in [(1, 0), (1, 1), (2, 0), (2, 1), (0, 2), (0, 3), (3, 2)] {
            for n in 1..20 {
                let small = jaco_graph(JacoSpec::new(n, m, c)).unwrap();
                assert_eq!(small, jaco_graph(JacoSpec::new(n, m, c)).unwrap());
                let big = jaco_graph(JacoSpec::new(n + 1, m, c)).unwrap();
                let prefix = big.induced_subgraph(crate::graph::VertexSet::full(n)).unwrap().graph;
                assert_eq!(small, prefix, "prefix property m={m} c={c} n={n}");
            }
        }
    }

    #[test]
    fn jaco_constant_is_union_of_small_cliques() {
        for c in 0..5 {
            let g = jaco_graph(JacoSpec::new(15, 0, c)).unwrap();
            for comp in g.connected_components() {
                let sub = g.induced_subgraph(comp).unwrap().graph;
                assert!(sub.is_complete());
                assert!(sub.order() <= c + 1);
            }
        }
    }

    #[test]
    fn random_tree_examples() {
        assert_eq!(random_tree(1, 9).unwrap(), Graph::empty(1).unwrap());
        assert_eq!(random_tree(2, 9).unwrap(), FamilySpec::path(2).generate().unwrap());
        let t = random_tree(8, 42).unwrap();
        assert_eq!((t.order(), t.size()), (8, 7));
        assert!(t.is_connected());
        assert_eq!(t, random_tree(8, 42).unwrap());
    }

    #[test]
    fn prufer_decodes_known_code() {
        // Code (3,3,3) on 5 vertices is the star centred at 3 plus edge to 4.
        let mut e = prufer_decode(5, &[3, 3, 3]);
        e.sort();
        assert_eq!(e, vec![(0, 3), (1, 3), (2, 3), (3, 4)]);
    }

    proptest::proptest! {
        #[test]
        fn random_tree_is_a_tree(n in 1usize..40, seed in proptest::prelude::any::<u64>()) {
            let t = random_tree(n, seed).unwrap();
            proptest::prop_assert_eq!(t.size(), n - 1);
            proptest::prop_assert!(t.is_connected());
        }
    }
}
