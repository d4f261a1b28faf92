//! The claim registry. Each claim expands to a closed corpus of instances;
//! instances run in parallel and are reduced in corpus order, so a report
//! depends only on the claim, the seed and the limits.

use std::env;
use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::{chi_minus_coloring, chromatic_number, clique_number, is_perfect, is_weakly_perfect, maximum_independent_sets};
use crate::corefinder::{is_vertex_critical, CoreCertificate, CoreFinder};
use crate::error::{Error, Result};
use crate::families::{jaco_graph, random_tree, FamilySpec, JacoSpec};
use crate::graph::{Graph, VertexSet};
use crate::harness::catalog::{all_graphs, connected_up_to};
use crate::harness::graph6::emit_graph6;
use crate::harness::report::{Certificate, ClaimReport, ClaimStatus, Counterexample, Skipped};
use crate::iso::is_isomorphic_with_limit;
use crate::products::{corona, join, product, ProductKind};

pub const SEARCH_LIMIT_ENV: &str = "CHROMACORE_SEARCH_LIMIT";

/// Corpus and solver bounds, settable as `key=value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order in the all-connected-graphs corpus.
    pub order: usize,
    /// Core-search component limit (see [`CoreFinder`]).
    pub search: usize,
    /// Number of seeded random trees.
    pub trees: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { order: 6, search: 32, trees: 100 }
    }
}

impl Limits {
    /// Defaults, with `search` overridden by the environment if set.
    pub fn from_env() -> Result<Limits> {
        let mut limits = Limits::default();
        if let Ok(v) = env::var(SEARCH_LIMIT_ENV) {
            limits.set("search", &v)?;
        }
        Ok(limits)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("limit `{key}` needs a non-negative integer, got `{value}`")))?;
        match key {
            "order" if v <= 7 => self.order = v,
            "order" => return Err(Error::InvalidParameter(format!("limit `order` is at most 7, got {v}"))),
            "search" => self.search = v,
            "trees" => self.trees = v,
            _ => return Err(Error::InvalidParameter(format!("unknown limit `{key}` (expected order, search or trees)"))),
        }
        Ok(())
    }

    /// Parses `key=value`.
    pub fn apply(&mut self, assignment: &str) -> Result<()> {
        let (k, v) = assignment
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("limit `{assignment}` is not of the form key=value")))?;
        self.set(k.trim(), v)
    }
}

enum Outcome {
    Pass,
    Fail { detail: String, certificates: Vec<Certificate> },
    Skip(String),
}

fn fail(detail: impl Into<String>, certificates: Vec<Certificate>) -> Result<Outcome> {
    Ok(Outcome::Fail { detail: detail.into(), certificates })
}

type Check = Box<dyn Fn(&Limits) -> Result<Outcome> + Send + Sync>;

struct Item {
    label: String,
    check: Check,
}

fn item(label: impl Into<String>, check: impl Fn(&Limits) -> Result<Outcome> + Send + Sync + 'static) -> Item {
    Item { label: label.into(), check: Box::new(check) }
}

struct Ctx {
    limits: Limits,
    seed: u64,
}

pub struct Claim {
    pub id: &'static str,
    pub status: ClaimStatus,
    pub description: &'static str,
    build: fn(&Ctx) -> Result<Vec<Item>>,
}

use ClaimStatus::{Hypothesis, Theorem};

static REGISTRY: &[Claim] = &[
    Claim { id: "lemma-2.1", status: Hypothesis, description: "a connected graph has a proper induced subgraph of equal chromatic number iff it is neither complete nor an odd cycle", build: lemma_2_1 },
    Claim { id: "prop-2.2-i", status: Theorem, description: "an acyclic graph with an edge has P2 as a core", build: prop_i },
    Claim { id: "prop-2.2-ii", status: Theorem, description: "an even cycle has P2 as a core", build: prop_ii },
    Claim { id: "prop-2.2-iii", status: Theorem, description: "an odd cycle is its own unique core", build: prop_iii },
    Claim { id: "prop-2.2-iv", status: Theorem, description: "a complete graph is its own unique core", build: prop_iv },
    Claim { id: "prop-2.2-v", status: Theorem, description: "an even wheel has C3 as a core", build: prop_v },
    Claim { id: "prop-2.2-vi", status: Theorem, description: "an odd wheel is its own unique core", build: prop_vi },
    Claim { id: "prop-2.2-vii", status: Theorem, description: "an even helm has C3 as a core", build: prop_vii },
    Claim { id: "prop-2.2-viii", status: Theorem, description: "an odd helm has its odd wheel as unique core", build: prop_viii },
    Claim { id: "prop-2.2-ix", status: Theorem, description: "a graph of diameter 1 is its own unique core", build: prop_ix },
    Claim { id: "prop-2.2-x", status: Theorem, description: "a graph with chi = Delta + 1 is its own unique core", build: prop_x },
    Claim { id: "prop-2.2-xi", status: Hypothesis, description: "the Mycielskian of a core of G is a core of the Mycielskian of G", build: prop_xi },
    Claim { id: "thm-2.3", status: Theorem, description: "K_k is the unique k-chromatic graph of least structor index", build: thm_2_3 },
    Claim { id: "cor-2.3-i", status: Theorem, description: "a maximum clique of a weakly perfect graph is a core", build: cor_2_3_i },
    Claim { id: "cor-2.3-ii", status: Hypothesis, description: "a graph that is not weakly perfect is its own unique core", build: cor_2_3_ii },
    Claim { id: "jaco-perfect", status: Theorem, description: "finite linear Jaco graphs are perfect; with slope 0 they are disjoint cliques of order at most c+1", build: jaco_perfect },
    Claim { id: "thm-3.1", status: Theorem, description: "the join of factor cores is a core of the join", build: thm_3_1 },
    Claim { id: "thm-3.2", status: Theorem, description: "K1 joined to a core of H is a core of the corona G o H (applies when chi(G) <= chi(H))", build: thm_3_2 },
    Claim { id: "thm-3.3", status: Theorem, description: "the core of the higher-chromatic factor is a core of the Cartesian product", build: thm_3_3 },
    Claim { id: "conj-3.4", status: Hypothesis, description: "the core of the lower-chromatic factor (smaller on ties) is a core of the tensor product", build: conj_3_4 },
    Claim { id: "conj-3.5", status: Hypothesis, description: "the strong product of factor cores is a core of the strong product", build: conj_3_5 },
    Claim { id: "lemma-3.4", status: Theorem, description: "the strong product has at most as many edges as the lexicographic product", build: lemma_3_4 },
    Claim { id: "conj-3.6", status: Hypothesis, description: "the lexicographic product of factor cores is a core of the lexicographic product", build: conj_3_6 },
    Claim { id: "complement-existence", status: Hypothesis, description: "the complement of a connected G has a proper induced subgraph of equal chromatic number iff G is neither complete nor C5", build: complement_existence },
    Claim { id: "complement-theorem", status: Hypothesis, description: "the complement of G has a core isomorphic to a core of G iff G is P3 or self-complementary", build: complement_theorem },
    Claim { id: "complement-cor-i", status: Hypothesis, description: "for weakly perfect G, a maximum clique of the complement is a core of the complement", build: complement_cor_i },
    Claim { id: "complement-cor-ii", status: Hypothesis, description: "for G not weakly perfect, the complement is its own unique core", build: complement_cor_ii },
    Claim { id: "chi-minus", status: Hypothesis, description: "for weakly perfect G, the first chi-minus colour class is a maximum independent set whose complement clique is a core of the complement", build: chi_minus },
    Claim { id: "line-graph-trees", status: Theorem, description: "the line graph of a tree has a maximum clique, of order Delta(T), as a core", build: line_graph_trees },
    Claim { id: "strong-paths-k4", status: Theorem, description: "P_n x P_m and C_2n x P_2m (strong) have chi = 4 with K4 as a core", build: strong_paths_k4 },
    Claim { id: "strong-odd-cycles-k5", status: Hypothesis, description: "C_2n+1 x C_2m+1 (strong) has chi = 5 with K5 as a core", build: strong_odd_cycles_k5 },
];

pub fn registry() -> &'static [Claim] {
    REGISTRY
}

pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

pub fn lookup(id: &str) -> Result<&'static Claim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Runs one claim over its corpus. Capability errors on an instance mark it
/// skipped; any other error aborts the claim.
pub fn verify_claim(id: &str, seed: u64, limits: &Limits) -> Result<ClaimReport> {
    let claim = lookup(id)?;
    let started = Instant::now();
    let ctx = Ctx { limits: *limits, seed };
    let items = (claim.build)(&ctx)?;
    let outcomes: Vec<Result<Outcome>> = items.par_iter().map(|it| (it.check)(limits)).collect();

    let mut report = ClaimReport {
        claim_id: claim.id.to_string(),
        status: claim.status,
        description: claim.description.to_string(),
        seed,
        corpus_size: items.len(),
        passes: 0,
        counterexamples: Vec::new(),
        skipped: Vec::new(),
        runtime_ms: None,
    };
    for (it, outcome) in items.iter().zip(outcomes) {
        match outcome {
            Ok(Outcome::Pass) => report.passes += 1,
            Ok(Outcome::Skip(reason)) => report.skipped.push(Skipped { instance: it.label.clone(), reason }),
            Err(e) if e.is_capability() => {
                report.skipped.push(Skipped { instance: it.label.clone(), reason: e.to_string() })
            }
            Err(e) => return Err(e),
            Ok(Outcome::Fail { detail, certificates }) => {
                let mut reverified = !certificates.is_empty();
                for c in &certificates {
                    reverified &= c.reverify()?;
                }
                report.counterexamples.push(Counterexample { instance: it.label.clone(), detail, certificates, reverified });
            }
        }
    }
    debug_assert!(report.is_consistent());
    report.runtime_ms = Some(started.elapsed().as_millis() as u64);
    Ok(report)
}

/// Every registered claim, in registry order.
pub fn verify_all(seed: u64, limits: &Limits) -> Result<Vec<ClaimReport>> {
    REGISTRY.iter().map(|c| verify_claim(c.id, seed, limits)).collect()
}

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

fn fam(token: &str) -> Graph {
    token
        .parse::<FamilySpec>()
        .and_then(|s| s.generate())
        .unwrap_or_else(|e| panic!("built-in corpus token `{token}`: {e}"))
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("order-{}-graph", g.order()))
}

fn finder(limits: &Limits) -> CoreFinder {
    CoreFinder::new(limits.search)
}

fn tri(k: usize) -> usize {
    k + k * (k.saturating_sub(1)) / 2
}

fn core_certs(g: &Graph, cores: &[CoreCertificate]) -> Result<Vec<Certificate>> {
    cores.iter().take(4).map(|c| Certificate::induced(g, c.vertices)).collect()
}

/// Labelled graph corpus: all connected graphs up to `limits.order`.
fn connected_corpus(ctx: &Ctx) -> Result<Vec<(String, Graph)>> {
    Ok(connected_up_to(ctx.limits.order)?.into_iter().map(|g| (format!("g6:{}", g6(&g)), g)).collect())
}

fn items_over(graphs: Vec<(String, Graph)>, check: fn(&Graph, &Limits) -> Result<Outcome>) -> Vec<Item> {
    graphs.into_iter().map(|(label, g)| item(label, move |lim| check(&g, lim))).collect()
}

fn named(tokens: &[String], check: fn(&Graph, &Limits) -> Result<Outcome>) -> Vec<Item> {
    items_over(tokens.iter().map(|t| (t.clone(), fam(t))).collect(), check)
}

fn tokens(family: &str, params: impl IntoIterator<Item = usize>) -> Vec<String> {
    params.into_iter().map(|n| format!("{family}:{n}")).collect()
}

fn unique_whole(g: &Graph, lim: &Limits) -> Result<Outcome> {
    let cores = finder(lim).enumerate_cores(g)?;
    if cores.len() == 1 && cores[0].vertices == g.vertices() {
        return Ok(Outcome::Pass);
    }
    fail(format!("{} minimum cores, first has {} of {} vertices", cores.len(), cores[0].vertices.len(), g.order()), core_certs(g, &cores)?)
}

/// The core has si = T(k) for the given k and is complete.
fn clique_core(g: &Graph, k: usize, lim: &Limits) -> Result<Outcome> {
    let core = finder(lim).find_core(g)?;
    if core.si == tri(k) && core.chi == k && core.vertices.len() == k {
        return Ok(Outcome::Pass);
    }
    fail(format!("expected a K{k} core (si {}), found si {} on {} vertices", tri(k), core.si, core.vertices.len()), vec![Certificate::induced(g, core.vertices)?])
}

fn vertex_deleted(g: &Graph) -> Result<Vec<Certificate>> {
    let mut out = vec![Certificate::chromatic(g)?];
    for v in 0..g.order() {
        let mut set = g.vertices();
        set.remove(v);
        if !set.is_empty() {
            out.push(Certificate::induced(g, set)?);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// section 2 claims
// ---------------------------------------------------------------------------

fn lemma_2_1(ctx: &Ctx) -> Result<Vec<Item>> {
    Ok(items_over(connected_corpus(ctx)?, |g, _| {
        let predicted = !(g.is_complete() || g.is_odd_cycle());
        let actual = !is_vertex_critical(g);
        if predicted == actual {
            return Ok(Outcome::Pass);
        }
        fail(
            format!("predicted proper subgraph: {predicted}; vertex-critical: {}", !actual),
            vertex_deleted(g)?,
        )
    }))
}

fn prop_i(ctx: &Ctx) -> Result<Vec<Item>> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 2..=8 {
        graphs.push((format!("path:{n}"), fam(&format!("path:{n}"))));
    }
    for n in 1..=6 {
        graphs.push((format!("star:{n}"), fam(&format!("star:{n}"))));
    }
    for i in 0..20u64 {
        let n = 2 + (i as usize % 9);
        let seed = tree_seed(ctx.seed, i);
        graphs.push((format!("random_tree:{n},{seed}"), random_tree(n, seed)?));
    }
    Ok(items_over(graphs, |g, lim| clique_core(g, 2, lim)))
}

fn prop_ii(_: &Ctx) -> Result<Vec<Item>> {
    Ok(named(&tokens("cycle", [4, 6, 8, 10]), |g, lim| clique_core(g, 2, lim)))
}

fn prop_iii(_: &Ctx) -> Result<Vec<Item>> {
    Ok(named(&tokens("cycle", [3, 5, 7, 9]), unique_whole))
}

fn prop_iv(_: &Ctx) -> Result<Vec<Item>> {
    Ok(named(&tokens("complete", 1..=6), unique_whole))
}

fn prop_v(_: &Ctx) -> Result<Vec<Item>> {
    Ok(named(&tokens("wheel", [4, 6, 8]), |g, lim| clique_core(g, 3, lim)))
}

fn prop_vi(_: &Ctx) -> Result<Vec<Item>> {
    Ok(named(&tokens("wheel", [3, 5, 7]), unique_whole))
}

fn prop_vii(_: &Ctx) -> Result<Vec<Item>> {
    Ok(named(&tokens("helm", [4, 6, 8]), |g, lim| clique_core(g, 3, lim)))
}

fn prop_viii(_: &Ctx) -> Result<Vec<Item>> {
    Ok(named(&tokens("helm", [3, 5, 7]), |g, lim| {
        let rim = (g.order() - 1) / 2;
        let cores = finder(lim).enumerate_cores(g)?;
        let wheel = fam(&format!("wheel:{rim}"));
        if cores.len() == 1 && is_isomorphic_with_limit(&cores[0].subgraph(g)?, &wheel, 16)? {
            return Ok(Outcome::Pass);
        }
        fail(format!("{} minimum cores; expected one copy of wheel:{rim}", cores.len()), core_certs(g, &cores)?)
    }))
}

fn prop_ix(ctx: &Ctx) -> Result<Vec<Item>> {
    let graphs = connected_corpus(ctx)?.into_iter().filter(|(_, g)| g.diameter() == Some(1)).collect();
    Ok(items_over(graphs, unique_whole))
}

fn prop_x(ctx: &Ctx) -> Result<Vec<Item>> {
    let mut graphs = Vec::new();
    for (label, g) in connected_corpus(ctx)? {
        if chromatic_number(&g)?.chi == g.max_degree() + 1 {
            graphs.push((label, g));
        }
    }
    Ok(items_over(graphs, unique_whole))
}

fn prop_xi(ctx: &Ctx) -> Result<Vec<Item>> {
    let graphs = connected_corpus(ctx)?.into_iter().filter(|(_, g)| g.order() <= 6).collect();
    Ok(items_over(graphs, |g, lim| {
        let f = finder(lim);
        let h = f.find_core(g)?;
        let mg = g.mycielski()?;
        let n = g.order();
        // μ(H) sits inside μ(G) on H, the shadows of H, and the apex.
        let mut lifted: VertexSet = h.vertices.iter().chain(h.vertices.iter().map(|v| n + v)).collect();
        lifted.insert(2 * n);
        let predicted_si = mg.structor_index_of(lifted);
        let actual = f.find_core(&mg)?;
        if actual.si == predicted_si {
            return Ok(Outcome::Pass);
        }
        fail(
            format!("core of mu(G) has si {} but mu(core of G) has si {predicted_si}", actual.si),
            vec![Certificate::induced(&mg, actual.vertices)?, Certificate::induced(&mg, lifted)?],
        )
    }))
}

fn thm_2_3(_: &Ctx) -> Result<Vec<Item>> {
    Ok((1..=5usize)
        .map(|k| {
            item(format!("k={k}"), move |_| {
                let bound = tri(k);
                let mut witnesses = 0;
                for n in 1..=6 {
                    for g in all_graphs(n)? {
                        if g.structor_index() > bound {
                            continue;
                        }
                        let chi = chromatic_number(&g)?.chi;
                        if chi < k {
                            continue;
                        }
                        let minimal = g.structor_index() == bound && chi == k && g.is_complete();
                        if !minimal {
                            return fail(
                                format!("graph with chi {chi} >= {k} and si {} <= {bound} is not K{k}", g.structor_index()),
                                vec![Certificate::induced(&g, g.vertices())?],
                            );
                        }
                        witnesses += 1;
                    }
                }
                if witnesses == 1 {
                    Ok(Outcome::Pass)
                } else {
                    fail(format!("expected exactly one witness K{k}, found {witnesses}"), vec![])
                }
            })
        })
        .collect())
}

fn jaco_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for (m, c) in [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (1, 2), (3, 1)] {
        for n in [4, 8, 12] {
            let spec = JacoSpec::new(n, m, c);
            out.push((spec.to_string(), jaco_graph(spec).expect("valid jaco spec")));
        }
    }
    out
}

fn cor_2_3_i(ctx: &Ctx) -> Result<Vec<Item>> {
    let mut graphs: Vec<(String, Graph)> = connected_corpus(ctx)?.into_iter().filter(|(_, g)| is_weakly_perfect(g)).collect();
    graphs.extend(jaco_corpus());
    Ok(items_over(graphs, |g, lim| clique_core(g, clique_number(g)?.0, lim)))
}

fn cor_2_3_ii(ctx: &Ctx) -> Result<Vec<Item>> {
    let graphs = connected_corpus(ctx)?.into_iter().filter(|(_, g)| !is_weakly_perfect(g)).collect();
    Ok(items_over(graphs, unique_whole))
}

fn jaco_perfect(_: &Ctx) -> Result<Vec<Item>> {
    let mut items: Vec<Item> = jaco_corpus()
        .into_iter()
        .map(|(label, g)| {
            item(label, move |_| {
                if is_perfect(&g)? {
                    Ok(Outcome::Pass)
                } else {
                    fail("an induced subgraph has omega < chi", vec![Certificate::chromatic(&g)?, Certificate::clique(&g)?])
                }
            })
        })
        .collect();
    for c in 0..=4 {
        let spec = JacoSpec::new(15, 0, c);
        let g = jaco_graph(spec)?;
        items.push(item(spec.to_string(), move |_| {
            for comp in g.connected_components() {
                let sub = g.induced_subgraph(comp)?.graph;
                if !sub.is_complete() || sub.order() > c + 1 {
                    return fail(format!("component of order {} is not a clique of order <= {}", sub.order(), c + 1), vec![Certificate::invariants(&sub)?]);
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    Ok(items)
}

// ---------------------------------------------------------------------------
// section 3 claims
// ---------------------------------------------------------------------------

const SMALL_FACTORS: [&str; 7] = ["complete:1", "complete:2", "path:3", "cycle:4", "cycle:5", "complete:3", "complete:4"];
const CONJ_FACTORS: [&str; 5] = ["path:2", "path:3", "cycle:4", "cycle:5", "complete:3"];

fn pair_items(
    left: &[(String, Graph)],
    right: &[(String, Graph)],
    symmetric: bool,
    op: &'static str,
    check: fn(&Graph, &Graph, &Limits) -> Result<Outcome>,
) -> Vec<Item> {
    let mut out = Vec::new();
    for (i, (a, g)) in left.iter().enumerate() {
        for (j, (b, h)) in right.iter().enumerate() {
            if symmetric && j < i {
                continue;
            }
            let (g, h) = (g.clone(), h.clone());
            out.push(item(format!("{op}({a},{b})"), move |lim| check(&g, &h, lim)));
        }
    }
    out
}

fn named_pairs(list: &[&str]) -> Vec<(String, Graph)> {
    list.iter().map(|t| (t.to_string(), fam(t))).collect()
}

fn connected_small_with_c5(ctx: &Ctx) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = connected_up_to(ctx.limits.order.min(4))?
        .into_iter()
        .map(|g| (g6(&g), g))
        .collect();
    out.push(("cycle:5".into(), fam("cycle:5")));
    Ok(out)
}

/// si of the core of `g` and the certificate, via the finder.
fn core_of(g: &Graph, lim: &Limits) -> Result<CoreCertificate> {
    finder(lim).find_core(g)
}

fn thm_3_1(_: &Ctx) -> Result<Vec<Item>> {
    let list = named_pairs(&SMALL_FACTORS);
    Ok(pair_items(&list, &list, false, "join", |g, h, lim| {
        let (cg, ch) = (core_of(g, lim)?, core_of(h, lim)?);
        let gh = join(g, h)?;
        let chi = chromatic_number(&gh)?.chi;
        let predicted = cg.si + ch.si + cg.vertices.len() * ch.vertices.len();
        let actual = core_of(&gh, lim)?;
        if chi == cg.chi + ch.chi && actual.si == predicted {
            return Ok(Outcome::Pass);
        }
        let n = g.order();
        let joined: VertexSet = cg.vertices.iter().chain(ch.vertices.iter().map(|v| n + v)).collect();
        fail(
            format!("chi {chi} (expected {}), core si {} (expected {predicted})", cg.chi + ch.chi, actual.si),
            vec![Certificate::induced(&gh, actual.vertices)?, Certificate::induced(&gh, joined)?, Certificate::chromatic(&gh)?],
        )
    }))
}

fn thm_3_2(_: &Ctx) -> Result<Vec<Item>> {
    let list = named_pairs(&SMALL_FACTORS);
    Ok(pair_items(&list, &list, false, "corona", |g, h, lim| {
        let (chi_g, chi_h) = (chromatic_number(g)?.chi, chromatic_number(h)?.chi);
        if chi_g > chi_h {
            return Ok(Outcome::Skip(format!(
                "chi(G) = {chi_g} > chi(H) = {chi_h}: chi(G o H) = max(chi(G), chi(H)+1) and the core may lie in G"
            )));
        }
        let ch = core_of(h, lim)?;
        let co = corona(g, h)?;
        let chi = chromatic_number(&co)?.chi;
        let predicted = 1 + ch.si + ch.vertices.len();
        let actual = core_of(&co, lim)?;
        if chi == chi_h + 1 && actual.si == predicted {
            return Ok(Outcome::Pass);
        }
        let n = g.order();
        let mut lifted: VertexSet = ch.vertices.iter().map(|v| n + v).collect();
        lifted.insert(0);
        fail(
            format!("chi {chi} (expected {}), core si {} (expected {predicted})", chi_h + 1, actual.si),
            vec![Certificate::induced(&co, actual.vertices)?, Certificate::induced(&co, lifted)?, Certificate::chromatic(&co)?],
        )
    }))
}

fn thm_3_3(ctx: &Ctx) -> Result<Vec<Item>> {
    let list: Vec<(String, Graph)> = connected_up_to(ctx.limits.order.min(4))?.into_iter().map(|g| (g6(&g), g)).collect();
    Ok(pair_items(&list, &list, false, "cartesian", |g, h, lim| {
        let (cg, ch) = (core_of(g, lim)?, core_of(h, lim)?);
        let top = cg.chi.max(ch.chi);
        let predicted = [&cg, &ch].iter().filter(|c| c.chi == top).map(|c| c.si).min().expect("one factor attains the max");
        let gh = product(ProductKind::Cartesian, g, h)?;
        let chi = chromatic_number(&gh)?.chi;
        let actual = core_of(&gh, lim)?;
        if chi == top && actual.si == predicted {
            return Ok(Outcome::Pass);
        }
        fail(
            format!("chi {chi} (expected {top}), core si {} (expected {predicted})", actual.si),
            vec![Certificate::induced(&gh, actual.vertices)?, Certificate::chromatic(&gh)?],
        )
    }))
}

fn conj_3_4(ctx: &Ctx) -> Result<Vec<Item>> {
    let list = connected_small_with_c5(ctx)?;
    Ok(pair_items(&list, &list, true, "tensor", |g, h, lim| {
        let (cg, ch) = (core_of(g, lim)?, core_of(h, lim)?);
        let low = cg.chi.min(ch.chi);
        let predicted = [&cg, &ch].iter().filter(|c| c.chi == low).map(|c| c.si).min().expect("one factor attains the min");
        let gh = product(ProductKind::Tensor, g, h)?;
        let chi = chromatic_number(&gh)?.chi;
        let actual = core_of(&gh, lim)?;
        if chi == low && actual.si == predicted {
            return Ok(Outcome::Pass);
        }
        fail(
            format!("chi {chi} vs min factor chi {low}; core si {} vs predicted {predicted}", actual.si),
            vec![Certificate::induced(&gh, actual.vertices)?, Certificate::chromatic(&gh)?],
        )
    }))
}

/// Pass iff the product of factor cores attains the product's core si.
fn product_of_cores(kind: ProductKind, g: &Graph, h: &Graph, lim: &Limits) -> Result<Outcome> {
    let (cg, ch) = (core_of(g, lim)?, core_of(h, lim)?);
    let gh = product(kind, g, h)?;
    let m = h.order();
    let predicted: VertexSet = cg.vertices.iter().flat_map(|i| ch.vertices.iter().map(move |j| i * m + j)).collect();
    let chi = chromatic_number(&gh)?.chi;
    let sub = gh.induced_subgraph(predicted)?.graph;
    let sub_chi = chromatic_number(&sub)?.chi;
    let actual = core_of(&gh, lim)?;
    if sub_chi == chi && actual.si == sub.structor_index() {
        return Ok(Outcome::Pass);
    }
    fail(
        format!(
            "product of cores has chi {sub_chi}, si {}; product has chi {chi}, core si {}",
            sub.structor_index(),
            actual.si
        ),
        vec![Certificate::induced(&gh, actual.vertices)?, Certificate::induced(&gh, predicted)?, Certificate::chromatic(&gh)?],
    )
}

fn conj_3_5(_: &Ctx) -> Result<Vec<Item>> {
    let list = named_pairs(&CONJ_FACTORS);
    Ok(pair_items(&list, &list, true, "strong", |g, h, lim| product_of_cores(ProductKind::Strong, g, h, lim)))
}

fn conj_3_6(_: &Ctx) -> Result<Vec<Item>> {
    let list = named_pairs(&CONJ_FACTORS);
    Ok(pair_items(&list, &list, false, "lex", |g, h, lim| product_of_cores(ProductKind::Lexicographic, g, h, lim)))
}

fn lemma_3_4(ctx: &Ctx) -> Result<Vec<Item>> {
    let list = connected_small_with_c5(ctx)?;
    Ok(pair_items(&list, &list, false, "strong-vs-lex", |g, h, _| {
        let s = product(ProductKind::Strong, g, h)?;
        let l = product(ProductKind::Lexicographic, g, h)?;
        if s.size() <= l.size() {
            return Ok(Outcome::Pass);
        }
        fail(format!("strong has {} edges, lexicographic {}", s.size(), l.size()), vec![Certificate::invariants(&s)?, Certificate::invariants(&l)?])
    }))
}

// ---------------------------------------------------------------------------
// complements, chi-minus, line graphs, strong-product facts
// ---------------------------------------------------------------------------

fn complement_existence(ctx: &Ctx) -> Result<Vec<Item>> {
    Ok(items_over(connected_corpus(ctx)?, |g, _| {
        let c5 = fam("cycle:5");
        let excluded = g.is_complete() || is_isomorphic_with_limit(g, &c5, 8)?;
        let co = g.complement();
        let proper = !is_vertex_critical(&co);
        if proper != excluded {
            return Ok(Outcome::Pass);
        }
        fail(format!("G complete or C5: {excluded}; complement has a proper equal-chi subgraph: {proper}"), vertex_deleted(&co)?)
    }))
}

fn complement_theorem(ctx: &Ctx) -> Result<Vec<Item>> {
    Ok(items_over(connected_corpus(ctx)?, |g, lim| {
        let f = finder(lim);
        let co = g.complement();
        let core_g = f.find_core(g)?;
        let sub_g = core_g.subgraph(g)?;
        let mut matched = false;
        let co_cores = f.enumerate_cores(&co)?;
        if co_cores[0].si == core_g.si {
            for c in &co_cores {
                if is_isomorphic_with_limit(&c.subgraph(&co)?, &sub_g, 16)? {
                    matched = true;
                    break;
                }
            }
        }
        let p3 = fam("path:3");
        let special = is_isomorphic_with_limit(g, &p3, 8)? || is_isomorphic_with_limit(g, &co, 16)?;
        if matched == special {
            return Ok(Outcome::Pass);
        }
        fail(
            format!("complement has a core isomorphic to a core of G: {matched}; G is P3 or self-complementary: {special}"),
            vec![Certificate::induced(g, core_g.vertices)?, Certificate::induced(&co, co_cores[0].vertices)?, Certificate::invariants(g)?],
        )
    }))
}

fn complement_cor_i(ctx: &Ctx) -> Result<Vec<Item>> {
    let graphs = connected_corpus(ctx)?.into_iter().filter(|(_, g)| is_weakly_perfect(g)).collect();
    Ok(items_over(graphs, |g, lim| {
        let co = g.complement();
        let (omega, clique) = clique_number(&co)?;
        let core = finder(lim).find_core(&co)?;
        if core.si == tri(omega) && core.vertices.len() == omega {
            return Ok(Outcome::Pass);
        }
        fail(
            format!("complement: omega {omega}, chi {}, core si {}", core.chi, core.si),
            vec![Certificate::induced(&co, core.vertices)?, Certificate::induced(&co, clique)?, Certificate::clique(&co)?],
        )
    }))
}

fn complement_cor_ii(ctx: &Ctx) -> Result<Vec<Item>> {
    let graphs = connected_corpus(ctx)?.into_iter().filter(|(_, g)| !is_weakly_perfect(g)).collect();
    Ok(items_over(graphs, |g, lim| unique_whole(&g.complement(), lim)))
}

fn chi_minus(ctx: &Ctx) -> Result<Vec<Item>> {
    let graphs = connected_corpus(ctx)?.into_iter().filter(|(_, g)| is_weakly_perfect(g)).collect();
    Ok(items_over(graphs, |g, lim| {
        let coloring = chi_minus_coloring(g)?;
        let first = coloring.classes()[0];
        let maximum = maximum_independent_sets(g)?.contains(&first);
        let co = g.complement();
        let core = finder(lim).find_core(&co)?;
        let x = first.len();
        if maximum && core.chi == x && core.si == tri(x) {
            return Ok(Outcome::Pass);
        }
        fail(
            format!("first class has {x} vertices (maximum independent: {maximum}); complement core chi {} si {}", core.chi, core.si),
            vec![Certificate::induced(&co, first)?, Certificate::induced(&co, core.vertices)?, Certificate::chromatic(&co)?],
        )
    }))
}

fn tree_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(i)
}

fn line_graph_trees(ctx: &Ctx) -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for i in 0..ctx.limits.trees as u64 {
        let n = 2 + (i as usize % 9);
        let seed = tree_seed(ctx.seed, i);
        let t = random_tree(n, seed)?;
        items.push(item(format!("random_tree:{n},{seed}"), move |lim| {
            let l = t.line_graph()?;
            let delta = t.max_degree();
            let core = finder(lim).find_core(&l)?;
            let (omega, _) = clique_number(&l)?;
            if omega == delta && core.vertices.len() == delta && core.si == tri(delta) {
                return Ok(Outcome::Pass);
            }
            fail(
                format!("Delta(T) = {delta}, omega(L(T)) = {omega}, core of L(T) has {} vertices", core.vertices.len()),
                vec![Certificate::induced(&l, core.vertices)?, Certificate::clique(&l)?],
            )
        }));
    }
    // Edgeless graphs: L(N_n) is again N_n by convention, so both cores are K1.
    for n in 1..=3 {
        let g = Graph::empty(n)?;
        items.push(item(format!("null:{n}"), move |lim| {
            let core = finder(lim).find_core(&g)?;
            if core.si == 1 {
                Ok(Outcome::Pass)
            } else {
                fail("edgeless graph core is not K1", vec![Certificate::induced(&g, core.vertices)?])
            }
        }));
    }
    Ok(items)
}

fn strong_pair_items(pairs: Vec<(String, String)>, check: fn(&Graph, &Limits) -> Result<Outcome>) -> Vec<Item> {
    pairs
        .into_iter()
        .map(|(a, b)| {
            let g = product(ProductKind::Strong, &fam(&a), &fam(&b)).expect("small strong product");
            item(format!("strong({a},{b})"), move |lim| check(&g, lim))
        })
        .collect()
}

fn strong_paths_k4(_: &Ctx) -> Result<Vec<Item>> {
    let mut pairs = Vec::new();
    for n in 2..=4 {
        for m in n..=4 {
            pairs.push((format!("path:{n}"), format!("path:{m}")));
        }
    }
    for (c, p) in [(4, 2), (4, 4), (6, 2), (6, 4), (8, 2)] {
        pairs.push((format!("cycle:{c}"), format!("path:{p}")));
    }
    Ok(strong_pair_items(pairs, |g, lim| {
        let chi = chromatic_number(g)?.chi;
        if chi != 4 {
            return fail(format!("chi = {chi}"), vec![Certificate::chromatic(g)?]);
        }
        clique_core(g, 4, lim)
    }))
}

fn strong_odd_cycles_k5(_: &Ctx) -> Result<Vec<Item>> {
    let pairs = [(3, 3), (3, 5), (5, 5), (5, 7), (7, 7)]
        .into_iter()
        .map(|(a, b)| (format!("cycle:{a}"), format!("cycle:{b}")))
        .collect();
    Ok(strong_pair_items(pairs, |g, lim| {
        let chi = chromatic_number(g)?.chi;
        if chi != 5 {
            return fail(format!("chi = {chi}, not 5"), vec![Certificate::chromatic(g)?, Certificate::clique(g)?]);
        }
        let (omega, _) = clique_number(g)?;
        if omega < 5 {
            // No K5 exists; the certificate pins omega and the actual core.
            let mut certs = vec![Certificate::chromatic(g)?, Certificate::clique(g)?];
            match finder(lim).find_core(g) {
                Ok(core) => certs.push(Certificate::induced(g, core.vertices)?),
                Err(e) if e.is_capability() => {}
                Err(e) => return Err(e),
            }
            return fail(format!("chi = 5 but omega = {omega}, so K5 cannot be a core"), certs);
        }
        clique_core(g, 5, lim)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique() {
        let mut ids = claim_ids();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(matches!(verify_claim("nope", 1, &Limits::default()), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn limits_parse() {
        let mut l = Limits::default();
        l.apply("search=20").unwrap();
        l.apply("order = 5").unwrap();
        assert_eq!((l.search, l.order), (20, 5));
        assert!(l.apply("order=9").is_err());
        assert!(l.apply("bogus=1").is_err());
        assert!(l.apply("search").is_err());
    }

    #[test]
    fn odd_cycles_report() {
        let r = verify_claim("prop-2.2-iii", 7, &Limits::default()).unwrap();
        assert_eq!((r.corpus_size, r.passes, r.counterexamples.len()), (4, 4, 0));
    }

    #[test]
    fn tiny_search_limit_skips() {
        let limits = Limits { search: 4, ..Limits::default() };
        let r = verify_claim("prop-2.2-vi", 1, &limits).unwrap();
        assert!(r.is_consistent());
        // W3 = K4 is settled by its clique; W5 and W7 need the search.
        assert_eq!((r.passes, r.skipped.len()), (1, 2));
        assert!(r.skipped[0].reason.contains("limit"));
    }

    #[test]
    fn lemma_2_1_finds_odd_wheel() {
        let r = verify_claim("lemma-2.1", 1, &Limits { order: 6, ..Limits::default() }).unwrap();
        assert!(r.all_reverified());
        let w5 = emit_graph6(&fam("wheel:5")).unwrap();
        assert!(r.counterexamples.iter().any(|c| {
            let g = crate::harness::graph6::parse_graph6(&c.instance[3..]).unwrap();
            is_isomorphic_with_limit(&g, &crate::harness::graph6::parse_graph6(&w5).unwrap(), 8).unwrap()
        }));
    }
}
