//! Claim reports and independently re-checkable certificates.

use serde::Serialize;

use crate::coloring::{chromatic_number, clique_number, is_k_colorable, Coloring};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::harness::graph6::{emit_graph6, parse_graph6};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    /// Proved in the source; a counterexample means an implementation bug.
    Theorem,
    /// Conjectured or unproved; counterexamples are findings.
    Hypothesis,
}

/// Machine-checkable evidence. Graphs are carried as graph6.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `vertices` induces a subgraph with chromatic number `chi` and structor index `si`.
    InducedSubset { graph: String, vertices: Vec<usize>, chi: usize, si: usize },
    /// `coloring` uses `chi` colours and no `chi − 1` colouring exists.
    ChromaticNumber { graph: String, chi: usize, coloring: Vec<usize> },
    /// `clique` is a clique of order `omega`, and none larger exists.
    CliqueNumber { graph: String, omega: usize, clique: Vec<usize> },
    /// Plain structural counts.
    Invariants { graph: String, order: usize, size: usize, max_degree: usize },
}

impl Certificate {
    pub fn induced(g: &Graph, set: VertexSet) -> Result<Certificate> {
        let sub = g.induced_subgraph(set)?.graph;
        let chi = if sub.order() == 0 { 0 } else { chromatic_number(&sub)?.chi };
        Ok(Certificate::InducedSubset { graph: emit_graph6(g)?, vertices: set.to_vec(), chi, si: sub.structor_index() })
    }

    pub fn chromatic(g: &Graph) -> Result<Certificate> {
        let r = chromatic_number(g)?;
        Ok(Certificate::ChromaticNumber { graph: emit_graph6(g)?, chi: r.chi, coloring: r.witness.assignment().to_vec() })
    }

    pub fn clique(g: &Graph) -> Result<Certificate> {
        let (omega, clique) = clique_number(g)?;
        Ok(Certificate::CliqueNumber { graph: emit_graph6(g)?, omega, clique: clique.to_vec() })
    }

    pub fn invariants(g: &Graph) -> Result<Certificate> {
        Ok(Certificate::Invariants {
            graph: emit_graph6(g)?,
            order: g.order(),
            size: g.size(),
            max_degree: g.max_degree(),
        })
    }

    /// Recomputes every stated fact from the graph alone.
    pub fn reverify(&self) -> Result<bool> {
        Ok(match self {
            Certificate::InducedSubset { graph, vertices, chi, si } => {
                let g = parse_graph6(graph)?;
                let set: VertexSet = vertices.iter().copied().collect();
                if g.validate_set(set).is_err() || set.len() != vertices.len() {
                    return Ok(false);
                }
                let sub = g.induced_subgraph(set)?.graph;
                let actual = if sub.order() == 0 { 0 } else { chromatic_number(&sub)?.chi };
                actual == *chi && sub.structor_index() == *si
            }
            Certificate::ChromaticNumber { graph, chi, coloring } => {
                let g = parse_graph6(graph)?;
                let proper = Coloring::new(&g, coloring.clone()).map(|c| c.colors() == *chi).unwrap_or(false);
                proper && (*chi == 0 || is_k_colorable(&g, chi - 1).is_none())
            }
            Certificate::CliqueNumber { graph, omega, clique } => {
                let g = parse_graph6(graph)?;
                let is_clique = clique.iter().all(|&u| clique.iter().all(|&v| u == v || g.adjacent(u, v)));
                is_clique && clique.len() == *omega && clique_number(&g)?.0 == *omega
            }
            Certificate::Invariants { graph, order, size, max_degree } => {
                let g = parse_graph6(graph)?;
                g.order() == *order && g.size() == *size && g.max_degree() == *max_degree
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
    pub certificates: Vec<Certificate>,
    /// Every certificate re-checked from primitives.
    pub reverified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub instance: String,
    pub reason: String,
}

/// `corpus_size = passes + counterexamples.len() + skipped.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub status: ClaimStatus,
    pub description: String,
    pub seed: u64,
    pub corpus_size: usize,
    pub passes: usize,
    pub counterexamples: Vec<Counterexample>,
    pub skipped: Vec<Skipped>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl ClaimReport {
    pub fn is_consistent(&self) -> bool {
        self.corpus_size == self.passes + self.counterexamples.len() + self.skipped.len()
    }

    pub fn all_reverified(&self) -> bool {
        self.counterexamples.iter().all(|c| c.reverified && !c.certificates.is_empty())
    }
}
