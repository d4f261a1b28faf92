//! Exact chromatic core subgraphs of small simple graphs.
//!
//! A chromatic core subgraph of `G` is an induced subgraph `H` with
//! `χ(H) = χ(G)` whose structor index `si(H) = ν(H) + ε(H)` is as small as
//! possible. The crate provides the graph type and structural operations,
//! family generators (including finite linear Jaco graphs), the six binary
//! graph operations, exact colouring and clique solvers, the core finder
//! with an exhaustive oracle, and a harness that checks published claims
//! about cores against closed corpora.

pub mod coloring;
pub mod corefinder;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod products;

#[cfg(test)]
mod properties;

pub use coloring::{chromatic_number, clique_number, ChiResult, Coloring};
pub use corefinder::{find_core, oracle_core, CoreCertificate, CoreFinder, Minimality};
pub use error::{Error, Result};
pub use families::{FamilySpec, JacoSpec};
pub use graph::{Graph, VertexSet};
pub use products::ProductKind;
