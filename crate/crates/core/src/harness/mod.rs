//! Claim verification, corpora, serialization and the command line.

pub mod catalog;
pub mod claims;
pub mod cli;
pub mod corpus;
pub mod edgelist;
pub mod graph6;
pub mod report;
