//! Planar triangulations, permeating subtrees and Hamiltonian cycles of
//! their cubic duals.

pub mod coloring;
pub mod corpus;
pub mod duality;
pub mod embedding;
pub mod export;
pub mod graph;
pub mod hardness;
pub mod kelmans;
pub mod oracle;
pub mod ple;
pub mod report;
pub mod search;
pub mod sufficient;
pub mod triangulation;
