//! Brute-force reference procedures for the `tilecross` test suites.
//!
//! Everything here works on raw `(vertex_count, edge_list)` data and shares no
//! code with the library under test. The procedures are exponential and only
//! meant for the tiny instances the tests feed them.

pub mod crossing;
pub mod cuts;
pub mod graphs;
pub mod iso;
pub mod paths;
pub mod planarity;
pub mod tiles;

/// An undirected multigraph as a vertex count and an edge list.
pub type RawGraph = (usize, Vec<(usize, usize)>);
