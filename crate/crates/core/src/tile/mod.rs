//! Tiles `(G, A, B)`: a multigraph with two boundary sequences of equal
//! length, plus composition, powers, cyclic closure and the framed graph
//! used for tile drawings.

mod cyc;
mod frame;

pub use cyc::{cyclic_tile_distance, CycGraph, EdgeLabel};
pub use frame::FramedGraph;

use thiserror::Error;

use crate::multigraph::{GraphError, MultiGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TileError {
    #[error("boundary sequences differ in length: |A| = {a}, |B| = {b}")]
    BoundaryLengths { a: usize, b: usize },
    #[error("{side}[{index}] = {vertex} is not a vertex (the graph has {vertex_count})")]
    BoundaryOutOfRange {
        side: char,
        index: usize,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("cannot compose tiles of widths {left} and {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("the number of copies must be at least 1")]
    ZeroCopies,
    #[error("edge {edge} does not exist (the graph has {edge_count} edges)")]
    NoSuchEdge { edge: usize, edge_count: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tile {
    graph: MultiGraph,
    a: Vec<VertexId>,
    b: Vec<VertexId>,
}

impl Tile {
    /// Validates that `a` and `b` have equal length and name vertices of
    /// `graph`. Repeated entries are allowed.
    pub fn new(graph: MultiGraph, a: Vec<VertexId>, b: Vec<VertexId>) -> Result<Self, TileError> {
        if a.len() != b.len() {
            return Err(TileError::BoundaryLengths {
                a: a.len(),
                b: b.len(),
            });
        }
        let n = graph.vertex_count();
        for (side, seq) in [('A', &a), ('B', &b)] {
            if let Some((index, &vertex)) = seq.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(TileError::BoundaryOutOfRange {
                    side,
                    index,
                    vertex,
                    vertex_count: n,
                });
            }
        }
        Ok(Tile { graph, a, b })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn a(&self) -> &[VertexId] {
        &self.a
    }

    pub fn b(&self) -> &[VertexId] {
        &self.b
    }

    pub fn width(&self) -> usize {
        self.a.len()
    }

    /// `T1 T2`: the disjoint union with `B1(i)` joined to `A2(i)`. The `k`
    /// joining edges get the highest edge ids.
    pub fn compose(&self, other: &Tile) -> Result<Tile, TileError> {
        if self.width() != other.width() {
            return Err(TileError::WidthMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        let off = self.graph.vertex_count();
        let mut graph = self.graph.disjoint_union(&other.graph);
        for (&u, &v) in self.b.iter().zip(&other.a) {
            graph.add_edge(u, v + off);
        }
        Ok(Tile {
            graph,
            a: self.a.clone(),
            b: other.b.iter().map(|&v| v + off).collect(),
        })
    }

    /// `T^1 = T`, `T^n = T^(n-1) T`.
    pub fn power(&self, n: usize) -> Result<Tile, TileError> {
        if n == 0 {
            return Err(TileError::ZeroCopies);
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.compose(self)?;
        }
        Ok(out)
    }

    /// Side-by-side union: graphs are disjoint and the boundary sequences
    /// are concatenated, `self` first.
    pub fn juxtapose(&self, other: &Tile) -> Tile {
        let off = self.graph.vertex_count();
        let shift = |seq: &[VertexId]| seq.iter().map(|&v| v + off).collect::<Vec<_>>();
        Tile {
            graph: self.graph.disjoint_union(&other.graph),
            a: [self.a.clone(), shift(&other.a)].concat(),
            b: [self.b.clone(), shift(&other.b)].concat(),
        }
    }

    /// `M(T) = C(|E(G)| + 2k, 2)`.
    pub fn big_m(&self) -> u64 {
        big_m(self.graph.edge_count(), self.width())
    }

    pub fn cyc(&self, n: usize) -> Result<CycGraph, TileError> {
        CycGraph::new(self, n)
    }

    pub fn frame(&self, n: usize) -> Result<FramedGraph, TileError> {
        FramedGraph::new(self, n)
    }
}

pub(crate) fn binomial2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// `C(edges + 2 width, 2)`.
pub fn big_m(edges: usize, width: usize) -> u64 {
    binomial2((edges + 2 * width) as u64)
}
