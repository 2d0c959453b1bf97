use crate::multigraph::{EdgeId, MultiGraph, VertexId};

use super::{Tile, TileError};

/// Where an edge of `cyc(T^n)` comes from. Copies are numbered from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    /// An edge of `G` inside copy `i`.
    Internal(usize),
    /// An added edge from copy `i` to copy `(i + 1) mod n`.
    External(usize),
}

impl EdgeLabel {
    pub fn is_internal(self) -> bool {
        matches!(self, EdgeLabel::Internal(_))
    }

    pub fn copy(self) -> usize {
        match self {
            EdgeLabel::Internal(i) | EdgeLabel::External(i) => i,
        }
    }
}

/// `cyc(T^n)` with the provenance of every edge.
///
/// Copy `i` owns vertices `[i |V|, (i + 1) |V|)`. Edge ids come in blocks,
/// one per copy: the `|E|` internal edges of copy `i`, then the `k`
/// external edges from copy `i` to copy `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycGraph {
    graph: MultiGraph,
    copies: usize,
    tile_vertices: usize,
    labels: Vec<EdgeLabel>,
}

impl CycGraph {
    pub(super) fn new(t: &Tile, n: usize) -> Result<Self, TileError> {
        if n == 0 {
            return Err(TileError::ZeroCopies);
        }
        let nv = t.graph().vertex_count();
        let mut graph = MultiGraph::new(n * nv);
        let mut labels = Vec::with_capacity(n * (t.graph().edge_count() + t.width()));
        for i in 0..n {
            let here = i * nv;
            let next = ((i + 1) % n) * nv;
            for &(u, v) in t.graph().edges() {
                graph.add_edge(u + here, v + here);
                labels.push(EdgeLabel::Internal(i));
            }
            for (&bj, &aj) in t.b().iter().zip(t.a()) {
                graph.add_edge(bj + here, aj + next);
                labels.push(EdgeLabel::External(i));
            }
        }
        Ok(CycGraph {
            graph,
            copies: n,
            tile_vertices: nv,
            labels,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> EdgeLabel {
        self.labels[e]
    }

    pub fn copy_of_vertex(&self, v: VertexId) -> usize {
        v / self.tile_vertices
    }

    /// Per edge, whether it is internal.
    pub fn internal_mask(&self) -> Vec<bool> {
        self.labels.iter().map(|l| l.is_internal()).collect()
    }

    pub fn into_graph(self) -> MultiGraph {
        self.graph
    }
}

/// The least number of distinct copies of the tile met by a path joining an
/// endpoint of `e1` to an endpoint of `e2`, counting the copies that contain
/// the path's ends. `None` when no such path exists.
///
/// Consecutive copies are only linked through external edges, so the copies
/// met by a path form a cyclic interval; the search tries intervals in
/// increasing length.
pub fn cyclic_tile_distance(
    c: &CycGraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<Option<usize>, TileError> {
    let m = c.graph.edge_count();
    for e in [e1, e2] {
        if e >= m {
            return Err(TileError::NoSuchEdge {
                edge: e,
                edge_count: m,
            });
        }
    }
    let n = c.copies;
    let (a1, b1) = c.graph.endpoints(e1);
    let (a2, b2) = c.graph.endpoints(e2);
    let inc = c.graph.incidence();
    for len in 1..=n {
        for start in 0..n {
            let inside = |v: VertexId| (c.copy_of_vertex(v) + n - start) % n < len;
            let mut seen = vec![false; c.graph.vertex_count()];
            let mut stack: Vec<VertexId> = [a1, b1].into_iter().filter(|&v| inside(v)).collect();
            for &v in &stack {
                seen[v] = true;
            }
            while let Some(v) = stack.pop() {
                for &(_, w) in &inc[v] {
                    if !seen[w] && inside(w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if seen[a2] || seen[b2] {
                return Ok(Some(len));
            }
        }
    }
    Ok(None)
}
