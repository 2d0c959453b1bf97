//! Finite undirected multigraphs with loops and parallel edges.
//!
//! Edges are individuals: edge `i` is the `i`-th entry of the edge list and
//! keeps that id for the lifetime of the graph. Everything built on top of
//! this module (tiles, cyclic closures, planarizations) refers to edges by id.

mod connectivity;
pub(crate) mod flow;
mod isomorphism;
mod linkage;
pub(crate) mod planarity;

pub use connectivity::{component_labels, components, is_connected};
pub use flow::{edge_disjoint_paths, min_edge_cut, EdgeCut};
pub use isomorphism::are_isomorphic;
pub use linkage::{paired_edge_disjoint_paths, Linkage};
pub use planarity::is_planar;

use serde::Serialize;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} has endpoint {endpoint}, but the graph has {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: EdgeId,
        endpoint: VertexId,
        vertex_count: usize,
    },
    #[error("vertex {vertex} is out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("source and sink must be distinct (both are {0})")]
    SameTerminals(VertexId),
    #[error("{requested} edge-disjoint paths requested but the minimum cut has size {available}")]
    Infeasible { requested: usize, available: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting endpoints that are not
    /// vertices.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = MultiGraph::new(vertex_count);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "vertex {v} is not an endpoint of edge {e}");
            a
        }
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    /// Whether two distinct edges share an endpoint.
    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_vertices(&mut self, count: usize) -> std::ops::Range<VertexId> {
        let start = self.vertex_count;
        self.vertex_count += count;
        start..self.vertex_count
    }

    /// Appends an edge. Panics if an endpoint is not a vertex; use
    /// [`MultiGraph::try_add_edge`] for untrusted input.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        self.try_add_edge(u, v)
            .unwrap_or_else(|err| panic!("add_edge: {err}"))
    }

    pub fn try_add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        for endpoint in [u, v] {
            if endpoint >= self.vertex_count {
                return Err(GraphError::EndpointOutOfRange {
                    edge: self.edges.len(),
                    endpoint,
                    vertex_count: self.vertex_count,
                });
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Incident `(edge, neighbour)` pairs per vertex, in ascending edge id. A
    /// loop is listed once at its vertex.
    pub fn incidence(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((e, v));
            if u != v {
                inc[v].push((e, u));
            }
        }
        inc
    }

    /// Degree with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// The disjoint union; vertices and edges of `other` are shifted past
    /// those of `self`.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let off = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        MultiGraph {
            vertex_count: off + other.vertex_count,
            edges,
        }
    }

    /// Copy of the graph without the flagged edges, together with the
    /// original id of every surviving edge.
    pub fn without_edges(&self, removed: &[bool]) -> (MultiGraph, Vec<EdgeId>) {
        let mut kept = Vec::new();
        let mut edges = Vec::new();
        for (e, &uv) in self.edges.iter().enumerate() {
            if !removed.get(e).copied().unwrap_or(false) {
                kept.push(e);
                edges.push(uv);
            }
        }
        (
            MultiGraph {
                vertex_count: self.vertex_count,
                edges,
            },
            kept,
        )
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    /// Returns the subgraph and the original id of each of its edges.
    pub fn induced(&self, vertices: &[VertexId]) -> (MultiGraph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut sub = MultiGraph::new(vertices.len());
        let mut origin = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                sub.edges.push((local[u], local[v]));
                origin.push(e);
            }
        }
        (sub, origin)
    }

    /// Underlying simple graph: loops dropped, each parallel class collapsed
    /// to one `(min, max)` pair, sorted.
    pub fn simple_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A walk given as alternating vertices and edges:
/// `vertices[i]` and `vertices[i + 1]` are the ends of `edges[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Walk {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Walk {
    pub fn trivial(v: VertexId) -> Self {
        Walk {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self
            .vertices
            .last()
            .expect("a walk has at least one vertex")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether consecutive vertices really are the ends of the listed edges.
    pub fn consistent_with(&self, g: &MultiGraph) -> bool {
        if self.vertices.len() != self.edges.len() + 1 {
            return false;
        }
        self.edges.iter().enumerate().all(|(i, &e)| {
            e < g.edge_count() && {
                let (a, b) = g.endpoints(e);
                let (x, y) = (self.vertices[i], self.vertices[i + 1]);
                (a, b) == (x, y) || (a, b) == (y, x)
            }
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathSystem {
    pub paths: Vec<Walk>,
}

impl PathSystem {
    /// Every walk is consistent with `g` and no edge is used twice.
    pub fn is_valid_in(&self, g: &MultiGraph) -> bool {
        let mut used = vec![false; g.edge_count()];
        for p in &self.paths {
            if !p.consistent_with(g) {
                return false;
            }
            for &e in &p.edges {
                if std::mem::replace(&mut used[e], true) {
                    return false;
                }
            }
        }
        true
    }
}
