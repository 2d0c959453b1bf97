use crate::multigraph::{EdgeId, MultiGraph, VertexId};

use super::{EdgeLabel, Tile, TileError};

/// `Z T^n Z'` surrounded by a wheel whose rim visits
/// `v_1, ..., v_k, v'_k, ..., v'_1` in this cyclic order.
///
/// With rim and spokes uncrossable, every drawing of this graph puts the
/// core into one face of the wheel with the boundary vertices in rim order,
/// which is exactly a drawing of `Z T^n Z'` in a closed disk.
///
/// Layout: the `n` copies of the tile take vertex blocks as in
/// [`super::CycGraph`], then come `v_1..v_k`, `v'_1..v'_k` and the apex.
/// Edges: per copy its internal edges followed by the seam to the next copy
/// (none after the last copy); then `v_j A_0(j)` for all `j`, then
/// `B_(n-1)(j) v'_j` for all `j`; then the rim and finally the spokes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedGraph {
    graph: MultiGraph,
    boundary_order: Vec<VertexId>,
    apex: VertexId,
    core_labels: Vec<EdgeLabel>,
}

impl FramedGraph {
    pub(super) fn new(t: &Tile, n: usize) -> Result<Self, TileError> {
        if n == 0 {
            return Err(TileError::ZeroCopies);
        }
        let k = t.width();
        let nv = t.graph().vertex_count();
        let mut graph = MultiGraph::new(n * nv);
        let mut core_labels = Vec::new();
        for i in 0..n {
            let here = i * nv;
            for &(u, v) in t.graph().edges() {
                graph.add_edge(u + here, v + here);
                core_labels.push(EdgeLabel::Internal(i));
            }
            if i + 1 < n {
                for (&bj, &aj) in t.b().iter().zip(t.a()) {
                    graph.add_edge(bj + here, aj + here + nv);
                    core_labels.push(EdgeLabel::External(i));
                }
            }
        }
        let z = graph.add_vertices(k).start;
        let z_prime = graph.add_vertices(k).start;
        let apex = graph.add_vertex();
        // The two halves of the closing seam of cyc(T^n), cut open by Z, Z'.
        let last = (n - 1) * nv;
        for (j, &aj) in t.a().iter().enumerate() {
            graph.add_edge(z + j, aj);
            core_labels.push(EdgeLabel::External(n - 1));
        }
        for (j, &bj) in t.b().iter().enumerate() {
            graph.add_edge(bj + last, z_prime + j);
            core_labels.push(EdgeLabel::External(n - 1));
        }
        let mut boundary_order: Vec<VertexId> = (z..z + k).collect();
        boundary_order.extend((z_prime..z_prime + k).rev());
        let rim = boundary_order.len();
        if rim > 0 {
            for i in 0..rim {
                graph.add_edge(boundary_order[i], boundary_order[(i + 1) % rim]);
            }
            for &v in &boundary_order {
                graph.add_edge(apex, v);
            }
        }
        Ok(FramedGraph {
            graph,
            boundary_order,
            apex,
            core_labels,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn boundary_order(&self) -> &[VertexId] {
        &self.boundary_order
    }

    pub fn apex(&self) -> VertexId {
        self.apex
    }

    /// Core edges are `0..core_edge_count()`; frame edges follow.
    pub fn core_edge_count(&self) -> usize {
        self.core_labels.len()
    }

    pub fn core_labels(&self) -> &[EdgeLabel] {
        &self.core_labels
    }

    pub fn frame_edges(&self) -> std::ops::Range<EdgeId> {
        self.core_edge_count()..self.graph.edge_count()
    }

    /// Per edge, whether it belongs to the frame (and so may not be crossed).
    pub fn uncrossable(&self) -> Vec<bool> {
        let core = self.core_edge_count();
        (0..self.graph.edge_count()).map(|e| e >= core).collect()
    }
}
