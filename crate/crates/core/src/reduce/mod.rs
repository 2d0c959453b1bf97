//! Reductions to linked, connected tiles: weak linking by repeated minimum
//! cuts, the linking power, splitting linked tiles into components, and the
//! decomposition of `cyc(T^n)` into cyclic chains of first-copy pieces.

mod decompose;
mod weak;

pub use decompose::{limit_decomposition, Decomposition, PieceCycle};
pub use weak::{is_weakly_linked, weakly_link, CutStep, WeakLinkResult};

use num_integer::Integer;
use thiserror::Error;

use crate::multigraph::{components, paired_edge_disjoint_paths, Linkage, MultiGraph, VertexId};
use crate::tile::{Tile, TileError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("tile is not linked; its components need not be tiles (run reduce first)")]
    NotLinked,
    #[error("linkedness undecided within the search budget of {0} steps")]
    LinkageUnknown(u64),
    #[error(
        "every minimum cut tried meets closing edge {position} twice; \
         the width {width} cannot be reduced by a cut step"
    )]
    SplitClosingEdge { position: usize, width: usize },
    #[error(transparent)]
    Tile(#[from] TileError),
}

/// Default step budget for linkedness searches.
pub const DEFAULT_LINK_BUDGET: u64 = 5_000_000;

/// Whether edge-disjoint paths join `A(i)` to `B(i)` for every `i`.
pub fn is_linked(t: &Tile, budget: u64) -> Linkage {
    if !is_weakly_linked(t) {
        return Linkage::Infeasible;
    }
    let pairs: Vec<(VertexId, VertexId)> =
        t.a().iter().copied().zip(t.b().iter().copied()).collect();
    paired_edge_disjoint_paths(t.graph(), &pairs, budget)
}

/// Cycles of a permutation given as `p[i] = image of i`, each listed from
/// its smallest element, ordered by that element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = p[i];
        }
        out.push(cycle);
    }
    out
}

/// Least common multiple of the cycle lengths of `p` (1 for the empty
/// permutation).
pub fn permutation_order(p: &[usize]) -> usize {
    cycles(p).iter().fold(1, |m, c| m.lcm(&c.len()))
}

/// `m` such that `T_0^m` is linked, where `T_0` is the weakly linked tile.
pub fn linking_power(w: &WeakLinkResult) -> usize {
    permutation_order(&w.permutation)
}

/// One component of a tile, with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Part {
    pub tile: Tile,
    /// Original id of each vertex of the part.
    pub vertices: Vec<VertexId>,
}

/// Splits by connected components (ordered by smallest vertex). Boundary
/// entries keep their relative order. Requires that `A(i)` and `B(i)` lie
/// in the same component for every `i`.
pub(crate) fn split_parts(t: &Tile) -> Vec<Part> {
    let g = t.graph();
    let blocks = components(g);
    let mut block_of = vec![0; g.vertex_count()];
    for (bi, block) in blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = bi;
        }
    }
    blocks
        .iter()
        .enumerate()
        .map(|(bi, block)| {
            let (sub, _) = g.induced(block);
            let local = |v: VertexId| block.binary_search(&v).expect("vertex of this block");
            let pick = |seq: &[VertexId]| -> Vec<VertexId> {
                seq.iter()
                    .filter(|&&v| block_of[v] == bi)
                    .map(|&v| local(v))
                    .collect()
            };
            Part {
                tile: Tile::new(sub, pick(t.a()), pick(t.b()))
                    .expect("linked components are tiles"),
                vertices: block.clone(),
            }
        })
        .collect()
}

/// Splits a linked tile into one tile per connected component.
pub fn split_components(t: &Tile, budget: u64) -> Result<Vec<Tile>, ReduceError> {
    match is_linked(t, budget) {
        Linkage::Found(_) => Ok(split_parts(t).into_iter().map(|p| p.tile).collect()),
        Linkage::Infeasible => Err(ReduceError::NotLinked),
        Linkage::Unknown => Err(ReduceError::LinkageUnknown(budget)),
    }
}

/// Disjoint union of graphs, in order.
pub fn disjoint_union_all<'a, I>(graphs: I) -> MultiGraph
where
    I: IntoIterator<Item = &'a MultiGraph>,
{
    graphs
        .into_iter()
        .fold(MultiGraph::new(0), |acc, g| acc.disjoint_union(g))
}
