use crate::multigraph::flow::UnitFlow;
use crate::multigraph::{EdgeCut, EdgeId, MultiGraph, PathSystem, VertexId, Walk};
use crate::tile::Tile;

use super::ReduceError;

/// One application of the cut transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutStep {
    pub width_before: usize,
    /// Cut edges as ids of the apex graph: tile edges keep their ids, the
    /// edge from the `A`-apex to `A(j)` is `|E| + j` and the edge from the
    /// `B`-apex to `B(j)` is `|E| + k + j`.
    pub cut: Vec<EdgeId>,
    /// New `B` sequence.
    pub u: Vec<VertexId>,
    /// New `A` sequence.
    pub v: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakLinkResult {
    pub tile: Tile,
    /// `permutation[i] = j`: path `i` runs from `A(i)` to `B(j)`.
    pub permutation: Vec<usize>,
    pub paths: PathSystem,
    pub steps: Vec<CutStep>,
}

/// `G` plus an apex joined to every entry of `A` and one joined to every
/// entry of `B`. Returns the graph and the two apices.
fn apex_graph(t: &Tile) -> (MultiGraph, VertexId, VertexId) {
    let mut g = t.graph().clone();
    let a = g.add_vertex();
    let b = g.add_vertex();
    for &x in t.a() {
        g.add_edge(a, x);
    }
    for &y in t.b() {
        g.add_edge(b, y);
    }
    (g, a, b)
}

/// At least `k` edge-disjoint paths lead from the entries of `A` to the
/// entries of `B` (one max-flow).
pub fn is_weakly_linked(t: &Tile) -> bool {
    let (g, a, b) = apex_graph(t);
    let mut flow = UnitFlow::new(&g);
    flow.run(a, b, t.width());
    flow.value == t.width()
}

/// Replaces `t` by a tile of smaller width with the same cyclic closures,
/// as long as some cut between the apices is smaller than the width; then
/// reads off the permutation and the paths from a maximum flow.
///
/// The minimum cut nearest to the `A`-apex is tried first, then the one
/// nearest to the `B`-apex. New boundary positions follow the order of the
/// cut edge ids. A cut containing both apex edges of one position `j` would
/// have to remove closing edge `j` twice; if both cuts do, there is no step
/// to take and [`ReduceError::SplitClosingEdge`] is returned. This happens:
/// two vertices `x, y` without edges, `A = (x, y, y)`, `B = (y, x, x)`
/// admit no weakly linked tile with the same cyclic closures at all.
pub fn weakly_link(t: &Tile) -> Result<WeakLinkResult, ReduceError> {
    let mut cur = t.clone();
    let mut steps = Vec::new();
    loop {
        let k = cur.width();
        let m = cur.graph().edge_count();
        let (g, a, b) = apex_graph(&cur);
        let mut flow = UnitFlow::new(&g);
        flow.run(a, b, k);
        if flow.value == k {
            let (permutation, paths) = read_paths(flow.decompose(a, b), m, k);
            return Ok(WeakLinkResult {
                tile: cur,
                permutation,
                paths,
                steps,
            });
        }
        let near_a = flow.min_cut(a);
        let step = match apply_cut(&cur, &g, &near_a) {
            Ok(step) => step,
            Err(j) => apply_cut(&cur, &g, &flow.min_cut_toward(b)).map_err(|_| {
                ReduceError::SplitClosingEdge {
                    position: j,
                    width: k,
                }
            })?,
        };
        cur = step.1;
        steps.push(step.0);
    }
}

/// The tile obtained from `cyc(T)` by removing the edges `u_i v_i` of the
/// cut, or the first position whose closing edge the cut meets twice.
fn apply_cut(cur: &Tile, g: &MultiGraph, cut: &EdgeCut) -> Result<(CutStep, Tile), usize> {
    let k = cur.width();
    let m = cur.graph().edge_count();
    let mut on_a_side = vec![false; g.vertex_count()];
    for &x in &cut.side_s {
        on_a_side[x] = true;
    }
    // cyc(T) for one copy: tile edges, then closing edge j = m + j.
    let closed = cur.cyc(1).expect("one copy").into_graph();
    let mut removed = vec![false; closed.edge_count()];
    let (mut u, mut v) = (Vec::new(), Vec::new());
    for &e in &cut.edges {
        let (ui, vi, edge) = if e < m {
            let (x, y) = g.endpoints(e);
            if on_a_side[x] {
                (x, y, e)
            } else {
                (y, x, e)
            }
        } else {
            let j = (e - m) % k;
            (cur.b()[j], cur.a()[j], m + j)
        };
        if std::mem::replace(&mut removed[edge], true) {
            return Err(edge - m);
        }
        u.push(ui);
        v.push(vi);
    }
    let (reduced, _) = closed.without_edges(&removed);
    let step = CutStep {
        width_before: k,
        cut: cut.edges.clone(),
        u: u.clone(),
        v: v.clone(),
    };
    let tile = Tile::new(reduced, v, u).expect("cut endpoints are tile vertices");
    Ok((step, tile))
}

/// Strips the apex edges from flow paths `a, A(i), ..., B(j), b` and sorts
/// them by `i`.
fn read_paths(flow_paths: PathSystem, m: usize, k: usize) -> (Vec<usize>, PathSystem) {
    let mut by_start: Vec<Option<(usize, Walk)>> = vec![None; k];
    for p in flow_paths.paths {
        let first = p.edges[0];
        let last = *p.edges.last().expect("apex paths have two apex edges");
        let (i, j) = (first - m, last - m - k);
        let inner = Walk {
            vertices: p.vertices[1..p.vertices.len() - 1].to_vec(),
            edges: p.edges[1..p.edges.len() - 1].to_vec(),
        };
        by_start[i] = Some((j, inner));
    }
    let mut permutation = Vec::with_capacity(k);
    let mut paths = Vec::with_capacity(k);
    for slot in by_start {
        let (j, walk) = slot.expect("every A entry starts one path");
        permutation.push(j);
        paths.push(walk);
    }
    (permutation, PathSystem { paths })
}
