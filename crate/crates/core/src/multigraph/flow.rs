//! Unit-capacity max-flow on undirected multigraphs.
//!
//! Augmenting paths are found by breadth-first search that scans incident
//! edges in ascending id order, so cuts and path systems are reproducible.

use std::collections::VecDeque;

use serde::Serialize;

use super::{EdgeId, GraphError, MultiGraph, PathSystem, VertexId, Walk};

/// A minimum `s`–`t` edge cut. `side_s` is the set of vertices reachable
/// from `s` in the final residual network, i.e. the cut nearest to `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub size: usize,
    pub edges: Vec<EdgeId>,
    pub side_s: Vec<VertexId>,
}

pub(crate) struct UnitFlow<'g> {
    g: &'g MultiGraph,
    inc: Vec<Vec<(EdgeId, VertexId)>>,
    /// +1: one unit from the first to the second endpoint, -1: reverse.
    flow: Vec<i8>,
    pub(crate) value: usize,
}

impl<'g> UnitFlow<'g> {
    pub(crate) fn new(g: &'g MultiGraph) -> Self {
        UnitFlow {
            g,
            inc: g.incidence(),
            flow: vec![0; g.edge_count()],
            value: 0,
        }
    }

    fn has_residual(&self, e: EdgeId, from: VertexId) -> bool {
        let (u, v) = self.g.endpoints(e);
        if u == v {
            return false;
        }
        if from == u {
            self.flow[e] < 1
        } else {
            self.flow[e] > -1
        }
    }

    fn push(&mut self, e: EdgeId, from: VertexId) {
        let (u, _) = self.g.endpoints(e);
        if from == u {
            self.flow[e] += 1;
        } else {
            self.flow[e] -= 1;
        }
    }

    /// Residual breadth-first search from `s`; predecessor edge per vertex.
    fn search(&self, s: VertexId) -> Vec<Option<(EdgeId, VertexId)>> {
        let n = self.g.vertex_count();
        let mut pred = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(e, y) in &self.inc[x] {
                if !seen[y] && self.has_residual(e, x) {
                    seen[y] = true;
                    pred[y] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
        pred
    }

    fn reachable(&self, s: VertexId) -> Vec<bool> {
        let pred = self.search(s);
        let mut out: Vec<bool> = pred.iter().map(Option::is_some).collect();
        out[s] = true;
        out
    }

    /// Augments along one shortest residual path; false if none exists.
    fn augment(&mut self, s: VertexId, t: VertexId) -> bool {
        let pred = self.search(s);
        if pred[t].is_none() {
            return false;
        }
        let mut y = t;
        while let Some((e, x)) = pred[y] {
            self.push(e, x);
            y = x;
        }
        self.value += 1;
        true
    }

    /// Augments until the flow value reaches `limit` or is maximum.
    pub(crate) fn run(&mut self, s: VertexId, t: VertexId, limit: usize) {
        while self.value < limit && self.augment(s, t) {}
    }

    pub(crate) fn min_cut(&self, s: VertexId) -> EdgeCut {
        self.cut_from_side(self.reachable(s))
    }

    /// The minimum cut nearest to `t`: the `s` side is everything that cannot
    /// reach `t` in the residual network.
    pub(crate) fn min_cut_toward(&self, t: VertexId) -> EdgeCut {
        let n = self.g.vertex_count();
        let mut reaches = vec![false; n];
        reaches[t] = true;
        let mut queue = VecDeque::from([t]);
        while let Some(y) = queue.pop_front() {
            for &(e, x) in &self.inc[y] {
                if !reaches[x] && self.has_residual(e, x) {
                    reaches[x] = true;
                    queue.push_back(x);
                }
            }
        }
        self.cut_from_side(reaches.iter().map(|&r| !r).collect())
    }

    fn cut_from_side(&self, side: Vec<bool>) -> EdgeCut {
        let edges: Vec<EdgeId> = self
            .g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| side[u] != side[v])
            .map(|(e, _)| e)
            .collect();
        EdgeCut {
            size: edges.len(),
            edges,
            side_s: (0..self.g.vertex_count()).filter(|&v| side[v]).collect(),
        }
    }

    /// Splits the current flow into `value` edge-disjoint `s`–`t` paths.
    /// Flow cycles met on the way are cut out, so every walk is a path.
    pub(crate) fn decompose(&self, s: VertexId, t: VertexId) -> PathSystem {
        let mut flow = self.flow.clone();
        let mut paths = Vec::with_capacity(self.value);
        for _ in 0..self.value {
            let mut walk = Walk::trivial(s);
            let mut pos = vec![usize::MAX; self.g.vertex_count()];
            pos[s] = 0;
            let mut x = s;
            while x != t {
                let (e, y) = self.inc[x]
                    .iter()
                    .copied()
                    .find(|&(e, _)| {
                        let (u, v) = self.g.endpoints(e);
                        u != v && ((x == u && flow[e] == 1) || (x == v && flow[e] == -1))
                    })
                    .expect("flow conservation guarantees an outgoing unit");
                flow[e] = 0;
                if pos[y] != usize::MAX {
                    // Closed a cycle: drop it.
                    let keep = pos[y];
                    for &v in &walk.vertices[keep + 1..] {
                        pos[v] = usize::MAX;
                    }
                    walk.vertices.truncate(keep + 1);
                    walk.edges.truncate(keep);
                } else {
                    walk.vertices.push(y);
                    walk.edges.push(e);
                    pos[y] = walk.edges.len();
                }
                x = y;
            }
            paths.push(walk);
        }
        PathSystem { paths }
    }
}

/// Minimum `s`–`t` edge cut under unit capacities.
pub fn min_edge_cut(g: &MultiGraph, s: VertexId, t: VertexId) -> Result<EdgeCut, GraphError> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(GraphError::SameTerminals(s));
    }
    let mut flow = UnitFlow::new(g);
    flow.run(s, t, usize::MAX);
    let cut = flow.min_cut(s);
    debug_assert_eq!(cut.size, flow.value);
    Ok(cut)
}

/// `count` pairwise edge-disjoint `s`–`t` paths obtained by decomposing a
/// flow of that value.
pub fn edge_disjoint_paths(
    g: &MultiGraph,
    s: VertexId,
    t: VertexId,
    count: usize,
) -> Result<PathSystem, GraphError> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(GraphError::SameTerminals(s));
    }
    let mut flow = UnitFlow::new(g);
    flow.run(s, t, count);
    if flow.value < count {
        flow.run(s, t, usize::MAX);
        return Err(GraphError::Infeasible {
            requested: count,
            available: flow.value,
        });
    }
    Ok(flow.decompose(s, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn single_edge_cut() {
        let g = MultiGraph::from_edges(2, [(0, 1)]).unwrap();
        let cut = min_edge_cut(&g, 0, 1).unwrap();
        assert_eq!(cut.size, 1);
        assert_eq!(cut.edges, vec![0]);
        assert_eq!(cut.side_s, vec![0]);
    }

    #[test]
    fn k4_cut_is_three() {
        let g = k4();
        for s in 0..4 {
            for t in 0..4 {
                if s != t {
                    let cut = min_edge_cut(&g, s, t).unwrap();
                    assert_eq!(cut.size, 3);
                    assert!(cut.side_s.contains(&s) && !cut.side_s.contains(&t));
                }
            }
        }
    }

    #[test]
    fn separated_terminals_give_empty_cut() {
        let g = MultiGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let cut = min_edge_cut(&g, 0, 3).unwrap();
        assert_eq!(cut.size, 0);
        assert!(cut.edges.is_empty());
    }

    #[test]
    fn equal_terminals_rejected() {
        let g = k4();
        assert_eq!(min_edge_cut(&g, 1, 1), Err(GraphError::SameTerminals(1)));
        assert!(edge_disjoint_paths(&g, 2, 2, 1).is_err());
    }

    #[test]
    fn parallel_edges_give_distinct_paths() {
        let g = MultiGraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let ps = edge_disjoint_paths(&g, 0, 1, 2).unwrap();
        assert_eq!(ps.paths.len(), 2);
        assert_eq!(ps.paths[0].edges, vec![0]);
        assert_eq!(ps.paths[1].edges, vec![1]);
    }

    #[test]
    fn k4_three_paths() {
        let g = k4();
        let ps = edge_disjoint_paths(&g, 0, 3, 3).unwrap();
        assert_eq!(ps.paths.len(), 3);
        assert!(ps.is_valid_in(&g));
        assert!(ps.paths.iter().all(|p| p.start() == 0 && p.end() == 3));
    }

    #[test]
    fn too_many_paths_is_infeasible() {
        let g = k4();
        assert_eq!(
            edge_disjoint_paths(&g, 0, 3, 4),
            Err(GraphError::Infeasible {
                requested: 4,
                available: 3
            })
        );
    }

    #[test]
    fn loops_carry_no_flow() {
        let g = MultiGraph::from_edges(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(min_edge_cut(&g, 0, 1).unwrap().edges, vec![1]);
    }

    #[test]
    fn nearest_cuts_on_a_path() {
        let g = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut flow = UnitFlow::new(&g);
        flow.run(0, 3, usize::MAX);
        assert_eq!(flow.min_cut(0).edges, vec![0]);
        let far = flow.min_cut_toward(3);
        assert_eq!(far.edges, vec![2]);
        assert_eq!(far.side_s, vec![0, 1, 2]);
    }
}
