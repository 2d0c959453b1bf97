//! Left-right planarity test (de Fraysseix–Rosenstiehl, in Brandes'
//! formulation), run on the underlying simple graph.

use super::MultiGraph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }

    fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }
}

struct LrState {
    adj: Vec<Vec<(usize, usize)>>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    eref: Vec<Option<usize>>,
}

impl LrState {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((e, v));
            adj[v].push((e, u));
        }
        LrState {
            adj,
            src: vec![NONE; m],
            dst: vec![NONE; m],
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); n],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![NONE; m],
            eref: vec![None; m],
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.adj[v].len() {
            let (vw, w) = self.adj[v][i];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.src[vw] = v;
            self.dst[vw] = w;
            self.out_edges[v].push(vw);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < self.height[v] {
                self.nesting_depth[vw] += 1;
            }
            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        matches!(i.high, Some(h) if self.lowpt[h] > self.lowpt[b])
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        let l = p.left.low.map_or(NONE, |e| self.lowpt[e]);
        let r = p.right.low.map_or(NONE, |e| self.lowpt[e]);
        l.min(r)
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let outs = self.out_edges[v].clone();
        for (idx, &ei) in outs.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == ei {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(ei),
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // Return edges of ei go to the right.
        while self.stack.len() > self.stack_bottom[ei] {
            let mut q = self.stack.pop().expect("checked non-empty");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                match p.right.low {
                    None => p.right.high = q.right.high,
                    Some(pl) => self.eref[pl] = q.right.high,
                }
                p.right.low = q.right.low;
            } else {
                self.eref[q_low] = Some(self.lowpt_edge[e]);
            }
        }
        // Conflicting return edges of earlier siblings go to the left.
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let (Some(ql), Some(pl)) = (q.right.low, p.right.low) {
                self.eref[pl] = q.right.high;
                p.right.low = Some(ql);
            }
            match p.left.low {
                None => p.left = q.left,
                Some(pl) => {
                    self.eref[pl] = q.left.high;
                    p.left.low = q.left.low;
                }
            }
        }
        if !p.is_empty() {
            self.stack.push(p);
        }
        true
    }

    fn trim(&self, mut high: Option<usize>, u: usize) -> Option<usize> {
        while let Some(h) = high {
            if self.dst[h] != u {
                break;
            }
            high = self.eref[h];
        }
        high
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            p.left.high = self.trim(p.left.high, u);
            if p.left.high.is_none() {
                if let Some(ll) = p.left.low.take() {
                    self.eref[ll] = p.right.low;
                }
            }
            p.right.high = self.trim(p.right.high, u);
            if p.right.high.is_none() {
                if let Some(rl) = p.right.low.take() {
                    self.eref[rl] = p.left.low;
                }
            }
            if !p.is_empty() {
                self.stack.push(p);
            }
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.eref[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    (Some(l), None) => Some(l),
                    _ => hr,
                };
            }
        }
    }
}

/// Whether `g` has a crossing-free drawing in the plane. Loops and parallel
/// edges are discarded first; they never affect planarity.
pub fn is_planar(g: &MultiGraph) -> bool {
    planar_simple(g.vertex_count(), &g.simple_edges())
}

pub(crate) fn planar_simple(n: usize, edges: &[(usize, usize)]) -> bool {
    if n > 2 && edges.len() > 3 * n - 6 {
        return false;
    }
    let mut st = LrState::new(n, edges);
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            st.orient(v);
        }
    }
    for v in 0..n {
        let mut outs = std::mem::take(&mut st.out_edges[v]);
        outs.sort_by_key(|&e| st.nesting_depth[e]);
        st.out_edges[v] = outs;
    }
    roots.into_iter().all(|r| st.test(r))
}
