//! Iterative deepening over planarizations.
//!
//! A node is a set of crossings together with their order along every edge.
//! If its planarization is not planar, some Kuratowski subgraph of it must be
//! crossed in any drawing extending the node, so the children are the
//! crossings of two segments of one such subgraph. Every optimal drawing is
//! reached this way, which makes the search exact and lets the last round
//! collect the lexicographically least optimal crossing list.
//!
//! Costs are integers: with `β = p / q` a crossing weighs `q`, `q + p` or
//! `q + 2p` (all `1` without weights).

use std::collections::HashSet;

use super::{beta_parts, ratio, CrossingError, Planarization, Solution, SolveOptions, Verdict};
use crate::multigraph::planarity::planar_simple;
use crate::multigraph::{EdgeId, MultiGraph};

/// Exact crossing number of `g` (or minimum total weight when
/// `opts.weights` is set), never crossing an edge of `opts.uncrossable`.
/// Loops are never crossed. The answer is a bounded verdict when the
/// ceiling or the node budget is hit.
pub fn crossing_number(g: &MultiGraph, opts: &SolveOptions) -> Result<Verdict, CrossingError> {
    let m = g.edge_count();
    if let Some(&e) = opts.uncrossable.iter().find(|&&e| e >= m) {
        return Err(CrossingError::EdgeOutOfRange {
            edge: e,
            edge_count: m,
        });
    }
    let (p, q) = match &opts.weights {
        Some(w) => beta_parts(w)?,
        None => (0, 1),
    };
    let internal = match (&opts.weights, &opts.internal) {
        (None, _) => vec![false; m],
        (Some(_), Some(labels)) if labels.len() == m => labels.clone(),
        (Some(_), labels) => {
            return Err(CrossingError::MissingLabels {
                expected: m,
                got: labels.as_ref().map_or(0, Vec::len),
            })
        }
    };
    let crossable = (0..m)
        .map(|e| !opts.uncrossable.contains(&e) && !g.is_loop(e))
        .collect();
    let mut s = Search {
        g,
        crossable,
        internal,
        weights: [q, q + p, q + 2 * p],
        min_weight: q,
        along: vec![Vec::new(); m],
        pairs: Vec::new(),
        nodes: 0,
        budget: opts.budget,
        visited: HashSet::new(),
        best: None,
        next: None,
    };
    let ceiling = opts.max_k as u64 * q;
    let mut threshold = euler_lower_bound(g) as u64 * q;
    loop {
        if threshold > ceiling {
            return Ok(Verdict::AboveCeiling { max_k: opts.max_k });
        }
        s.visited.clear();
        s.next = None;
        if s.dfs(0, threshold).is_err() {
            return Ok(Verdict::BudgetExhausted {
                nodes: s.nodes,
                lower_bound: ratio(threshold, q),
            });
        }
        if let Some(best) = s.best.take() {
            return Ok(Verdict::Optimal(Solution {
                value: ratio(best.cost, q),
                witness: best.witness,
            }));
        }
        match s.next {
            Some(t) => threshold = t,
            None => return Ok(Verdict::Infeasible),
        }
    }
}

struct Best {
    cost: u64,
    sorted: Vec<(EdgeId, EdgeId)>,
    witness: Planarization,
}

struct BudgetHit;

struct Search<'a> {
    g: &'a MultiGraph,
    crossable: Vec<bool>,
    internal: Vec<bool>,
    weights: [u64; 3],
    min_weight: u64,
    /// Crossing ids along each edge, from its first endpoint.
    along: Vec<Vec<usize>>,
    /// Edge pair of each crossing id, in insertion order.
    pairs: Vec<(EdgeId, EdgeId)>,
    nodes: u64,
    budget: u64,
    visited: HashSet<Box<[u32]>>,
    best: Option<Best>,
    next: Option<u64>,
}

/// A segment of the planarized graph: piece `index` of edge `edge`.
#[derive(Clone, Copy)]
struct Segment {
    u: usize,
    v: usize,
    edge: EdgeId,
    index: usize,
}

impl Search<'_> {
    fn dfs(&mut self, cost: u64, threshold: u64) -> Result<(), BudgetHit> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetHit);
        }
        if !self.visited.insert(self.key()) {
            return Ok(());
        }
        let limit = match &self.best {
            Some(b) => threshold.min(b.cost),
            None => threshold,
        };
        if cost > limit {
            return Ok(());
        }
        let segments = self.segments();
        let simple = simple_segments(&segments);
        let vertices = self.g.vertex_count() + self.pairs.len();
        let edges: Vec<(usize, usize)> = simple
            .iter()
            .map(|&i| (segments[i].u, segments[i].v))
            .collect();
        if planar_simple(vertices, &edges) {
            self.record(cost);
            return Ok(());
        }
        if cost + self.min_weight > limit {
            self.bump(cost + self.min_weight);
            return Ok(());
        }
        let obstruction: Vec<Segment> = kuratowski_subset(vertices, &edges)
            .into_iter()
            .map(|i| segments[simple[i]])
            .collect();
        let mut children = Vec::new();
        for (i, s1) in obstruction.iter().enumerate() {
            for s2 in &obstruction[i + 1..] {
                let (e, f) = (s1.edge, s2.edge);
                if e == f
                    || !self.crossable[e]
                    || !self.crossable[f]
                    || self.g.adjacent_edges(e, f)
                    || self.already_crossed(e, f)
                {
                    continue;
                }
                let w = self.weights[usize::from(self.internal[e]) + usize::from(self.internal[f])];
                if cost + w > limit {
                    self.bump(cost + w);
                } else {
                    children.push((*s1, *s2, w));
                }
            }
        }
        for (s1, s2, w) in children {
            let c = self.pairs.len();
            self.pairs.push((s1.edge, s2.edge));
            self.along[s1.edge].insert(s1.index, c);
            self.along[s2.edge].insert(s2.index, c);
            let result = self.dfs(cost + w, threshold);
            self.along[s2.edge].remove(s2.index);
            self.along[s1.edge].remove(s1.index);
            self.pairs.pop();
            result?;
        }
        Ok(())
    }

    fn bump(&mut self, f: u64) {
        self.next = Some(self.next.map_or(f, |n| n.min(f)));
    }

    fn already_crossed(&self, e: EdgeId, f: EdgeId) -> bool {
        self.along[e].iter().any(|&c| {
            let (x, y) = self.pairs[c];
            x == f || y == f
        })
    }

    /// Partner edges along every edge: determines the node completely.
    fn key(&self) -> Box<[u32]> {
        let mut key = Vec::with_capacity(self.along.len() + 2 * self.pairs.len());
        for (e, cs) in self.along.iter().enumerate() {
            for &c in cs {
                let (x, y) = self.pairs[c];
                key.push(if x == e { y } else { x } as u32);
            }
            key.push(u32::MAX);
        }
        key.into_boxed_slice()
    }

    fn segments(&self) -> Vec<Segment> {
        let n = self.g.vertex_count();
        let mut out = Vec::with_capacity(self.g.edge_count() + 2 * self.pairs.len());
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            let mut prev = u;
            for (index, &c) in self.along[e].iter().enumerate() {
                out.push(Segment {
                    u: prev,
                    v: n + c,
                    edge: e,
                    index,
                });
                prev = n + c;
            }
            out.push(Segment {
                u: prev,
                v,
                edge: e,
                index: self.along[e].len(),
            });
        }
        out
    }

    fn record(&mut self, cost: u64) {
        let mut ids: Vec<usize> = (0..self.pairs.len()).collect();
        let norm = |(e, f): (EdgeId, EdgeId)| (e.min(f), e.max(f));
        ids.sort_by_key(|&c| norm(self.pairs[c]));
        let sorted: Vec<(EdgeId, EdgeId)> = ids.iter().map(|&c| norm(self.pairs[c])).collect();
        if let Some(b) = &self.best {
            if (b.cost, &b.sorted) <= (cost, &sorted) {
                return;
            }
        }
        let mut rank = vec![0; ids.len()];
        for (r, &c) in ids.iter().enumerate() {
            rank[c] = r;
        }
        let order = self
            .along
            .iter()
            .map(|cs| cs.iter().map(|&c| rank[c]).collect())
            .collect();
        let witness = Planarization::new(self.g.clone(), sorted.clone(), order)
            .expect("search states are consistent planarizations");
        self.best = Some(Best {
            cost,
            sorted,
            witness,
        });
    }
}

/// Indices of one segment per parallel class, loops dropped.
fn simple_segments(segments: &[Segment]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..segments.len())
        .filter(|&i| segments[i].u != segments[i].v)
        .collect();
    let norm = |i: usize| {
        let s = segments[i];
        (s.u.min(s.v), s.u.max(s.v))
    };
    idx.sort_by_key(|&i| (norm(i), i));
    idx.dedup_by_key(|i| norm(*i));
    idx.sort_unstable();
    idx
}

/// Edge indices of an inclusion-minimal non-planar subgraph, which is a
/// subdivision of `K5` or `K3,3`. `edges` must be simple and non-planar.
fn kuratowski_subset(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut keep = vec![true; edges.len()];
    let mut trial = Vec::with_capacity(edges.len());
    for i in 0..edges.len() {
        keep[i] = false;
        trial.clear();
        trial.extend((0..edges.len()).filter(|&j| keep[j]).map(|j| edges[j]));
        if planar_simple(n, &trial) {
            keep[i] = true;
        }
    }
    (0..edges.len()).filter(|&i| keep[i]).collect()
}

/// Lower bound from Euler's formula on the underlying simple graph: a
/// planar graph of girth `g` on `n >= 3` vertices has at most
/// `g (n - 2) / (g - 2)` edges, and deleting one edge per crossing leaves a
/// planar graph of girth at least `g`.
pub(crate) fn euler_lower_bound(g: &MultiGraph) -> usize {
    let edges = g.simple_edges();
    let mut used = vec![false; g.vertex_count()];
    for &(u, v) in &edges {
        used[u] = true;
        used[v] = true;
    }
    let n = used.iter().filter(|&&x| x).count();
    let Some(girth) = girth(g.vertex_count(), &edges) else {
        return 0;
    };
    let cap = girth * (n - 2) / (girth - 2);
    edges.len().saturating_sub(cap)
}

/// Length of a shortest cycle of a simple graph, if it has one.
fn girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
