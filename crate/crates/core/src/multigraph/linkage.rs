//! Exact search for edge-disjoint paths with prescribed end pairs.
//!
//! The problem is NP-hard in general, so the search carries a budget of
//! path-extension steps; running out yields [`Linkage::Unknown`], never a
//! negative answer.

use super::{EdgeId, MultiGraph, PathSystem, VertexId, Walk};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Linkage {
    /// Path `i` joins `pairs[i]`; the paths are pairwise edge-disjoint.
    Found(PathSystem),
    Infeasible,
    /// The step budget ran out before the search finished.
    Unknown,
}

impl Linkage {
    pub fn is_found(&self) -> bool {
        matches!(self, Linkage::Found(_))
    }
}

struct Search<'g> {
    inc: Vec<Vec<(EdgeId, VertexId)>>,
    g: &'g MultiGraph,
    pairs: &'g [(VertexId, VertexId)],
    used: Vec<bool>,
    /// `i + 1` on the vertices of the path currently grown for pair `i`.
    on_path: Vec<usize>,
    steps: u64,
    budget: u64,
    paths: Vec<Walk>,
}

struct OutOfBudget;

impl Search<'_> {
    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    /// Every remaining pair is still connected through unused edges.
    fn remaining_connected(&self, from: usize) -> bool {
        let n = self.g.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for &(s, t) in &self.pairs[from..] {
            if label[s] == usize::MAX {
                label[s] = next;
                stack.push(s);
                while let Some(v) = stack.pop() {
                    for &(e, w) in &self.inc[v] {
                        if !self.used[e] && label[w] == usize::MAX {
                            label[w] = next;
                            stack.push(w);
                        }
                    }
                }
                next += 1;
            }
            if label[s] != label[t] {
                return false;
            }
        }
        true
    }

    fn solve_from(&mut self, i: usize) -> Result<bool, OutOfBudget> {
        if i == self.pairs.len() {
            return Ok(true);
        }
        let (s, t) = self.pairs[i];
        if s == t {
            self.paths.push(Walk::trivial(s));
            if self.solve_from(i + 1)? {
                return Ok(true);
            }
            self.paths.pop();
            return Ok(false);
        }
        if !self.remaining_connected(i) {
            return Ok(false);
        }
        let mut walk = Walk::trivial(s);
        let old = std::mem::replace(&mut self.on_path[s], i + 1);
        let found = self.extend(i, &mut walk);
        self.on_path[s] = old;
        found
    }

    /// Grows `walk` towards the target of pair `i` along simple paths.
    fn extend(&mut self, i: usize, walk: &mut Walk) -> Result<bool, OutOfBudget> {
        let t = self.pairs[i].1;
        let x = walk.end();
        for idx in 0..self.inc[x].len() {
            let (e, y) = self.inc[x][idx];
            if self.used[e] || self.on_path[y] == i + 1 {
                continue;
            }
            self.tick()?;
            self.used[e] = true;
            walk.vertices.push(y);
            walk.edges.push(e);
            let found = if y == t {
                self.paths.push(walk.clone());
                let ok = self.solve_from(i + 1)?;
                if !ok {
                    self.paths.pop();
                }
                ok
            } else {
                let old = std::mem::replace(&mut self.on_path[y], i + 1);
                let ok = self.extend(i, walk);
                self.on_path[y] = old;
                ok?
            };
            if found {
                return Ok(true);
            }
            walk.vertices.pop();
            walk.edges.pop();
            self.used[e] = false;
        }
        Ok(false)
    }
}

/// Decides whether there are pairwise edge-disjoint paths joining each
/// `pairs[i]`, exploring at most `budget` path-extension steps.
///
/// Paths are vertex-simple; shortcutting a repeated vertex only frees edges,
/// so nothing is lost by that restriction.
pub fn paired_edge_disjoint_paths(
    g: &MultiGraph,
    pairs: &[(VertexId, VertexId)],
    budget: u64,
) -> Linkage {
    let mut search = Search {
        inc: g.incidence(),
        g,
        pairs,
        used: vec![false; g.edge_count()],
        on_path: vec![0; g.vertex_count()],
        steps: 0,
        budget,
        paths: Vec::with_capacity(pairs.len()),
    };
    match search.solve_from(0) {
        Ok(true) => Linkage::Found(PathSystem {
            paths: search.paths,
        }),
        Ok(false) => Linkage::Infeasible,
        Err(OutOfBudget) => Linkage::Unknown,
    }
}
