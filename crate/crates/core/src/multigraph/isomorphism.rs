//! Multigraph isomorphism: joint colour refinement to prune, then
//! backtracking that matches edge multiplicities (loops included).

use std::collections::BTreeMap;

use super::MultiGraph;

struct Dense {
    n: usize,
    mult: Vec<u32>,
    nbrs: Vec<Vec<usize>>,
}

impl Dense {
    fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![0u32; n * n];
        for &(u, v) in g.edges() {
            mult[u * n + v] += 1;
            if u != v {
                mult[v * n + u] += 1;
            }
        }
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && mult[u * n + v] > 0).collect())
            .collect();
        Dense { n, mult, nbrs }
    }

    fn m(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }
}

/// Refines colours of both graphs together so that colour ids mean the same
/// thing on either side. Returns `None` as soon as the colour histograms
/// differ.
fn refine(a: &Dense, b: &Dense) -> Option<(Vec<usize>, Vec<usize>)> {
    let initial = |d: &Dense, v: usize| -> Vec<u64> {
        let deg: u64 = d.nbrs[v].iter().map(|&w| d.m(v, w) as u64).sum();
        vec![deg, d.m(v, v) as u64]
    };
    let mut sigs: Vec<Vec<u64>> = (0..a.n).map(|v| initial(a, v)).collect();
    sigs.extend((0..b.n).map(|v| initial(b, v)));
    let mut classes = 0;
    loop {
        let mut ids: BTreeMap<&Vec<u64>, usize> = BTreeMap::new();
        for s in &sigs {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let colour: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        let (ca, cb) = colour.split_at(a.n);
        let mut hist = vec![0i64; ids.len()];
        for &c in ca {
            hist[c] += 1;
        }
        for &c in cb {
            hist[c] -= 1;
        }
        if hist.iter().any(|&h| h != 0) {
            return None;
        }
        if ids.len() == classes {
            return Some((ca.to_vec(), cb.to_vec()));
        }
        classes = ids.len();
        let next_sig = |d: &Dense, col: &[usize], v: usize| -> Vec<u64> {
            let mut around: Vec<(u64, u64)> = d.nbrs[v]
                .iter()
                .map(|&w| (col[w] as u64, d.m(v, w) as u64))
                .collect();
            around.sort_unstable();
            let mut s = vec![col[v] as u64];
            s.extend(around.into_iter().flat_map(|(c, m)| [c, m]));
            s
        };
        sigs = (0..a.n)
            .map(|v| next_sig(a, ca, v))
            .chain((0..b.n).map(|v| next_sig(b, cb, v)))
            .collect();
    }
}

/// Matching order for the vertices of the first graph: breadth-first within
/// each component, each component rooted at a vertex of the rarest colour.
fn match_order(a: &Dense, colour: &[usize]) -> Vec<usize> {
    let mut size = BTreeMap::new();
    for &c in colour {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut roots: Vec<usize> = (0..a.n).collect();
    roots.sort_by_key(|&v| (size[&colour[v]], v));
    let mut seen = vec![false; a.n];
    let mut order = Vec::with_capacity(a.n);
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &a.nbrs[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    a: &'a Dense,
    b: &'a Dense,
    ca: &'a [usize],
    cb: &'a [usize],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        if self.a.m(v, v) != self.b.m(w, w) {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&x| self.a.m(v, x) == self.b.m(w, self.map[x]))
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // A vertex with an already mapped neighbour can only go next to that
        // neighbour's image.
        let anchor = self.order[..depth]
            .iter()
            .copied()
            .find(|&x| self.a.m(v, x) > 0);
        let candidates: Vec<usize> = match anchor {
            Some(x) => self.b.nbrs[self.map[x]].clone(),
            None => (0..self.b.n).collect(),
        };
        for w in candidates {
            if self.used[w] || self.ca[v] != self.cb[w] || !self.consistent(depth, v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.search(depth + 1) {
                return true;
            }
            self.used[w] = false;
        }
        false
    }
}

/// Whether there is a bijection of vertices preserving the multiplicity of
/// every vertex pair, loops included.
pub fn are_isomorphic(g1: &MultiGraph, g2: &MultiGraph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }
    let a = Dense::new(g1);
    let b = Dense::new(g2);
    let Some((ca, cb)) = refine(&a, &b) else {
        return false;
    };
    let order = match_order(&a, &ca);
    let mut m = Matcher {
        a: &a,
        b: &b,
        ca: &ca,
        cb: &cb,
        order,
        map: vec![usize::MAX; a.n],
        used: vec![false; b.n],
    };
    m.search(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        MultiGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn relabelled_cycle() {
        let g = MultiGraph::from_edges(5, [(3, 1), (1, 4), (4, 0), (0, 2), (2, 3)]).unwrap();
        assert!(are_isomorphic(&cycle(5), &g));
    }

    #[test]
    fn regular_but_different() {
        // C6 versus two triangles: same degrees, refinement cannot separate.
        let two =
            MultiGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two));
    }

    #[test]
    fn multiplicities_matter() {
        let a = MultiGraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = MultiGraph::from_edges(3, [(2, 1), (0, 1), (2, 1)]).unwrap();
        let c = MultiGraph::from_edges(3, [(0, 1), (1, 2), (1, 1)]).unwrap();
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&a, &c));
    }

    #[test]
    fn loops_matter() {
        let a = MultiGraph::from_edges(2, [(0, 0), (1, 1)]).unwrap();
        let b = MultiGraph::from_edges(2, [(0, 0), (0, 0)]).unwrap();
        assert!(!are_isomorphic(&a, &b));
    }
}
