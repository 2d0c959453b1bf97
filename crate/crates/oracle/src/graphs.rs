use std::collections::HashSet;

use crate::RawGraph;

pub fn complete(n: usize) -> RawGraph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    (n, e)
}

pub fn complete_bipartite(a: usize, b: usize) -> RawGraph {
    let mut e = Vec::new();
    for i in 0..a {
        for j in 0..b {
            e.push((i, a + j));
        }
    }
    (a + b, e)
}

pub fn cycle(n: usize) -> RawGraph {
    (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn petersen() -> RawGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    (10, e)
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    crate::crossing::permutations(&(0..n).collect::<Vec<_>>())
}

/// One representative of every isomorphism class of connected simple graphs
/// on `1..=max_n` vertices. Classes are identified by the lexicographically
/// smallest relabelled adjacency bitmask.
pub fn connected_simple_graphs(max_n: usize) -> Vec<RawGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = complete(n).1;
        let perms = permutations_of(n);
        let mut index = vec![vec![0usize; n]; n];
        for (s, &(i, j)) in slots.iter().enumerate() {
            index[i][j] = s;
            index[j][i] = s;
        }
        let mut seen: HashSet<u32> = HashSet::new();
        for mask in 0u32..(1u32 << slots.len()) {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(s, _)| mask & (1 << s) != 0)
                .map(|(_, &e)| e)
                .collect();
            if !connected(n, &edges) {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    edges
                        .iter()
                        .fold(0u32, |acc, &(i, j)| acc | (1 << index[p[i]][p[j]]))
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push((n, edges));
            }
        }
    }
    out
}

/// A small xorshift generator so corpora are reproducible without sharing an
/// RNG with the code under test.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// A random multigraph with at most `max_n` vertices and `max_m` edges, at
/// most three parallel copies of any vertex pair and the occasional loop.
pub fn random_multigraph(rng: &mut XorShift, max_n: usize, max_m: usize) -> RawGraph {
    let n = 3 + rng.below(max_n - 2);
    let m = n - 1 + rng.below(max_m - n + 2);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut tries = 0;
    while edges.len() < m && tries < 1000 {
        tries += 1;
        let u = rng.below(n);
        let v = if rng.below(12) == 0 { u } else { rng.below(n) };
        let (u, v) = (u.min(v), u.max(v));
        let mult = edges.iter().filter(|&&e| e == (u, v)).count();
        if mult < 3 {
            edges.push((u, v));
        }
    }
    (n, edges)
}
