//! Crossing number by exhaustive enumeration of crossing sets.
//!
//! Every unordered pair of distinct crossable edges is a candidate, including
//! pairs that share an endpoint and pairs involving loops. For each set of `k`
//! pairs every ordering of the crossings along every edge is tried and the
//! resulting planarization is handed to `rustworkx-core`.

use crate::planarity::is_planar;

/// Smallest `k <= max_k` such that some planarization with `k` crossings is
/// planar, or `None` when none exists up to `max_k`.
pub fn crossing_number(
    n: usize,
    edges: &[(usize, usize)],
    uncrossable: &[bool],
    max_k: usize,
) -> Option<usize> {
    let crossable: Vec<usize> = (0..edges.len())
        .filter(|&e| !uncrossable.get(e).copied().unwrap_or(false))
        .collect();
    let mut pairs = Vec::new();
    for (i, &e) in crossable.iter().enumerate() {
        for &f in &crossable[i + 1..] {
            pairs.push((e, f));
        }
    }
    for k in 0..=max_k {
        if k > pairs.len() {
            break;
        }
        let mut chosen = Vec::with_capacity(k);
        if choose(&pairs, k, 0, &mut chosen, &mut |set| {
            realisable(n, edges, set)
        }) {
            return Some(k);
        }
    }
    None
}

fn choose(
    pairs: &[(usize, usize)],
    k: usize,
    start: usize,
    chosen: &mut Vec<(usize, usize)>,
    test: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if chosen.len() == k {
        return test(chosen);
    }
    let need = k - chosen.len();
    for i in start..pairs.len() {
        if pairs.len() - i < need {
            break;
        }
        chosen.push(pairs[i]);
        if choose(pairs, k, i + 1, chosen, test) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Tries every ordering of the crossings along each edge.
fn realisable(n: usize, edges: &[(usize, usize)], set: &[(usize, usize)]) -> bool {
    let mut along: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (c, &(e, f)) in set.iter().enumerate() {
        along[e].push(c);
        along[f].push(c);
    }
    let busy: Vec<usize> = (0..edges.len()).filter(|&e| along[e].len() > 1).collect();
    let mut orders = along.clone();
    try_orders(n, edges, set.len(), &busy, 0, &mut orders, &along)
}

fn try_orders(
    n: usize,
    edges: &[(usize, usize)],
    crossings: usize,
    busy: &[usize],
    idx: usize,
    orders: &mut Vec<Vec<usize>>,
    along: &[Vec<usize>],
) -> bool {
    if idx == busy.len() {
        return planarized_is_planar(n, edges, crossings, orders);
    }
    let e = busy[idx];
    for perm in permutations(&along[e]) {
        orders[e] = perm;
        if try_orders(n, edges, crossings, busy, idx + 1, orders, along) {
            return true;
        }
    }
    false
}

fn planarized_is_planar(
    n: usize,
    edges: &[(usize, usize)],
    crossings: usize,
    orders: &[Vec<usize>],
) -> bool {
    let total = n + crossings;
    let mut out = Vec::with_capacity(edges.len() + 2 * crossings);
    for (e, &(u, v)) in edges.iter().enumerate() {
        let mut prev = u;
        for &c in &orders[e] {
            out.push((prev, n + c));
            prev = n + c;
        }
        out.push((prev, v));
    }
    is_planar(total, &out)
}

/// All permutations of `items` in lexicographic order of positions.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Minimum number of crossings in a drawing of a tile's core graph inside a
/// disk whose boundary carries `boundary` in cyclic order.
///
/// The disk is modelled by a new hub vertex joined to each boundary vertex
/// through a private subdivision vertex, those subdivision vertices forming a
/// cycle in boundary order; all of these frame edges are uncrossable.
pub fn disk_crossing_number(
    n: usize,
    core_edges: &[(usize, usize)],
    boundary: &[usize],
    max_k: usize,
) -> Option<usize> {
    let mut edges = core_edges.to_vec();
    let mut uncrossable = vec![false; edges.len()];
    let mut total = n;
    if !boundary.is_empty() {
        let hub = total;
        total += 1;
        let first_sub = total;
        total += boundary.len();
        for (j, &b) in boundary.iter().enumerate() {
            let s = first_sub + j;
            edges.push((hub, s));
            edges.push((s, b));
            let next = first_sub + (j + 1) % boundary.len();
            edges.push((s, next));
            uncrossable.extend([true, true, true]);
        }
    }
    crossing_number(total, &edges, &uncrossable, max_k)
}

/// A tile as raw data: vertex count, edges, `A` and `B` sequences.
#[derive(Clone, Debug)]
pub struct RawTile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl RawTile {
    /// Concatenation of `copies` copies joined `B` to `A`.
    pub fn power(&self, copies: usize) -> RawTile {
        let mut edges = Vec::new();
        for c in 0..copies {
            let off = c * self.n;
            edges.extend(self.edges.iter().map(|&(u, v)| (u + off, v + off)));
            if c + 1 < copies {
                let next = off + self.n;
                for (&b, &a) in self.b.iter().zip(&self.a) {
                    edges.push((b + off, a + next));
                }
            }
        }
        RawTile {
            n: self.n * copies,
            edges,
            a: self.a.clone(),
            b: self.b.iter().map(|&b| b + (copies - 1) * self.n).collect(),
        }
    }

    /// The cyclic closure of `copies` copies.
    pub fn cyclic(&self, copies: usize) -> (usize, Vec<(usize, usize)>) {
        let p = self.power(copies);
        let mut edges = p.edges.clone();
        for (&a, &b) in p.a.iter().zip(&p.b) {
            edges.push((b, a));
        }
        (p.n, edges)
    }

    /// Minimum crossings of a tile drawing of `copies` copies, through
    /// [`disk_crossing_number`].
    pub fn tile_drawing_number(&self, copies: usize, max_k: usize) -> Option<usize> {
        let p = self.power(copies);
        let k = p.a.len();
        let mut edges = p.edges.clone();
        // Boundary stubs v_1..v_k and v'_1..v'_k.
        let left = p.n;
        let right = p.n + k;
        for (i, &a) in p.a.iter().enumerate() {
            edges.push((left + i, a));
        }
        for (i, &b) in p.b.iter().enumerate() {
            edges.push((b, right + i));
        }
        let mut boundary: Vec<usize> = (0..k).map(|i| left + i).collect();
        boundary.extend((0..k).rev().map(|i| right + i));
        disk_crossing_number(p.n + 2 * k, &edges, &boundary, max_k)
    }
}
