/// Every simple path from `s` to `t`, as edge-id lists.
pub fn simple_paths(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if s == t {
        out.push(Vec::new());
        return out;
    }
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    on_path[s] = true;
    walk(edges, s, t, &mut on_path, &mut path, &mut out);
    out
}

fn walk(
    edges: &[(usize, usize)],
    v: usize,
    t: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for (e, &(a, b)) in edges.iter().enumerate() {
        let w = if a == v {
            b
        } else if b == v {
            a
        } else {
            continue;
        };
        if on_path[w] {
            continue;
        }
        path.push(e);
        if w == t {
            out.push(path.clone());
        } else {
            on_path[w] = true;
            walk(edges, w, t, on_path, path, out);
            on_path[w] = false;
        }
        path.pop();
    }
}

/// Whether pairwise edge-disjoint paths joining each pair exist, by trying
/// every combination of simple paths.
pub fn paired_disjoint_paths_exist(
    n: usize,
    edges: &[(usize, usize)],
    pairs: &[(usize, usize)],
) -> bool {
    let options: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .map(|&(s, t)| simple_paths(n, edges, s, t))
        .collect();
    let mut used = vec![false; edges.len()];
    assign(&options, 0, &mut used)
}

fn assign(options: &[Vec<Vec<usize>>], i: usize, used: &mut [bool]) -> bool {
    if i == options.len() {
        return true;
    }
    for p in &options[i] {
        if p.iter().any(|&e| used[e]) {
            continue;
        }
        for &e in p {
            used[e] = true;
        }
        let ok = assign(options, i + 1, used);
        for &e in p {
            used[e] = false;
        }
        if ok {
            return true;
        }
    }
    false
}

/// Minimum number of distinct copies met by a path between an endpoint of
/// `e1` and an endpoint of `e2`, found by enumerating simple paths.
pub fn min_copies_between(
    n: usize,
    edges: &[(usize, usize)],
    copy_of: &[usize],
    e1: usize,
    e2: usize,
) -> Option<usize> {
    let (a1, b1) = edges[e1];
    let (a2, b2) = edges[e2];
    let mut best: Option<usize> = None;
    for s in [a1, b1] {
        for t in [a2, b2] {
            for p in simple_paths(n, edges, s, t) {
                let mut copies: Vec<usize> = vec![copy_of[s]];
                let mut v = s;
                for e in p {
                    let (x, y) = edges[e];
                    v = if x == v { y } else { x };
                    copies.push(copy_of[v]);
                }
                copies.sort_unstable();
                copies.dedup();
                best = Some(best.map_or(copies.len(), |b| b.min(copies.len())));
            }
        }
    }
    best
}
