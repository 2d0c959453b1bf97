use rustworkx_core::petgraph::graph::{NodeIndex, UnGraph};

/// Planarity via the `rustworkx-core` left-right test. Loops and repeated
/// pairs are dropped first; the library panics on parallel edges.
pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut g = UnGraph::<(), ()>::with_capacity(n, edges.len());
    for _ in 0..n {
        g.add_node(());
    }
    let mut simple: Vec<(usize, usize)> = edges
        .iter()
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    simple.sort_unstable();
    simple.dedup();
    for (u, v) in simple {
        g.add_edge(NodeIndex::new(u), NodeIndex::new(v), ());
    }
    rustworkx_core::planar::is_planar(&g)
}

/// Planarity decided by searching for a Kuratowski subdivision. Only valid
/// for graphs on at most six vertices, where a K5 subdivision is either K5
/// itself or K5 with one edge subdivided once, and a K3,3 subdivision is
/// K3,3 itself.
pub fn kuratowski_planar_small(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 6, "kuratowski oracle only covers up to 6 vertices");
    let mut adj = [[false; 6]; 6];
    for &(u, v) in edges {
        if u != v {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    // K3,3 needs all six vertices.
    if n == 6 {
        for mask in 0u32..64 {
            if mask.count_ones() != 3 || mask & 1 == 0 {
                continue;
            }
            let left: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
            let right: Vec<usize> = (0..6).filter(|i| mask & (1 << i) == 0).collect();
            if left.iter().all(|&a| right.iter().all(|&b| adj[a][b])) {
                return false;
            }
        }
    }
    let candidates: Vec<(Vec<usize>, Option<usize>)> = match n {
        5 => vec![((0..5).collect(), None)],
        6 => (0..6)
            .map(|spare| ((0..6).filter(|&i| i != spare).collect(), Some(spare)))
            .collect(),
        _ => Vec::new(),
    };
    for (five, spare) in candidates {
        let mut missing = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                if !adj[five[i]][five[j]] {
                    missing.push((five[i], five[j]));
                }
            }
        }
        if missing.is_empty() {
            return false;
        }
        if let (Some(w), [(x, y)]) = (spare, missing.as_slice()) {
            if adj[*x][w] && adj[w][*y] {
                return false;
            }
        }
    }
    true
}
