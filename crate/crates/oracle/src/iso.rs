/// Isomorphism of multigraphs by trying every vertex bijection. Only for
/// graphs with at most nine vertices.
pub fn isomorphic(g1: &(usize, Vec<(usize, usize)>), g2: &(usize, Vec<(usize, usize)>)) -> bool {
    let (n, e1) = g1;
    let (n2, e2) = g2;
    if n != n2 || e1.len() != e2.len() {
        return false;
    }
    assert!(*n <= 9, "brute-force isomorphism is limited to 9 vertices");
    let m1 = multiplicities(*n, e1);
    let m2 = multiplicities(*n, e2);
    let perms = crate::crossing::permutations(&(0..*n).collect::<Vec<_>>());
    perms
        .iter()
        .any(|p| (0..*n).all(|i| (0..*n).all(|j| m1[i][j] == m2[p[i]][p[j]])))
}

fn multiplicities(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut m = vec![vec![0; n]; n];
    for &(u, v) in edges {
        m[u][v] += 1;
        if u != v {
            m[v][u] += 1;
        }
    }
    m
}
