/// Size of a smallest edge set whose removal separates `s` from `t`, by
/// enumerating subsets in increasing size.
pub fn min_cut_size(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> usize {
    let m = edges.len();
    assert!(m <= 20, "subset enumeration limited to 20 edges");
    (0..=m)
        .find(|&k| {
            (0u32..(1 << m))
                .filter(|mask| mask.count_ones() as usize == k)
                .any(|mask| separates(n, edges, mask, s, t))
        })
        .unwrap()
}

/// Whether removing the edges in `mask` disconnects `s` from `t`.
pub fn separates(n: usize, edges: &[(usize, usize)], mask: u32, s: usize, t: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(v) = stack.pop() {
        for (e, &(a, b)) in edges.iter().enumerate() {
            if mask & (1 << e) != 0 {
                continue;
            }
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
    !seen[t]
}
