use crate::crossing::RawTile;

fn tile(n: usize, edges: &[(usize, usize)], a: &[usize], b: &[usize]) -> RawTile {
    RawTile {
        n,
        edges: edges.to_vec(),
        a: a.to_vec(),
        b: b.to_vec(),
    }
}

/// The fixed set of small tiles shared by the test suites.
pub fn test_tiles() -> Vec<(&'static str, RawTile)> {
    vec![
        ("single-vertex", tile(1, &[], &[0], &[0])),
        ("edge", tile(2, &[(0, 1)], &[0], &[1])),
        (
            "vertical-path-3",
            tile(3, &[(0, 1), (1, 2)], &[0, 1, 2], &[0, 1, 2]),
        ),
        ("crossing-x", tile(4, &[(0, 3), (1, 2)], &[0, 1], &[2, 3])),
        ("swap", tile(2, &[], &[0, 1], &[1, 0])),
        // Drawn once from a seeded generator and frozen.
        (
            "random-4-edge",
            tile(4, &[(0, 2), (1, 2), (2, 3), (1, 3)], &[0, 1], &[3, 2]),
        ),
    ]
}

/// Tiles exercising the reductions: not weakly linked, twisted, split.
pub fn reduction_tiles() -> Vec<(&'static str, RawTile)> {
    vec![
        ("doubled-edge", tile(2, &[(0, 1)], &[0, 0], &[1, 1])),
        ("twisted", tile(2, &[(0, 1)], &[0, 1], &[1, 0])),
        (
            "interleaved-pair",
            tile(4, &[(0, 1), (2, 3)], &[0, 2], &[1, 3]),
        ),
        ("width-0-pair", tile(3, &[(0, 1)], &[], &[])),
        (
            "bottleneck",
            tile(5, &[(0, 2), (1, 2), (2, 3), (2, 4)], &[0, 1], &[3, 4]),
        ),
        (
            "dangling",
            tile(4, &[(0, 1), (1, 2), (1, 3), (3, 3)], &[0, 0, 2], &[1, 2, 3]),
        ),
        ("three-cycle", tile(3, &[], &[0, 1, 2], &[1, 2, 0])),
        ("swap-with-stub", tile(3, &[(0, 2)], &[0, 1], &[1, 0])),
    ]
}
