use proptest::prelude::*;
use tilecross::multigraph::{
    are_isomorphic, edge_disjoint_paths, is_planar, min_edge_cut, paired_edge_disjoint_paths,
    Linkage, MultiGraph,
};
use tilecross_oracle::{cuts, graphs, iso, paths, planarity};

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |edges| MultiGraph::from_edges(n, edges).unwrap())
    })
}

fn mask_of(edges: &[usize]) -> u32 {
    edges.iter().map(|&e| 1u32 << e).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn menger_duality(g in multigraph(7, 14), s in 0usize..7, t in 0usize..7) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let cut = min_edge_cut(&g, s, t).unwrap();
        let ps = edge_disjoint_paths(&g, s, t, cut.size).unwrap();
        prop_assert!(ps.is_valid_in(&g));
        prop_assert!(ps.paths.iter().all(|p| p.start() == s && p.end() == t));
        prop_assert!(edge_disjoint_paths(&g, s, t, cut.size + 1).is_err());
        prop_assert_eq!(cut.size, cuts::min_cut_size(n, g.edges(), s, t));
    }

    #[test]
    fn cut_is_minimal(g in multigraph(6, 12), s in 0usize..6, t in 0usize..6) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let cut = min_edge_cut(&g, s, t).unwrap();
        prop_assert_eq!(cut.size, cut.edges.len());
        prop_assert!(cuts::separates(n, g.edges(), mask_of(&cut.edges), s, t));
        for skip in 0..cut.edges.len() {
            let mut fewer = cut.edges.clone();
            fewer.remove(skip);
            prop_assert!(!cuts::separates(n, g.edges(), mask_of(&fewer), s, t));
        }
        prop_assert!(cut.side_s.contains(&s) && !cut.side_s.contains(&t));
    }

    #[test]
    fn paired_paths_match_oracle(
        g in multigraph(6, 9),
        raw in prop::collection::vec((0usize..6, 0usize..6), 0..=3),
    ) {
        let n = g.vertex_count();
        let pairs: Vec<_> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        let expected = paths::paired_disjoint_paths_exist(n, g.edges(), &pairs);
        match paired_edge_disjoint_paths(&g, &pairs, u64::MAX) {
            Linkage::Found(ps) => {
                prop_assert!(expected);
                prop_assert!(ps.is_valid_in(&g));
                for (p, &(a, b)) in ps.paths.iter().zip(&pairs) {
                    prop_assert_eq!((p.start(), p.end()), (a, b));
                }
            }
            Linkage::Infeasible => prop_assert!(!expected),
            Linkage::Unknown => prop_assert!(false, "unbounded search returned unknown"),
        }
    }

    #[test]
    fn isomorphism_matches_oracle(a in multigraph(6, 8), b in multigraph(6, 8)) {
        let ra = (a.vertex_count(), a.edges().to_vec());
        let rb = (b.vertex_count(), b.edges().to_vec());
        prop_assert_eq!(are_isomorphic(&a, &b), iso::isomorphic(&ra, &rb));
    }

    #[test]
    fn isomorphism_sees_through_relabelling(
        g in multigraph(8, 14),
        perm_seed in any::<u64>(),
    ) {
        let n = g.vertex_count();
        let mut rng = graphs::XorShift::new(perm_seed);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.below(i + 1));
        }
        let mut edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[v], perm[u])).collect();
        edges.reverse();
        let h = MultiGraph::from_edges(n, edges).unwrap();
        prop_assert!(are_isomorphic(&g, &g));
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert!(are_isomorphic(&h, &g));
    }

    #[test]
    fn planarity_matches_library_on_larger_graphs(g in multigraph(11, 26)) {
        let expected = planarity::is_planar(g.vertex_count(), g.edges());
        prop_assert_eq!(is_planar(&g), expected);
    }

    #[test]
    fn planarity_matches_library_on_sparse_graphs(g in multigraph(16, 24)) {
        let expected = planarity::is_planar(g.vertex_count(), g.edges());
        prop_assert_eq!(is_planar(&g), expected);
    }
}

/// Every simple graph on at most six vertices, compared with a search for
/// Kuratowski subdivisions.
#[test]
fn planarity_matches_kuratowski_up_to_six_vertices() {
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = MultiGraph::from_edges(n, edges.iter().copied()).unwrap();
            assert_eq!(
                is_planar(&g),
                planarity::kuratowski_planar_small(n, &edges),
                "n={n} edges={edges:?}"
            );
        }
    }
}

#[test]
fn isomorphism_is_transitive_on_samples() {
    let mut rng = graphs::XorShift::new(17);
    let sample: Vec<MultiGraph> = (0..40)
        .map(|_| {
            let (n, e) = graphs::random_multigraph(&mut rng, 5, 6);
            MultiGraph::from_edges(n, e).unwrap()
        })
        .collect();
    for a in &sample {
        for b in &sample {
            if !are_isomorphic(a, b) {
                continue;
            }
            for c in &sample {
                if are_isomorphic(b, c) {
                    assert!(are_isomorphic(a, c));
                }
            }
        }
    }
}

#[test]
fn documented_examples() {
    let c4 = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let p4 = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(!are_isomorphic(&c4, &p4));
    let k33 = graphs::complete_bipartite(3, 3);
    assert!(!is_planar(&MultiGraph::from_edges(k33.0, k33.1).unwrap()));
}
