use std::time::{Duration, Instant};

use num_rational::BigRational;
use proptest::prelude::*;
use tilecross::crossing::{
    c_n, crn_beta, crossing_number, t_n, verify_witness, CrossingWeights, SolveOptions, Verdict,
};
use tilecross::multigraph::MultiGraph;
use tilecross::tile::Tile;
use tilecross_oracle::crossing::{self as oracle, RawTile};
use tilecross_oracle::{graphs, tiles, RawGraph};

fn graph(r: &RawGraph) -> MultiGraph {
    MultiGraph::from_edges(r.0, r.1.iter().copied()).unwrap()
}

fn tile(r: &RawTile) -> Tile {
    Tile::new(graph(&(r.n, r.edges.clone())), r.a.clone(), r.b.clone()).unwrap()
}

/// Solves, checks the witness, and returns the value.
fn solve(g: &MultiGraph, opts: &SolveOptions) -> usize {
    let v = crossing_number(g, opts).unwrap();
    let s = v.solution().unwrap_or_else(|| panic!("no optimum: {v:?}"));
    assert!(verify_witness(g, &s.witness, opts));
    assert_eq!(s.witness.crossing_count(), v.value().unwrap());
    v.value().unwrap()
}

#[test]
fn classic_values() {
    let cases: [(&str, RawGraph, usize); 6] = [
        ("C4", graphs::cycle(4), 0),
        ("K4", graphs::complete(4), 0),
        ("K5", graphs::complete(5), 1),
        ("K3,3", graphs::complete_bipartite(3, 3), 1),
        ("K6", graphs::complete(6), 3),
        ("Petersen", graphs::petersen(), 2),
    ];
    for (name, r, want) in cases {
        let start = Instant::now();
        assert_eq!(solve(&graph(&r), &SolveOptions::default()), want, "{name}");
        assert!(start.elapsed() < Duration::from_secs(60), "{name} too slow");
    }
}

#[test]
fn matches_oracle_on_small_connected_graphs() {
    for r in graphs::connected_simple_graphs(6) {
        let v = solve(&graph(&r), &SolveOptions::default());
        assert_eq!(oracle::crossing_number(r.0, &r.1, &[], v), Some(v), "{r:?}");
    }
}

#[test]
fn matches_oracle_on_random_multigraphs() {
    let mut rng = graphs::XorShift::new(2024);
    for _ in 0..50 {
        let r = graphs::random_multigraph(&mut rng, 8, 14);
        let v = solve(&graph(&r), &SolveOptions::default());
        assert_eq!(oracle::crossing_number(r.0, &r.1, &[], v), Some(v), "{r:?}");
    }
}

#[test]
fn uncrossable_edges_match_oracle() {
    let mut rng = graphs::XorShift::new(99);
    for _ in 0..30 {
        let r = graphs::random_multigraph(&mut rng, 7, 12);
        let mask: Vec<bool> = (0..r.1.len()).map(|_| rng.below(4) == 0).collect();
        let opts = SolveOptions {
            uncrossable: (0..mask.len()).filter(|&e| mask[e]).collect(),
            ..SolveOptions::default()
        };
        let g = graph(&r);
        match crossing_number(&g, &opts).unwrap() {
            Verdict::Optimal(s) => {
                assert!(verify_witness(&g, &s.witness, &opts));
                let v = s.witness.crossing_count();
                assert_eq!(
                    oracle::crossing_number(r.0, &r.1, &mask, v),
                    Some(v),
                    "{r:?}"
                );
            }
            Verdict::Infeasible => {
                assert_eq!(oracle::crossing_number(r.0, &r.1, &mask, 6), None, "{r:?}");
            }
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn tile_examples() {
    let get = |name: &str| {
        let all = tiles::test_tiles();
        tile(&all.iter().find(|(n, _)| *n == name).unwrap().1)
    };
    let opts = SolveOptions::default();
    let single = get("single-vertex");
    for n in 1..=5 {
        assert_eq!(c_n(&single, n, &opts).unwrap().value(), Some(0));
    }
    assert_eq!(t_n(&single, 1, &opts).unwrap().value(), Some(0));
    let path = get("vertical-path-3");
    for n in 3..=5 {
        assert_eq!(c_n(&path, n, &opts).unwrap().value(), Some(0));
    }
    assert_eq!(t_n(&path, 2, &opts).unwrap().value(), Some(0));
    let x = get("crossing-x");
    assert_eq!(c_n(&x, 1, &opts).unwrap().value(), Some(0));
    assert_eq!(t_n(&x, 1, &opts).unwrap().value(), Some(1));
}

/// `c_n <= t_n`, `c_n <= n M(T)` and `t_(a+b) <= t_a + t_b` for every value
/// the solver settles.
#[test]
fn inequalities_on_test_tiles() {
    let opts = SolveOptions {
        budget: 2_000_000,
        ..SolveOptions::default()
    };
    for (name, r) in tiles::test_tiles() {
        let t = tile(&r);
        let mut tn = vec![None; 5];
        for n in 1..=4 {
            let c = c_n(&t, n, &opts).unwrap().value();
            tn[n] = t_n(&t, n, &opts).unwrap().value();
            if let (Some(c), Some(tv)) = (c, tn[n]) {
                assert!(c <= tv, "{name} n={n}: c={c} t={tv}");
            }
            if let Some(c) = c {
                assert!(c as u64 <= n as u64 * t.big_m(), "{name} n={n}");
            }
        }
        for a in 1..=4 {
            for b in 1..=4 - a {
                if let (Some(x), Some(y), Some(z)) = (tn[a], tn[b], tn[a + b]) {
                    assert!(z <= x + y, "{name}: t_{} > t_{a} + t_{b}", a + b);
                }
            }
        }
    }
}

/// The wheel frame against the oracle's own disk encoding (hub plus
/// subdivided rim) for small tiles.
#[test]
fn frame_matches_disk_oracle() {
    for (name, r) in tiles::test_tiles()
        .into_iter()
        .chain(tiles::reduction_tiles())
    {
        if r.a.len() > 2 || r.edges.len() > 6 {
            continue;
        }
        let t = tile(&r);
        let v = t_n(&t, 1, &SolveOptions::default())
            .unwrap()
            .value()
            .unwrap();
        assert_eq!(r.tile_drawing_number(1, v), Some(v), "{name}");
    }
}

#[test]
fn repeated_solves_agree() {
    let g = graph(&graphs::petersen());
    let opts = SolveOptions::default();
    assert_eq!(crossing_number(&g, &opts), crossing_number(&g, &opts));
}

fn small_multigraph() -> impl Strategy<Value = (MultiGraph, Vec<bool>)> {
    (3usize..=6).prop_flat_map(|n| {
        prop::collection::vec(((0..n, 0..n), any::<bool>()), 0..=11).prop_map(move |es| {
            let g = MultiGraph::from_edges(n, es.iter().map(|p| p.0)).unwrap();
            (g, es.iter().map(|p| p.1).collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weighted_value_is_sandwiched(
        (g, internal) in small_multigraph(),
        num in 0i64..=4,
        den in 1i64..=4,
    ) {
        let beta = BigRational::new(num.into(), den.into());
        let w = CrossingWeights::new(beta.clone()).unwrap();
        let plain = crossing_number(&g, &SolveOptions::default()).unwrap();
        let cr = plain.solution().unwrap();
        let opts = SolveOptions {
            weights: Some(w.clone()),
            internal: Some(internal.clone()),
            max_k: 40,
            ..SolveOptions::default()
        };
        let weighted = crossing_number(&g, &opts).unwrap();
        let best = weighted.solution().unwrap();
        prop_assert!(verify_witness(&g, &best.witness, &opts));
        prop_assert_eq!(&crn_beta(&best.witness, &internal, &w).unwrap(), &best.value);
        let count = BigRational::from_integer(cr.witness.crossing_count().into());
        let one = BigRational::from_integer(1.into());
        let two = BigRational::from_integer(2.into());
        prop_assert!(count <= best.value);
        prop_assert!(best.value <= (one + two * beta) * count.clone());
        prop_assert!(crn_beta(&cr.witness, &internal, &w).unwrap() >= best.value);
    }
}
