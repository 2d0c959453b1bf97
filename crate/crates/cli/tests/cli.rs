mod common;

use common::{corpus, corpus_file, run, run_to_file, scratch};
use tilecross_cli::{EXIT_BOUNDED, EXIT_INVALID, EXIT_OK};

#[test]
fn validate_echoes_shape() {
    let r = run(&["validate", &corpus_file("tiles", "crossing-x")]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout, "tile: width 2, |V| 4, |E| 2\n");
    let r = run(&["validate", &corpus_file("graphs", "petersen")]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout, "graph: |V| 10, |E| 15\n");
}

#[test]
fn k5_with_ceiling_two_is_settled() {
    let out = scratch("k5.json");
    let r = run(&[
        "cr",
        &corpus_file("graphs", "k5"),
        "--max-k",
        "2",
        "--out",
        &out.display().to_string(),
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout, "cr = 1\n");
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(out).unwrap()).unwrap();
    assert_eq!(json["value"], 1);
    assert_eq!(json["verdict"], "optimal");
    assert_eq!(json["crossings"].as_array().unwrap().len(), 1);
}

#[test]
fn ceiling_below_value_is_bounded() {
    let out = scratch("k6.json");
    let r = run(&[
        "cr",
        &corpus_file("graphs", "k6"),
        "--max-k",
        "1",
        "--out",
        &out.display().to_string(),
    ]);
    assert_eq!(r.code, EXIT_BOUNDED);
    assert_eq!(r.stdout, "cr = > 1\n");
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(out).unwrap()).unwrap();
    assert_eq!(json["verdict"], "above_ceiling");
}

#[test]
fn budget_exhaustion_is_bounded() {
    let r = run(&["cr", &corpus_file("graphs", "k6"), "--budget", "3"]);
    assert_eq!(r.code, EXIT_BOUNDED);
    assert!(r.stdout.starts_with("cr = >="), "{}", r.stdout);
}

#[test]
fn invalid_input_writes_nothing() {
    let bad = scratch("bad.tile");
    std::fs::write(
        &bad,
        "{\"vertices\":1,\n \"edges\":[],\n \"A\":[0, 5],\n \"B\":[0]}\n",
    )
    .unwrap();
    let out = scratch("bad.out");
    let r = run(&[
        "validate",
        &bad.display().to_string(),
        "--out",
        &out.display().to_string(),
    ]);
    assert_eq!(r.code, EXIT_INVALID);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    assert!(r.stderr.contains("A[1]"), "{}", r.stderr);
    assert!(!out.exists());

    for args in [
        vec!["cr", "/nonexistent.graph"],
        vec!["power", &corpus_file("tiles", "edge"), "-n", "0"],
        vec!["constants", &corpus_file("tiles", "edge"), "--eps", "0"],
        vec!["constants", &corpus_file("tiles", "swap"), "--eps", "1"],
        vec!["cr", &corpus_file("graphs", "k5"), "--beta", "-1"],
        vec!["cr", &corpus_file("graphs", "k5"), "--frobnicate"],
        vec![
            "estimate",
            &corpus_file("tiles", "edge"),
            "--max-n",
            "2",
            "--budget-seconds",
            "-1",
        ],
    ] {
        let r = run(&args);
        assert_eq!(r.code, EXIT_INVALID, "{args:?}");
        assert!(r.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let r = run(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("estimate"));
}

#[test]
fn corpus_round_trips() {
    let tiles = corpus("tiles");
    let graphs = corpus("graphs");
    assert!(tiles.len() >= 10 && graphs.len() >= 10);
    for (i, p) in tiles.iter().chain(&graphs).enumerate() {
        let (code, out) = run_to_file(
            &["validate".into(), p.display().to_string()],
            &format!("rt-{i}"),
        );
        assert_eq!(code, EXIT_OK, "{}", p.display());
        assert_eq!(out.unwrap(), std::fs::read(p).unwrap(), "{}", p.display());
    }
}

#[test]
fn tile_commands_report() {
    let x = corpus_file("tiles", "crossing-x");
    let r = run(&["tile-cr", &x, "-n", "1"]);
    assert_eq!((r.code, r.stdout.as_str()), (EXIT_OK, "c_1 = 0\nt_1 = 1\n"));

    let r = run(&[
        "constants",
        &corpus_file("tiles", "edge"),
        "--eps",
        "1",
        "--alpha",
        "1",
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert!(
        r.stdout.contains("beta = 1/8, c = 8, Q0 = 111/2, n0 = 111"),
        "{}",
        r.stdout
    );
    assert!(r.stdout.contains("N           65785280544"), "{}", r.stdout);

    let out = scratch("estimate.json");
    let r = run(&[
        "estimate",
        &corpus_file("tiles", "vertical-path-3"),
        "--max-n",
        "3",
        "--out",
        &out.display().to_string(),
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert!(
        r.stdout.contains("certified upper: c(T) <= 0"),
        "{}",
        r.stdout
    );
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(out).unwrap()).unwrap();
    assert_eq!(json["certified_upper"], "0");

    let r = run(&["reduce", &corpus_file("tiles", "dangling")]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("width 2 (from 3)"), "{}", r.stdout);

    let r = run(&["cyc", &corpus_file("tiles", "edge"), "-n", "3"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(
        r.stdout,
        "cyc: 3 copies, |V| 6, |E| 6 (3 internal, 3 external)\n"
    );
}

#[test]
fn outputs_are_deterministic() {
    let bad = common::nondeterministic_commands();
    assert!(bad.is_empty(), "{bad:?}");
}
