#![allow(dead_code)]

use std::path::{Path, PathBuf};

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tilecross").chain(args.iter().copied());
    let code = tilecross_cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

pub fn corpus(kind: &str) -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(kind);
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
}

pub fn corpus_file(kind: &str, stem: &str) -> String {
    corpus(kind)
        .into_iter()
        .find(|p| p.file_stem().unwrap() == stem)
        .unwrap_or_else(|| panic!("no corpus file {stem}"))
        .display()
        .to_string()
}

/// A fresh path under the test scratch directory.
pub fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    let _ = std::fs::remove_file(&p);
    p
}

/// Every command line exercised on a tile file.
pub fn tile_commands(tile: &str) -> Vec<Vec<String>> {
    let lines: [&[&str]; 10] = [
        &["validate", tile],
        &["compose", tile, tile],
        &["power", tile, "-n", "2"],
        &["cyc", tile, "-n", "2"],
        &["reduce", tile],
        &["decompose", tile],
        &["tile-cr", tile, "-n", "2"],
        &["tile-cr", tile, "-n", "1", "--beta", "1/2"],
        &["constants", tile, "--eps", "1/2", "--alpha", "1"],
        &["estimate", tile, "--max-n", "2"],
    ];
    lines
        .iter()
        .map(|l| l.iter().map(|s| s.to_string()).collect())
        .collect()
}

pub fn graph_commands(graph: &str) -> Vec<Vec<String>> {
    let lines: [&[&str]; 3] = [
        &["validate", graph],
        &["cr", graph],
        &["cr", graph, "--max-k", "1", "--beta", "1"],
    ];
    lines
        .iter()
        .map(|l| l.iter().map(|s| s.to_string()).collect())
        .collect()
}

/// Runs `args --out <scratch>` and returns the exit code and file contents.
pub fn run_to_file(args: &[String], name: &str) -> (i32, Option<Vec<u8>>) {
    let out = scratch(name);
    let mut argv: Vec<&str> = args.iter().map(String::as_str).collect();
    let out_str = out.display().to_string();
    argv.extend(["--out", &out_str]);
    let r = run(&argv);
    (r.code, std::fs::read(&out).ok())
}

/// Runs every corpus command twice and returns the ones whose exit code or
/// `--out` bytes differ.
pub fn nondeterministic_commands() -> Vec<String> {
    let mut jobs = Vec::new();
    for p in corpus("tiles") {
        jobs.extend(tile_commands(&p.display().to_string()));
    }
    for p in corpus("graphs") {
        jobs.extend(graph_commands(&p.display().to_string()));
    }
    let mut bad = Vec::new();
    for (i, job) in jobs.iter().enumerate() {
        let first = run_to_file(job, &format!("det-{i}-a"));
        let second = run_to_file(job, &format!("det-{i}-b"));
        if first != second {
            bad.push(job.join(" "));
        }
    }
    bad
}
