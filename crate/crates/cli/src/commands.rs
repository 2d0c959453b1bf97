use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use num_rational::BigRational;
use tilecross::crossing::{c_n, crossing_number, t_n, CrossingWeights, SolveOptions, Verdict};
use tilecross::limits::{
    estimate, lbound_constants, lemma_upper_constants, nearc_overhead, theorem_n,
};
use tilecross::reduce::{limit_decomposition, linking_power, weakly_link};
use tilecross::tile::Tile;

use crate::io::{graph_to_string, parse_graph, parse_tile, tile_to_string};
use crate::render::{self, parse_rational, to_text};
use crate::{Command, Output, Solver, EXIT_BOUNDED, EXIT_OK};

pub(crate) struct Done {
    pub summary: String,
    pub file: Option<(PathBuf, String)>,
    pub code: i32,
}

impl Done {
    fn ok(summary: String, output: &Output, text: String) -> Done {
        Done {
            summary,
            file: output.out.clone().map(|p| (p, text)),
            code: EXIT_OK,
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_tile(path: &Path) -> Result<Tile, String> {
    parse_tile(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn positive(name: &str, n: usize) -> Result<usize, String> {
    if n == 0 {
        Err(format!("{name} must be at least 1"))
    } else {
        Ok(n)
    }
}

fn solve_options(s: &Solver, uncrossable: &[usize]) -> Result<SolveOptions, String> {
    let weights = match &s.beta {
        Some(b) => Some(CrossingWeights::new(parse_rational(b)?).map_err(|e| e.to_string())?),
        None => None,
    };
    Ok(SolveOptions {
        uncrossable: uncrossable.iter().copied().collect(),
        weights,
        internal: None,
        max_k: s.max_k,
        budget: s.budget,
    })
}

fn tile_summary(t: &Tile) -> String {
    format!(
        "tile: width {}, |V| {}, |E| {}\n",
        t.width(),
        t.graph().vertex_count(),
        t.graph().edge_count()
    )
}

pub(crate) fn dispatch(cmd: Command) -> Result<Done, String> {
    match cmd {
        Command::Validate { file, output } => {
            let text = read(&file)?;
            let is_tile = serde_json::from_str::<serde_json::Value>(&text)
                .map(|v| v.get("A").is_some() || v.get("B").is_some())
                .unwrap_or(true);
            let located = |e: crate::ParseError| format!("{}: {e}", file.display());
            if is_tile {
                let t = parse_tile(&text).map_err(located)?;
                Ok(Done::ok(tile_summary(&t), &output, tile_to_string(&t)))
            } else {
                let g = parse_graph(&text).map_err(located)?;
                let summary = format!(
                    "graph: |V| {}, |E| {}{}\n",
                    g.graph.vertex_count(),
                    g.graph.edge_count(),
                    if g.internal.is_some() {
                        ", labelled"
                    } else {
                        ""
                    }
                );
                Ok(Done::ok(
                    summary,
                    &output,
                    graph_to_string(&g.graph, g.internal.as_deref()),
                ))
            }
        }
        Command::Compose {
            left,
            right,
            output,
        } => {
            let t = load_tile(&left)?
                .compose(&load_tile(&right)?)
                .map_err(|e| e.to_string())?;
            Ok(Done::ok(tile_summary(&t), &output, tile_to_string(&t)))
        }
        Command::Power { tile, n, output } => {
            let t = load_tile(&tile)?
                .power(positive("-n", n)?)
                .map_err(|e| e.to_string())?;
            Ok(Done::ok(tile_summary(&t), &output, tile_to_string(&t)))
        }
        Command::Cyc { tile, n, output } => {
            let c = load_tile(&tile)?
                .cyc(positive("-n", n)?)
                .map_err(|e| e.to_string())?;
            let mask = c.internal_mask();
            let internal = mask.iter().filter(|&&x| x).count();
            let summary = format!(
                "cyc: {} copies, |V| {}, |E| {} ({internal} internal, {} external)\n",
                c.copies(),
                c.graph().vertex_count(),
                c.graph().edge_count(),
                mask.len() - internal
            );
            Ok(Done::ok(
                summary,
                &output,
                graph_to_string(c.graph(), Some(&mask)),
            ))
        }
        Command::Reduce { tile, output } => {
            let t = load_tile(&tile)?;
            let w = weakly_link(&t).map_err(|e| e.to_string())?;
            let m = linking_power(&w);
            let summary = format!(
                "weakly linked tile: width {} (from {}), {} cut steps\npermutation: {:?}\nlinking power m = {m}\n",
                w.tile.width(),
                t.width(),
                w.steps.len(),
                w.permutation
            );
            Ok(Done::ok(
                summary,
                &output,
                to_text(&render::weak_link(&w, m)),
            ))
        }
        Command::Decompose { tile, output } => {
            let d = limit_decomposition(&load_tile(&tile)?).map_err(|e| e.to_string())?;
            let mut summary = format!(
                "m = {}, {} components of T0^m, {} pieces, permutation {:?}\n",
                d.m,
                d.subtiles.len(),
                d.pieces.len(),
                d.piece_permutation
            );
            for c in &d.cycles {
                let _ = writeln!(
                    summary,
                    "cycle {:?}: S has width {}, |V| {}, |E| {}",
                    c.pieces,
                    c.tile.width(),
                    c.tile.graph().vertex_count(),
                    c.tile.graph().edge_count()
                );
            }
            Ok(Done::ok(
                summary,
                &output,
                to_text(&render::decomposition(&d)),
            ))
        }
        Command::Cr {
            graph,
            uncrossable,
            solver,
            output,
        } => {
            let text = read(&graph)?;
            let g = parse_graph(&text).map_err(|e| format!("{}: {e}", graph.display()))?;
            let mut opts = solve_options(&solver, &uncrossable)?;
            opts.internal = g.internal.clone();
            let v = crossing_number(&g.graph, &opts).map_err(|e| e.to_string())?;
            let summary = format!("cr = {}\n", render::verdict_text(&v));
            Ok(bounded(
                Done::ok(summary, &output, to_text(&render::verdict(&v))),
                [&v],
            ))
        }
        Command::TileCr {
            tile,
            n,
            solver,
            output,
        } => {
            let t = load_tile(&tile)?;
            let n = positive("-n", n)?;
            let opts = solve_options(&solver, &[])?;
            let c = c_n(&t, n, &opts).map_err(|e| e.to_string())?;
            let tv = t_n(&t, n, &opts).map_err(|e| e.to_string())?;
            let summary = format!(
                "c_{n} = {}\nt_{n} = {}\n",
                render::verdict_text(&c),
                render::verdict_text(&tv)
            );
            let json = serde_json::json!({
                "n": n,
                "c_n": render::verdict(&c),
                "t_n": render::verdict(&tv),
            });
            Ok(bounded(
                Done::ok(summary, &output, to_text(&json)),
                [&c, &tv],
            ))
        }
        Command::Constants {
            tile,
            eps,
            alpha,
            s,
            output,
        } => {
            let t = load_tile(&tile)?;
            let eps = parse_rational(&eps)?;
            let alpha = alpha.map(|a| parse_rational(&a)).transpose()?;
            constants(&t, &eps, alpha.as_ref(), s, &output)
        }
        Command::Estimate {
            tile,
            max_n,
            budget_seconds,
            solver,
            output,
        } => {
            let t = load_tile(&tile)?;
            let opts = solve_options(&solver, &[])?;
            let limit = match budget_seconds {
                Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
                Some(s) => return Err(format!("--budget-seconds must be positive, got {s}")),
                None => None,
            };
            let r = estimate(&t, positive("--max-n", max_n)?, &opts, limit)
                .map_err(|e| e.to_string())?;
            let mut summary = String::from(" n | c_n | t_n\n");
            for row in &r.rows {
                let cell =
                    |v: &Option<Verdict>| v.as_ref().map_or("-".into(), render::verdict_text);
                let _ = writeln!(
                    summary,
                    "{:>2} | {} | {}",
                    row.n,
                    cell(&row.c),
                    cell(&row.t)
                );
            }
            let show = |x: Option<&BigRational>| x.map_or("none".into(), |x| x.to_string());
            let _ = writeln!(
                summary,
                "certified upper: c(T) <= {}",
                show(r.certified_upper.as_ref())
            );
            let _ = writeln!(summary, "certified lower: c(T) >= {}", r.certified_lower);
            if let Some(x) = r.exact() {
                let _ = writeln!(summary, "c(T) = {x} exactly");
            }
            for note in &r.notes {
                let _ = writeln!(summary, "note: {note}");
            }
            let unsettled = r.rows.iter().any(|row| {
                [&row.c, &row.t]
                    .iter()
                    .any(|v| !matches!(v, Some(Verdict::Optimal(_))))
            });
            let mut done = Done::ok(summary, &output, to_text(&render::report(&r)));
            if unsettled {
                done.code = EXIT_BOUNDED;
            }
            Ok(done)
        }
    }
}

fn bounded<const N: usize>(mut done: Done, verdicts: [&Verdict; N]) -> Done {
    if verdicts.iter().any(|v| {
        matches!(
            v,
            Verdict::AboveCeiling { .. } | Verdict::BudgetExhausted { .. }
        )
    }) {
        done.code = EXIT_BOUNDED;
    }
    done
}

fn constants(
    t: &Tile,
    eps: &BigRational,
    alpha: Option<&BigRational>,
    s: u64,
    output: &Output,
) -> Result<Done, String> {
    let (n2, a0) = lemma_upper_constants(t, eps).map_err(|e| e.to_string())?;
    let overhead = nearc_overhead(t, s).map_err(|e| e.to_string())?;
    let ledger = theorem_n(t, eps).map_err(|e| e.to_string())?;
    let mut summary = format!("lemma (upper), eps = {eps}: n2 = {n2}, a0 = {a0}\n");
    let _ = writeln!(summary, "nearc overhead, s = {s}: {overhead}");
    let mut json = serde_json::json!({
        "lemma_upper": {"epsilon": render::rational(eps), "n2": render::rational(&n2), "a0": render::rational(&a0)},
        "nearc": {"s": s, "overhead": render::rational(&overhead)},
        "ledger": render::ledger(&ledger),
    });
    if let Some(alpha) = alpha {
        let l = lbound_constants(t, eps, alpha).map_err(|e| e.to_string())?;
        let _ = writeln!(
            summary,
            "lbound, eps = {eps}, alpha = {alpha}: beta = {}, c = {}, Q0 = {}, n0 = {}, Q = {}, n1 = {}",
            l.beta, l.c, l.q0, l.n0, l.q, l.n1
        );
        let mut lb = render::lbound(&l);
        lb["alpha"] = render::rational(alpha);
        json["lbound"] = lb;
    }
    let _ = writeln!(summary, "ledger:");
    for (name, value) in ledger.entries() {
        let _ = writeln!(summary, "  {name:<11} {value}");
    }
    Ok(Done::ok(summary, output, to_text(&json)))
}
