//! JSON and text renderings of library results.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};
use tilecross::crossing::{Planarization, Verdict};
use tilecross::limits::{BoundReport, ConstantLedger, LboundConstants};
use tilecross::multigraph::{PathSystem, Walk};
use tilecross::reduce::{Decomposition, WeakLinkResult};

use crate::io::tile_value;

/// Exact value as a string: `"3"`, `"111/2"`.
pub fn rational(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn integer(i: &BigInt) -> Value {
    Value::String(i.to_string())
}

/// Parses `3`, `-2`, `1/32` or `0.125` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("`{s}` is not a number (use forms like 1, 0.25 or 1/32)");
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(format!("`{s}` has a zero denominator"));
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole
            .chars()
            .chain(frac.chars())
            .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let r = BigRational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

fn value_json(v: &BigRational) -> Value {
    if v.is_integer() && !v.is_negative() {
        if let Ok(x) = u64::try_from(v.to_integer()) {
            return json!(x);
        }
    }
    rational(v)
}

pub fn witness(p: &Planarization, value: &BigRational) -> Value {
    let order: Map<String, Value> = p
        .order()
        .iter()
        .enumerate()
        .filter(|(_, o)| !o.is_empty())
        .map(|(e, o)| (e.to_string(), json!(o)))
        .collect();
    json!({
        "value": value_json(value),
        "crossings": p.crossings(),
        "order": order,
    })
}

pub fn verdict(v: &Verdict) -> Value {
    match v {
        Verdict::Optimal(s) => {
            let mut w = witness(&s.witness, &s.value);
            w["verdict"] = json!("optimal");
            w
        }
        Verdict::AboveCeiling { max_k } => json!({"verdict": "above_ceiling", "max_k": max_k}),
        Verdict::BudgetExhausted { nodes, lower_bound } => json!({
            "verdict": "budget_exhausted",
            "nodes": nodes,
            "lower_bound": rational(lower_bound),
        }),
        Verdict::Infeasible => json!({"verdict": "infeasible"}),
    }
}

/// `1`, `> 1`, `>= 3 (budget)`, `infeasible`.
pub fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Optimal(s) => s.value.to_string(),
        Verdict::AboveCeiling { max_k } => format!("> {max_k}"),
        Verdict::BudgetExhausted { nodes, lower_bound } => {
            format!(">= {lower_bound} (budget of {nodes} nodes exhausted)")
        }
        Verdict::Infeasible => "infeasible (uncrossable edges cannot be avoided)".into(),
    }
}

fn walk(w: &Walk) -> Value {
    json!({"vertices": w.vertices, "edges": w.edges})
}

fn paths(p: &PathSystem) -> Value {
    Value::Array(p.paths.iter().map(walk).collect())
}

pub fn weak_link(w: &WeakLinkResult, m: usize) -> Value {
    let steps: Vec<Value> = w
        .steps
        .iter()
        .map(|s| json!({"width_before": s.width_before, "cut": s.cut, "u": s.u, "v": s.v}))
        .collect();
    json!({
        "tile": tile_value(&w.tile),
        "permutation": w.permutation,
        "linking_power": m,
        "paths": paths(&w.paths),
        "steps": steps,
    })
}

pub fn decomposition(d: &Decomposition) -> Value {
    let cycles: Vec<Value> = d
        .cycles
        .iter()
        .map(|c| json!({"pieces": c.pieces, "tile": tile_value(&c.tile)}))
        .collect();
    json!({
        "weakly_linked": tile_value(&d.weak.tile),
        "m": d.m,
        "subtiles": d.subtiles.iter().map(tile_value).collect::<Vec<_>>(),
        "pieces": d.pieces.iter().map(tile_value).collect::<Vec<_>>(),
        "piece_permutation": d.piece_permutation,
        "cycles": cycles,
    })
}

pub fn ledger(l: &ConstantLedger) -> Value {
    let mut map = Map::new();
    for (name, value) in l.entries() {
        map.insert(name.to_string(), Value::String(value));
    }
    Value::Object(map)
}

pub fn lbound(l: &LboundConstants) -> Value {
    json!({
        "beta": rational(&l.beta),
        "c": rational(&l.c),
        "Q0": rational(&l.q0),
        "n0": integer(&l.n0),
        "Q": rational(&l.q),
        "n1": integer(&l.n1),
    })
}

fn opt_rational(r: Option<&BigRational>) -> Value {
    r.map_or(Value::Null, rational)
}

pub fn report(r: &BoundReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "n": row.n,
                "c_n": row.c.as_ref().map_or(Value::Null, verdict),
                "t_n": row.t.as_ref().map_or(Value::Null, verdict),
            })
        })
        .collect();
    let lower: Vec<Value> = r
        .lower_candidates
        .iter()
        .map(|c| {
            json!({
                "n": c.n,
                "epsilon": rational(&c.epsilon),
                "value": rational(&c.value),
                "valid_when_n_at_least": integer(&c.required_n),
                "binding": c.binding,
            })
        })
        .collect();
    let components = r.components.as_ref().map_or(Value::Null, |c| {
        json!({
            "m": c.m,
            "uppers": c.uppers.iter().map(|u| opt_rational(u.as_ref())).collect::<Vec<_>>(),
            "upper": opt_rational(c.upper.as_ref()),
        })
    });
    json!({
        "rows": rows,
        "certified_upper": opt_rational(r.certified_upper.as_ref()),
        "certified_lower": rational(&r.certified_lower),
        "exact": opt_rational(r.exact()),
        "lower_candidates": lower,
        "components": components,
        "notes": r.notes,
    })
}

/// Pretty JSON with a trailing newline, the form every `--out` file takes.
pub fn to_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/32").unwrap(), r(1, 32));
        assert_eq!(parse_rational("0.125").unwrap(), r(1, 8));
        assert_eq!(parse_rational("2").unwrap(), r(2, 1));
        assert_eq!(parse_rational("-0.5").unwrap(), r(-1, 2));
        assert_eq!(parse_rational(".5").unwrap(), r(1, 2));
        for bad in ["", "x", "1/0", "1e-3", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }
}
