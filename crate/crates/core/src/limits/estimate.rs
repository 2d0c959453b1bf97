use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{theorem_n, LimitsError};
use crate::crossing::{c_n, t_n, SolveOptions, Verdict};
use crate::reduce::limit_decomposition;
use crate::tile::Tile;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EstimateRow {
    pub n: usize,
    /// `None` when the time limit was reached before this solve.
    pub c: Option<Verdict>,
    pub t: Option<Verdict>,
}

impl EstimateRow {
    pub fn c_value(&self) -> Option<usize> {
        self.c.as_ref().and_then(Verdict::value)
    }

    pub fn t_value(&self) -> Option<usize> {
        self.t.as_ref().and_then(Verdict::value)
    }
}

/// `c(T) >= c_n/n - ε` holds once `n >= N(ε)`; `binding` says whether it
/// does for this `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCandidate {
    pub n: usize,
    pub epsilon: BigRational,
    pub value: BigRational,
    pub required_n: BigInt,
    pub binding: bool,
}

/// Upper bound through the components `T_1, ..., T_r` of `T_0^m`:
/// `c(T) = (c(T_1) + ... + c(T_r)) / m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentBound {
    pub m: usize,
    /// Best `t_n(T_i)/n` per component, if any was solved.
    pub uppers: Vec<Option<BigRational>>,
    pub upper: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub rows: Vec<EstimateRow>,
    /// `min t_n/n` over solved `n` (and the component bound, when smaller).
    pub certified_upper: Option<BigRational>,
    /// `0`, raised by binding lower candidates.
    pub certified_lower: BigRational,
    pub lower_candidates: Vec<LowerCandidate>,
    pub components: Option<ComponentBound>,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// `c(T)` when the certified bounds meet.
    pub fn exact(&self) -> Option<&BigRational> {
        self.certified_upper
            .as_ref()
            .filter(|u| **u == self.certified_lower)
    }
}

/// Solves `c_n` and `t_n` for `n = 1..=n_max` and turns them into bounds.
///
/// Any tile drawing of `T^n` repeated `a` times draws `cyc(T^(an))`, so
/// `c(T) <= t_n/n` for every `n`. Lower bounds need `n >= N(ε)` and are only
/// reported as candidates otherwise. Solves start only before `time_limit`
/// has elapsed; later rows are left empty.
pub fn estimate(
    t: &Tile,
    n_max: usize,
    opts: &SolveOptions,
    time_limit: Option<Duration>,
) -> Result<BoundReport, LimitsError> {
    if n_max == 0 {
        return Err(LimitsError::ZeroNMax);
    }
    let start = Instant::now();
    let in_time = || time_limit.is_none_or(|l| start.elapsed() < l);
    let mut notes = Vec::new();

    let mut rows = Vec::new();
    for n in 1..=n_max {
        let c = if in_time() {
            Some(c_n(t, n, opts)?)
        } else {
            None
        };
        let tv = if in_time() {
            Some(t_n(t, n, opts)?)
        } else {
            None
        };
        rows.push(EstimateRow { n, c, t: tv });
    }
    for row in &rows {
        for (name, v) in [("c", &row.c), ("t", &row.t)] {
            match v {
                None => notes.push(format!("{name}_{}: skipped, time limit reached", row.n)),
                Some(Verdict::Optimal(_)) => {}
                Some(other) => notes.push(format!("{name}_{}: {}", row.n, describe(other))),
            }
        }
    }
    let mut certified_upper = best_ratio(&rows);

    let one = BigRational::one();
    let mut lower_candidates = Vec::new();
    let mut certified_lower = BigRational::zero();
    match theorem_n(t, &one) {
        Ok(ledger) => {
            for row in &rows {
                let Some(c) = row.c_value() else { continue };
                let value = ratio(c, row.n) - &one;
                let binding = BigInt::from(row.n) >= ledger.n;
                if binding && value > certified_lower {
                    certified_lower = value.clone();
                }
                lower_candidates.push(LowerCandidate {
                    n: row.n,
                    epsilon: one.clone(),
                    value,
                    required_n: ledger.n.clone(),
                    binding,
                });
            }
        }
        Err(LimitsError::NotReduced(what)) => {
            notes.push(format!("no lower candidates: tile is not {what}"));
        }
        Err(e) => return Err(e),
    }

    let mut components = None;
    match limit_decomposition(t) {
        Ok(d) if d.m > 1 || d.subtiles.len() > 1 || !d.weak.steps.is_empty() => {
            let mut uppers = Vec::new();
            for sub in &d.subtiles {
                let mut sub_rows = Vec::new();
                for n in 1..=n_max {
                    if !in_time() {
                        break;
                    }
                    sub_rows.push(EstimateRow {
                        n,
                        c: None,
                        t: Some(t_n(sub, n, opts)?),
                    });
                }
                uppers.push(best_ratio(&sub_rows));
            }
            let upper = uppers
                .iter()
                .try_fold(BigRational::zero(), |acc, u| u.as_ref().map(|u| acc + u))
                .map(|sum| sum / ratio(d.m, 1));
            if let Some(u) = &upper {
                if certified_upper.as_ref().is_none_or(|c| u < c) {
                    certified_upper = Some(u.clone());
                }
            }
            components = Some(ComponentBound {
                m: d.m,
                uppers,
                upper,
            });
        }
        Ok(_) => {}
        Err(e) => notes.push(format!("no component bound: {e}")),
    }

    Ok(BoundReport {
        rows,
        certified_upper,
        certified_lower,
        lower_candidates,
        components,
        notes,
    })
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn best_ratio(rows: &[EstimateRow]) -> Option<BigRational> {
    rows.iter()
        .filter_map(|r| r.t_value().map(|v| ratio(v, r.n)))
        .min()
}

fn describe(v: &Verdict) -> String {
    match v {
        Verdict::Optimal(s) => format!("optimal {}", s.value),
        Verdict::AboveCeiling { max_k } => format!("above ceiling {max_k}"),
        Verdict::BudgetExhausted { nodes, lower_bound } => {
            format!("budget exhausted after {nodes} nodes, at least {lower_bound}")
        }
        Verdict::Infeasible => "no drawing avoids the uncrossable edges".into(),
    }
}
