//! Exact crossing numbers at desk scale: plain, with uncrossable edges (tile
//! drawings through the wheel frame) and weighted by internal/external edge
//! classes.

mod search;

pub use search::crossing_number;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::multigraph::{is_planar, EdgeId, MultiGraph};
use crate::tile::{Tile, TileError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossingError {
    #[error("edge {edge} is out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: EdgeId, edge_count: usize },
    #[error("weights need an internal/external label for each of the {expected} edges, got {got}")]
    MissingLabels { expected: usize, got: usize },
    #[error("beta must be nonnegative, got {0}")]
    NegativeBeta(BigRational),
    #[error("beta {0} has a numerator or denominator too large for the solver")]
    BetaTooPrecise(BigRational),
    #[error("crossing {index} is not a pair of edges of the graph")]
    BadCrossing { index: usize },
    #[error("crossing order of edge {edge} does not list exactly its crossings")]
    BadOrder { edge: EdgeId },
    #[error(transparent)]
    Tile(#[from] TileError),
}

/// Crossings of a drawing, recorded combinatorially.
///
/// `crossings` holds unordered pairs `(e, f)` with `e < f`, sorted.
/// `order[e]` lists the indices of the crossings on `e` as met walking from
/// its first endpoint to its second. In `planarized`, crossing `c` is the
/// vertex `|V| + c`, and every edge is replaced by its segments in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarization {
    base: MultiGraph,
    crossings: Vec<(EdgeId, EdgeId)>,
    order: Vec<Vec<usize>>,
    planarized: MultiGraph,
}

impl Planarization {
    /// Checks that the pairs name edges of `base` and that `order` lists the
    /// crossings of each edge exactly once. Drawing invariants (no adjacent
    /// pairs, planarity, ...) are left to [`verify_witness`].
    pub fn new(
        base: MultiGraph,
        crossings: Vec<(EdgeId, EdgeId)>,
        order: Vec<Vec<usize>>,
    ) -> Result<Self, CrossingError> {
        let m = base.edge_count();
        if order.len() != m {
            return Err(CrossingError::BadOrder {
                edge: order.len().min(m),
            });
        }
        let mut expected: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (c, &(e, f)) in crossings.iter().enumerate() {
            if e >= m || f >= m {
                return Err(CrossingError::BadCrossing { index: c });
            }
            expected[e].push(c);
            if f != e {
                expected[f].push(c);
            }
        }
        for (e, want) in expected.iter().enumerate() {
            let mut got = order[e].clone();
            got.sort_unstable();
            if &got != want {
                return Err(CrossingError::BadOrder { edge: e });
            }
        }
        let n = base.vertex_count();
        let mut planarized = MultiGraph::new(n + crossings.len());
        for (e, &(u, v)) in base.edges().iter().enumerate() {
            let mut prev = u;
            for &c in &order[e] {
                planarized.add_edge(prev, n + c);
                prev = n + c;
            }
            planarized.add_edge(prev, v);
        }
        Ok(Planarization {
            base,
            crossings,
            order,
            planarized,
        })
    }

    pub fn base(&self) -> &MultiGraph {
        &self.base
    }

    pub fn crossings(&self) -> &[(EdgeId, EdgeId)] {
        &self.crossings
    }

    pub fn order(&self) -> &[Vec<usize>] {
        &self.order
    }

    pub fn planarized(&self) -> &MultiGraph {
        &self.planarized
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

/// Crossing weights `1 + 2β` (internal with internal), `1 + β` (internal
/// with external) and `1` (external with external).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingWeights {
    beta: BigRational,
}

impl CrossingWeights {
    pub fn new(beta: BigRational) -> Result<Self, CrossingError> {
        if beta.is_negative() {
            return Err(CrossingError::NegativeBeta(beta));
        }
        Ok(CrossingWeights { beta })
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }

    /// Weight of a crossing between edges with the given internal flags.
    pub fn weight(&self, e_internal: bool, f_internal: bool) -> BigRational {
        let internal = usize::from(e_internal) + usize::from(f_internal);
        BigRational::from_integer(1.into())
            + &self.beta * BigRational::from_integer(internal.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub uncrossable: BTreeSet<EdgeId>,
    /// When set, minimise total crossing weight instead of the count.
    pub weights: Option<CrossingWeights>,
    /// Per edge, whether it is internal. Required with `weights`.
    pub internal: Option<Vec<bool>>,
    /// Largest value (crossings, or total weight) searched for.
    pub max_k: usize,
    /// Largest number of search nodes expanded.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            uncrossable: BTreeSet::new(),
            weights: None,
            internal: None,
            max_k: 8,
            budget: 5_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Minimum number of crossings, or minimum total weight when weighted.
    pub value: BigRational,
    /// The witness with the lexicographically least crossing list among all
    /// optimal ones.
    pub witness: Planarization,
}

impl Solution {
    pub fn crossings(&self) -> usize {
        self.witness.crossing_count()
    }
}

/// Outcome of a search. Only `Optimal` carries a value; every other verdict
/// states what was proved instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Optimal(Solution),
    /// No drawing of value at most `max_k` exists.
    AboveCeiling {
        max_k: usize,
    },
    /// The node budget ran out; the value is at least `lower_bound`.
    BudgetExhausted {
        nodes: u64,
        lower_bound: BigRational,
    },
    /// No drawing avoids crossing the uncrossable edges.
    Infeasible,
}

impl Verdict {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            Verdict::Optimal(s) => Some(s),
            _ => None,
        }
    }

    /// Optimal value as an integer, when there is one and it is integral.
    pub fn value(&self) -> Option<usize> {
        let s = self.solution()?;
        if s.value.is_integer() {
            usize::try_from(s.value.to_integer()).ok()
        } else {
            None
        }
    }
}

/// `c_n(T)`: crossing number of `cyc(T^n)`. Internal/external labels are
/// taken from the closure when `opts.weights` is set.
pub fn c_n(t: &Tile, n: usize, opts: &SolveOptions) -> Result<Verdict, CrossingError> {
    let c = t.cyc(n)?;
    let mut opts = opts.clone();
    opts.internal = Some(c.internal_mask());
    crossing_number(c.graph(), &opts)
}

/// `t_n(T)`: fewest crossings in a tile drawing of `T^n`, computed on the
/// wheel frame with every frame edge uncrossable.
pub fn t_n(t: &Tile, n: usize, opts: &SolveOptions) -> Result<Verdict, CrossingError> {
    let f = t.frame(n)?;
    let mut opts = opts.clone();
    opts.uncrossable.extend(f.frame_edges());
    let mut internal: Vec<bool> = f.core_labels().iter().map(|l| l.is_internal()).collect();
    internal.resize(f.graph().edge_count(), false);
    opts.internal = Some(internal);
    crossing_number(f.graph(), &opts)
}

/// Total weight of the crossings of `p`.
pub fn crn_beta(
    p: &Planarization,
    internal: &[bool],
    w: &CrossingWeights,
) -> Result<BigRational, CrossingError> {
    let m = p.base.edge_count();
    if internal.len() != m {
        return Err(CrossingError::MissingLabels {
            expected: m,
            got: internal.len(),
        });
    }
    Ok(p.crossings
        .iter()
        .map(|&(e, f)| w.weight(internal[e], internal[f]))
        .fold(BigRational::zero(), |acc, x| acc + x))
}

/// Whether `p` is a planarization of `g` with every crossing pair made of
/// two distinct, non-adjacent, crossable edges, no pair crossing twice, and
/// a planar planarized graph.
pub fn verify_witness(g: &MultiGraph, p: &Planarization, opts: &SolveOptions) -> bool {
    if &p.base != g {
        return false;
    }
    let mut seen = BTreeSet::new();
    for &(e, f) in &p.crossings {
        if e == f
            || g.adjacent_edges(e, f)
            || opts.uncrossable.contains(&e)
            || opts.uncrossable.contains(&f)
            || !seen.insert((e.min(f), e.max(f)))
        {
            return false;
        }
    }
    // Rebuild from the raw data rather than trusting the stored graph.
    match Planarization::new(g.clone(), p.crossings.clone(), p.order.clone()) {
        Ok(q) => q.planarized == p.planarized && is_planar(&q.planarized),
        Err(_) => false,
    }
}

/// `β = p / q` as machine integers for the solver's scaled weights.
fn beta_parts(w: &CrossingWeights) -> Result<(u64, u64), CrossingError> {
    let too_big = || CrossingError::BetaTooPrecise(w.beta.clone());
    let p = u64::try_from(w.beta.numer().clone()).map_err(|_| too_big())?;
    let q = u64::try_from(w.beta.denom().clone()).map_err(|_| too_big())?;
    if q > 1 << 20 || p > 1 << 30 {
        return Err(too_big());
    }
    Ok((p, q))
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
