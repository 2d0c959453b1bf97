//! The explicit constants behind the convergence of `c_n(T) / n`, evaluated
//! in exact rational arithmetic, and certified bounds on `c(T)` from solved
//! small cases.

mod estimate;

pub use estimate::{estimate, BoundReport, ComponentBound, EstimateRow, LowerCandidate};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::crossing::CrossingError;
use crate::multigraph::is_connected;
use crate::reduce::{is_linked, ReduceError, DEFAULT_LINK_BUDGET};
use crate::tile::Tile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitsError {
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(BigRational),
    #[error("epsilon must be at most 1, got {0}")]
    EpsilonAboveOne(BigRational),
    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(BigRational),
    #[error("s must be at least 1")]
    ZeroS,
    #[error("n_max must be at least 1")]
    ZeroNMax,
    #[error("the tile is not {0}; run `reduce` first and use its components")]
    NotReduced(&'static str),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Crossing(#[from] CrossingError),
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn binom2(n: u64) -> BigRational {
    int(n * n.saturating_sub(1) / 2)
}

fn ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

fn check_eps(eps: &BigRational, at_most_one: bool) -> Result<(), LimitsError> {
    if !eps.is_positive() {
        return Err(LimitsError::NonPositiveEpsilon(eps.clone()));
    }
    if at_most_one && *eps > BigRational::one() {
        return Err(LimitsError::EpsilonAboveOne(eps.clone()));
    }
    Ok(())
}

/// `(n2, a0)` with `n2 = 2((8k+1) M + C(2k,2)) / ε` and `a0 = 2M / ε`.
pub fn lemma_upper_constants(
    t: &Tile,
    eps: &BigRational,
) -> Result<(BigRational, BigRational), LimitsError> {
    check_eps(eps, false)?;
    let k = t.width() as u64;
    let m = int(t.big_m());
    let n2 = int(2) * (int(8 * k + 1) * &m + binom2(2 * k)) / eps;
    let a0 = int(2) * m / eps;
    Ok((n2, a0))
}

/// `(8k+1) M s + C(2k,2)`: extra crossings of a tile drawing of `T^n` made
/// from a drawing of `cyc(T^n)`.
pub fn nearc_overhead(t: &Tile, s: u64) -> Result<BigRational, LimitsError> {
    if s == 0 {
        return Err(LimitsError::ZeroS);
    }
    let k = t.width() as u64;
    Ok(int(8 * k + 1) * int(t.big_m()) * int(s) + binom2(2 * k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LboundConstants {
    pub beta: BigRational,
    pub c: BigRational,
    pub q0: BigRational,
    pub n0: BigInt,
    pub q: BigRational,
    pub n1: BigInt,
}

struct Lbound {
    beta: BigRational,
    c: BigRational,
    q0: BigRational,
    n0: BigInt,
}

/// `β`, `c`, `Q0` and `n0` for the given `α`, with `c` formed from `beta_c`
/// (the pairing of the upper and lower ledgers uses the other side's `β`).
fn lbound_head(
    k: u64,
    edges: u64,
    eps: &BigRational,
    alpha: &BigRational,
    beta: BigRational,
    beta_c: &BigRational,
) -> Lbound {
    let c = (binom2(k) + alpha) / beta_c;
    let q0 = int(2 * k) * (int(2 * edges) + int(2) * &c + int(4 * k)) * (int(1) + &beta)
        + int(4 * k * k)
        + int(2) * alpha;
    let n0 = ceil(&(int(2) * &q0 / eps));
    Lbound { beta, c, q0, n0 }
}

/// `(Q, n1)` from `c`, `n0` and `β`.
fn lbound_tail(
    k: u64,
    eps: &BigRational,
    c: &BigRational,
    n0: &BigInt,
    beta: &BigRational,
) -> (BigRational, BigInt) {
    let n0 = BigRational::from_integer(n0.clone());
    let two = int(2);
    let q = int(8) * c * (&n0 + int(1)) * (int(1) + beta)
        + int(4 * k * k) * (&n0 + &two) * (&n0 + &two)
        + int(2) * binom2(k);
    let n1 = ceil(&(two * &q / eps));
    (q, n1)
}

/// The constants of the lower-bound lemma for given `ε` and `α`.
pub fn lbound_constants(
    t: &Tile,
    eps: &BigRational,
    alpha: &BigRational,
) -> Result<LboundConstants, LimitsError> {
    check_eps(eps, true)?;
    if !alpha.is_positive() {
        return Err(LimitsError::NonPositiveAlpha(alpha.clone()));
    }
    let k = t.width() as u64;
    let edges = t.graph().edge_count() as u64;
    let beta = eps / (int(8) * alpha);
    let head = lbound_head(k, edges, eps, alpha, beta.clone(), &beta);
    let (q, n1) = lbound_tail(k, eps, &head.c, &head.n0, &head.beta);
    Ok(LboundConstants {
        beta: head.beta,
        c: head.c,
        q0: head.q0,
        n0: head.n0,
        q,
        n1,
    })
}

/// Every quantity of the threshold `N(ε)` beyond which `c_t(T)/t` is within
/// `ε` of `c(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantLedger {
    pub epsilon: BigRational,
    pub epsilon1: BigRational,
    /// How often `ε1` was halved from `ε/2`.
    pub halvings: u32,
    pub k: usize,
    pub edges: usize,
    pub m: u64,
    /// `n2` and `a0` for `ε/2`.
    pub n2: BigRational,
    pub a0: BigRational,
    pub alpha_d: BigRational,
    pub alpha_u: BigRational,
    pub beta_d: BigRational,
    pub beta_u: BigRational,
    pub c_d: BigRational,
    pub c_u: BigRational,
    pub q0_d: BigRational,
    pub q0_u: BigRational,
    pub n0_d: BigInt,
    pub n0_u: BigInt,
    pub q_u: BigRational,
    pub n1_u: BigInt,
    /// `⌈a0 n1_u⌉`.
    pub n: BigInt,
    /// Whether `n0_d >= n2`. Fails only for width 0, where `n0_d = 2`
    /// whatever `ε1` is and `c_n(T) = n cr(G)` makes any threshold valid.
    pub n0_d_covers_n2: bool,
}

impl ConstantLedger {
    /// Name and exact value of every entry, in ledger order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        vec![
            ("epsilon", self.epsilon.to_string()),
            ("epsilon1", self.epsilon1.to_string()),
            ("halvings", self.halvings.to_string()),
            ("k", self.k.to_string()),
            ("|E|", self.edges.to_string()),
            ("M", self.m.to_string()),
            ("n2", self.n2.to_string()),
            ("a0", self.a0.to_string()),
            ("alpha_d", self.alpha_d.to_string()),
            ("alpha_u", self.alpha_u.to_string()),
            ("beta_d", self.beta_d.to_string()),
            ("beta_u", self.beta_u.to_string()),
            ("c_d", self.c_d.to_string()),
            ("c_u", self.c_u.to_string()),
            ("Q0_d", self.q0_d.to_string()),
            ("Q0_u", self.q0_u.to_string()),
            ("n0_d", self.n0_d.to_string()),
            ("n0_u", self.n0_u.to_string()),
            ("Q_u", self.q_u.to_string()),
            ("n1_u", self.n1_u.to_string()),
            ("N", self.n.to_string()),
            ("n0_d >= n2", self.n0_d_covers_n2.to_string()),
        ]
    }
}

/// The ledger for a connected linked tile. `ε1` starts at `ε/2` and is
/// halved until `n0_d >= n2` (not attainable for width 0, which keeps
/// `ε/2`).
pub fn theorem_n(t: &Tile, eps: &BigRational) -> Result<ConstantLedger, LimitsError> {
    check_eps(eps, true)?;
    if !is_connected(t.graph()) {
        return Err(LimitsError::NotReduced("connected"));
    }
    if !is_linked(t, DEFAULT_LINK_BUDGET).is_found() {
        return Err(LimitsError::NotReduced("linked"));
    }
    Ok(ledger(t, eps))
}

fn ledger(t: &Tile, eps: &BigRational) -> ConstantLedger {
    let k = t.width() as u64;
    let edges = t.graph().edge_count() as u64;
    let m = int(t.big_m());
    let half = eps / int(2);
    let (n2, a0) = lemma_upper_constants(t, &half).expect("eps / 2 > 0");
    let mut eps1 = half;
    let mut halvings = 0;
    loop {
        let alpha_d = &eps1 / int(2);
        let alpha_u = &m + &eps1 / int(2);
        let beta_d = &eps1 / (int(8) * &alpha_u);
        let beta_u = &eps1 / (int(8) * &alpha_d);
        let d = lbound_head(k, edges, &eps1, &alpha_d, beta_d, &beta_u);
        let u = lbound_head(k, edges, &eps1, &alpha_u, beta_u, &d.beta);
        let covers = BigRational::from_integer(d.n0.clone()) >= n2;
        if covers || k == 0 {
            let (q_u, n1_u) = lbound_tail(k, &eps1, &u.c, &u.n0, &u.beta);
            let n = ceil(&(&a0 * BigRational::from_integer(n1_u.clone())));
            return ConstantLedger {
                epsilon: eps.clone(),
                epsilon1: eps1,
                halvings,
                k: k as usize,
                edges: edges as usize,
                m: t.big_m(),
                n2,
                a0,
                alpha_d,
                alpha_u,
                beta_d: d.beta,
                beta_u: u.beta,
                c_d: d.c,
                c_u: u.c,
                q0_d: d.q0,
                q0_u: u.q0,
                n0_d: d.n0,
                n0_u: u.n0,
                q_u,
                n1_u,
                n,
                n0_d_covers_n2: covers,
            };
        }
        eps1 /= int(2);
        halvings += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::MultiGraph;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn edge_tile() -> Tile {
        Tile::new(
            MultiGraph::from_edges(2, [(0, 1)]).unwrap(),
            vec![0],
            vec![1],
        )
        .unwrap()
    }

    #[test]
    fn lemma_upper_example() {
        let (n2, a0) = lemma_upper_constants(&edge_tile(), &r(1, 1)).unwrap();
        assert_eq!((n2, a0), (r(56, 1), r(6, 1)));
        let empty = Tile::new(MultiGraph::new(1), vec![], vec![]).unwrap();
        let (n2, a0) = lemma_upper_constants(&empty, &r(1, 1)).unwrap();
        assert_eq!((n2, a0), (r(0, 1), r(0, 1)));
        assert!(lemma_upper_constants(&empty, &r(0, 1)).is_err());
    }

    #[test]
    fn nearc_example() {
        assert_eq!(nearc_overhead(&edge_tile(), 1).unwrap(), r(28, 1));
        assert_eq!(
            nearc_overhead(&edge_tile(), 2).unwrap() - nearc_overhead(&edge_tile(), 1).unwrap(),
            r(27, 1)
        );
        assert!(nearc_overhead(&edge_tile(), 0).is_err());
    }

    #[test]
    fn lbound_beta_cancels() {
        for d in [1, 3, 7] {
            let eps = r(1, d);
            let l = lbound_constants(&edge_tile(), &eps, &(&eps / int(2))).unwrap();
            assert_eq!(l.beta, r(1, 4));
        }
        assert!(lbound_constants(&edge_tile(), &r(2, 1), &r(1, 1)).is_err());
        assert!(lbound_constants(&edge_tile(), &r(1, 2), &r(0, 1)).is_err());
    }

    #[test]
    fn theorem_rejects_unreduced() {
        let swap = Tile::new(MultiGraph::new(2), vec![0, 1], vec![1, 0]).unwrap();
        assert_eq!(
            theorem_n(&swap, &r(1, 1)),
            Err(LimitsError::NotReduced("connected"))
        );
    }

    #[test]
    fn width_zero_ledger() {
        let empty = Tile::new(MultiGraph::new(1), vec![], vec![]).unwrap();
        let l = theorem_n(&empty, &r(1, 1)).unwrap();
        assert_eq!(l.n, BigInt::from(0));
        assert!(l.n0_d_covers_n2);
        assert_eq!(l.halvings, 0);
    }
}
