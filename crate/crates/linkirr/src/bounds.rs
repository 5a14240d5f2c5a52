//! Exact evaluation of the closed-form counting and edge bounds, plus the
//! floating-point moment heuristics.
//!
//! Everything except [`MomentEstimate`] is integer or rational arithmetic
//! with no rounding: counts come from enumeration, bounds from the formulas
//! with explicit floor/ceiling steps (an edge count is an integer, so
//! fractional bounds tighten accordingly).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::enumerate::enumerate_graphs;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("edge bounds are vacuous below order 6 (got {0})")]
    BelowMinimumOrder(u64),
    #[error("exact class counts are enumerated only up to 9 vertices (got {0})")]
    ExactCountOutOfRange(u64),
    #[error("the distinctness floor requires order >= 209 (got {0})")]
    FloorPreconditionUnmet(u64),
}

/// All edge-count bounds evaluated at one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: u64,
    /// `2n - 5`.
    pub edge_lower: u64,
    /// `floor((2n^2 - 5n + 4) / 4)`.
    pub edge_upper: u64,
    /// The degree-class counting lower bound, see
    /// [`asymptotic_edge_lower`].
    pub asym_lower: BigUint,
    /// Whether planarity is still arithmetically possible (`n <= 277`).
    /// Necessary condition only: orders above 277 force nonplanarity, small
    /// orders decide nothing.
    pub planar_possible: bool,
    pub notes: Vec<String>,
}

/// First- and second-moment diagnostics for `n` vertices drawing links from
/// `g` equally likely types. The only floating-point surface in this module
/// (standard doubles).
#[derive(Debug, Clone, PartialEq)]
pub struct MomentEstimate {
    pub n: u64,
    pub g: BigUint,
    /// `n * exp(-(n-1)/g)` — expected number of vertices with unique links.
    pub expected_unique: f64,
    /// `(exp((n-1)/g) - 1) / n` — the Chebyshev ratio `Var(X)/E[X]^2`.
    pub variance_ratio: f64,
}

/// Lower bound for the number of isomorphism classes on `r` vertices:
/// `2^C(r,2) / r!` as an exact rational (labeled graphs over relabelings).
pub fn g_lower_bound(r: u64) -> BigRational {
    let numer = BigInt::one() << (r * r.saturating_sub(1) / 2) as usize;
    let mut denom = BigInt::one();
    for i in 2..=r {
        denom *= BigInt::from(i);
    }
    BigRational::new(numer, denom)
}

/// Exact number of isomorphism classes on `r` vertices, by enumeration.
pub fn g_exact(r: u64) -> Result<u64, BoundsError> {
    let order = usize::try_from(r).map_err(|_| BoundsError::ExactCountOutOfRange(r))?;
    let catalog = enumerate_graphs(order).map_err(|_| BoundsError::ExactCountOutOfRange(r))?;
    Ok(catalog.len() as u64)
}

/// Both closed-form edge bounds plus the counting bound at order `n >= 6`.
pub fn edge_bounds(n: u64) -> Result<BoundsReport, BoundsError> {
    if n < 6 {
        return Err(BoundsError::BelowMinimumOrder(n));
    }
    let edge_lower = 2 * n - 5;
    let edge_upper = ((2 * n as u128 * n as u128 - 5 * n as u128 + 4) / 4) as u64;
    let asym_lower = asymptotic_edge_lower(n);
    Ok(BoundsReport {
        n,
        edge_lower,
        edge_upper,
        asym_lower,
        planar_possible: n <= 277,
        notes: vec![
            "edge_lower = 2n - 5".to_string(),
            "edge_upper = floor((2n^2 - 5n + 4)/4)".to_string(),
            "asym_lower = ceil((kn - sum_{d<k}(k-d) 2^C(d,2))/2), 2^C(k,2) <= n < 2^C(k+1,2)"
                .to_string(),
            "planar_possible is a necessary condition only (n <= 277)".to_string(),
        ],
    })
}

/// Degree-class counting lower bound on edges: at most `2^C(d,2)` vertices
/// can have degree `d`, so with `k` chosen by `2^C(k,2) <= n < 2^C(k+1,2)`
/// the degree sum is at least `kn - sum_{d=1}^{k-1} (k-d) 2^C(d,2)`; halve
/// and round up.
pub fn asymptotic_edge_lower(n: u64) -> BigUint {
    assert!(n >= 1);
    let n_big = BigUint::from(n);
    let pow = |d: u64| BigUint::one() << (d * d.saturating_sub(1) / 2) as usize;
    let mut k: u64 = 1;
    while pow(k + 1) <= n_big {
        k += 1;
    }
    let mut sum = BigUint::zero();
    for d in 1..k {
        sum += BigUint::from(k - d) * pow(d);
    }
    let degree_sum = BigUint::from(k) * n_big - sum;
    (degree_sum + BigUint::one()) >> 1 // ceil(x / 2)
}

/// Moment diagnostics for the uniform link-assignment model. `g` may exceed
/// floating-point range; the limits degenerate gracefully
/// (`expected_unique -> n`, `variance_ratio -> 0`).
pub fn moment_estimates(n: u64, g: &BigUint) -> MomentEstimate {
    assert!(n >= 1 && !g.is_zero());
    let ratio = (n - 1) as f64 / g.to_f64().unwrap_or(f64::INFINITY);
    MomentEstimate {
        n,
        g: g.clone(),
        expected_unique: n as f64 * (-ratio).exp(),
        variance_ratio: (ratio.exp() - 1.0) / n as f64,
    }
}

/// Minimum edge count forced by pairwise-distinct links once `n >= 209`:
/// `ceil((7n - 289) / 2)`. Exceeds the planar budget `3n - 6` exactly for
/// `n > 277`.
pub fn link_distinctness_edge_floor(n: u64) -> Result<u128, BoundsError> {
    if n < 209 {
        return Err(BoundsError::FloorPreconditionUnmet(n));
    }
    Ok((7 * n as u128 - 289).div_ceil(2))
}
