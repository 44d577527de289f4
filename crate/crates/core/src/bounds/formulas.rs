use serde::Serialize;

use crate::error::{Error, Result};

/// Slack applied when a floating-point bound is compared with a threshold.
pub const THRESHOLD_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    pub bound: f64,
    pub ceiling: u64,
    pub certifying: bool,
    /// Clique size guaranteed in the complement of the conflict graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence: Option<f64>,
}

fn ceiling(x: f64) -> u64 {
    // values within the slack of an integer are that integer
    let r = x.round();
    if (x - r).abs() <= THRESHOLD_SLACK {
        r.max(0.0) as u64
    } else {
        x.ceil().max(0.0) as u64
    }
}

/// Frequency lower bound for realizers of `singleton(n)` with at most
/// `realizer_size` members: with `c = size / n` the complement of the
/// conflict graph has a clique on `n^2 / ((2c + 1) n + 2) + 1` vertices, and
/// the frequency is at least `n / (2 (c + 1))`.
pub fn turan_independence_floor(n: usize, realizer_size: usize) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::parameter("n must be at least 2"));
    }
    let nf = n as f64;
    let c = realizer_size as f64 / nf;
    let independence = nf * nf / ((2.0 * c + 1.0) * nf + 2.0) + 1.0;
    let floor = nf / (2.0 * (c + 1.0));
    Ok(BoundReport {
        n,
        m: None,
        c: Some(c),
        size: Some(realizer_size),
        bound: floor,
        ceiling: ceiling(floor),
        certifying: false,
        independence: Some(independence),
    })
}

/// `(n log2 m - log2 n) / log2(3 n^2 m)`, the lower bound on the local
/// dimension of the multiset singleton poset. The report certifies
/// `ldim = n` for the unbounded multiset lattice when the bound exceeds
/// `n - 1` (never for `n = 1`).
pub fn multiset_lower_bound(n: usize, m: usize) -> Result<BoundReport> {
    if n == 0 || m < 2 {
        return Err(Error::parameter("need n >= 1 and m >= 2"));
    }
    let bound = multiset_bound_value(n, m);
    Ok(BoundReport {
        n,
        m: Some(m),
        c: None,
        size: None,
        bound,
        ceiling: ceiling(bound),
        certifying: certifies(n, m),
        independence: None,
    })
}

pub fn multiset_bound_value(n: usize, m: usize) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    (nf * mf.log2() - nf.log2()) / (3.0 * nf * nf * mf).log2()
}

/// `n (3 n^2)^(n-1)`, or `None` if it does not fit in 128 bits.
///
/// The bound exceeds `n - 1` exactly when `m^n / n > (3 n^2 m)^(n-1)`, which
/// after dividing by `m^(n-1)` reads `m > n (3 n^2)^(n-1)`.
pub fn certifying_threshold(n: usize) -> Option<u128> {
    let n128 = n as u128;
    let base = 3u128.checked_mul(n128)?.checked_mul(n128)?;
    base.checked_pow(u32::try_from(n - 1).ok()?)?
        .checked_mul(n128)
}

/// Exact test of `multiset_bound_value(n, m) > n - 1`, for `n >= 2`.
pub fn certifies(n: usize, m: usize) -> bool {
    if n < 2 {
        return false;
    }
    match certifying_threshold(n) {
        Some(t) => m as u128 > t,
        // the threshold exceeds every representable m
        None => false,
    }
}

/// Floating-point test with [`THRESHOLD_SLACK`].
pub fn certifies_float(n: usize, m: usize) -> bool {
    n >= 2 && multiset_bound_value(n, m) > (n - 1) as f64 + THRESHOLD_SLACK
}

/// Least `m >= 2` for which [`multiset_lower_bound`] certifies, by doubling
/// then bisection.
pub fn min_m_certifying(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::parameter("n must be at least 2"));
    }
    let mut hi = 2usize;
    while !certifies(n, hi) {
        hi = hi
            .checked_mul(2)
            .ok_or_else(|| Error::parameter(format!("certifying m for n = {n} exceeds usize")))?;
    }
    let mut lo = hi / 2; // certifies(lo) is false, or lo < 2
    if lo < 2 {
        return Ok(2);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if certifies(n, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // bracketing guard
    debug_assert!(certifies(n, hi) && !certifies(n, hi - 1));
    Ok(hi)
}
