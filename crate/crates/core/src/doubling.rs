//! Parametrization of doubling values `T = |2A|` for sets of cardinality `k`.
//!
//! For `k >= 4` every `T` in `[2k-1, C(k,2)+2]` is written uniquely as
//! `T = ck - C(c+1,2) + b + 2` with `2 <= c <= k-2` and `1 <= b <= k-c-1`,
//! except `T = 2k-1`, which gets `(c, b) = (2, 0)`. The conjectured largest
//! volume minus one is `mu = 2^(c-2) (k - c + b + 1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoublingProfile {
    pub k: usize,
    pub t: usize,
    pub c: usize,
    pub b: usize,
    pub mu: u64,
}

/// Smallest legal doubling, `2k - 1`.
pub fn min_doubling(k: usize) -> usize {
    2 * k - 1
}

/// Largest legal doubling, `C(k,2) + 2` (5 for `k = 3`).
pub fn max_doubling(k: usize) -> usize {
    if k == 3 {
        5
    } else {
        k * (k - 1) / 2 + 2
    }
}

fn binom2(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

fn mu_formula(k: usize, c: usize, b: usize) -> u64 {
    (1u64 << (c - 2)) * (k + b + 1 - c) as u64
}

/// Legal doubling values for cardinality `k`, ascending.
pub fn legal_doublings(k: usize) -> std::ops::RangeInclusive<usize> {
    min_doubling(k)..=max_doubling(k)
}

/// The unique `(c, b)` placing `t` in `I_{c,k}`.
pub fn profile(k: usize, t: usize) -> Result<DoublingProfile> {
    if k < 3 {
        return Err(Error::Domain(format!("cardinality {k} is below 3")));
    }
    let (lo, hi) = (min_doubling(k), max_doubling(k));
    if t < lo || t > hi {
        return Err(Error::Range { k, t, lo, hi });
    }
    if t == lo {
        return Ok(DoublingProfile { k, t, c: 2, b: 0, mu: (k - 1) as u64 });
    }
    for c in 2..=k - 2 {
        // T - b = ck - C(c+1,2) + 2, b in [1, k-c-1]
        let base = c * k + 2 - binom2(c + 1);
        if t > base && t - base <= k - c - 1 {
            let b = t - base;
            return Ok(DoublingProfile { k, t, c, b, mu: mu_formula(k, c, b) });
        }
    }
    Err(Error::Invariant(format!("no (c,b) found for k={k}, T={t}")))
}

/// `ck - C(c+1,2) + b + 2`, for `(c, b)` in the legal region.
pub fn doubling_from_profile(k: usize, c: usize, b: usize) -> Result<usize> {
    let legal = if (c, b) == (2, 0) {
        k >= 3
    } else {
        k >= 4 && (2..=k - 2).contains(&c) && b >= 1 && b + c < k
    };
    if !legal {
        return Err(Error::Domain(format!("(c, b) = ({c}, {b}) is not legal for k = {k}")));
    }
    Ok(c * k + b + 2 - binom2(c + 1))
}

/// `mu(k, T) = 2^(c-2) (k - c + b + 1)`.
pub fn mu(k: usize, t: usize) -> Result<u64> {
    profile(k, t).map(|p| p.mu)
}

/// Doubling constant `c(k, T)`.
pub fn doubling_constant(k: usize, t: usize) -> Result<usize> {
    profile(k, t).map(|p| p.c)
}
