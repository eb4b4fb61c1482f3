//! Stable and right-stable sets, the density bound, and the decomposition
//! `A = A1 ∘ P ∘ A2` of small-doubling sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::IntSet;

fn require_zero_min(a: &IntSet) -> Result<()> {
    if a.min() != 0 {
        return Err(Error::Domain(format!("{a} does not start at 0")));
    }
    Ok(())
}

/// `2A ∩ [0, max] = A` and neither `1` nor `max - 1` lies in `A`; `{0}` is stable.
///
/// Only `min(A) = 0` is required: dilated progressions such as `{0,2,4}` are
/// stable even though their gcd exceeds one.
pub fn is_stable(a: &IntSet) -> Result<bool> {
    require_zero_min(a)?;
    if a.len() == 1 {
        return Ok(true);
    }
    let m = a.max();
    if a.contains(1) || a.contains(m - 1) {
        return Ok(false);
    }
    Ok(a.double().restrict(0, m) == a.elements())
}

/// Stability of the reflexion.
pub fn is_right_stable(a: &IntSet) -> Result<bool> {
    require_zero_min(a)?;
    is_stable(&a.reflexion()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityCheck {
    /// `|A ∩ [0, x]| <= ceil((x + 1) / 2)` for every `x` in `[0, max]`.
    pub bound_holds: bool,
    /// `|A| = ceil((max + 1) / 2)`.
    pub dense: bool,
}

pub fn density_bound_check(a: &IntSet) -> Result<DensityCheck> {
    if !is_stable(a)? {
        return Err(Error::Precondition(format!("{a} is not stable")));
    }
    let m = a.max();
    let mut count = 0i64;
    let mut idx = 0;
    let el = a.elements();
    let mut bound_holds = true;
    for x in 0..=m {
        if idx < el.len() && el[idx] == x {
            count += 1;
            idx += 1;
        }
        if count > (x + 2) / 2 {
            bound_holds = false;
            break;
        }
    }
    Ok(DensityCheck { bound_holds, dense: a.len() as i64 == (m + 2) / 2 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableDecomposition {
    pub a1: IntSet,
    pub p_len: usize,
    pub a2: IntSet,
}

impl StableDecomposition {
    pub fn a1_max(&self) -> i64 {
        IntSet::max(&self.a1)
    }

    pub fn a2_max(&self) -> i64 {
        IntSet::max(&self.a2)
    }

    /// `A1 ∘ [0, p_len - 1] ∘ A2`.
    pub fn reassemble(&self) -> IntSet {
        let p = IntSet::segment(0, self.p_len as i64 - 1).expect("p_len >= 1");
        self.a1
            .concat(&p)
            .and_then(|s| s.concat(&self.a2))
            .expect("components start at 0")
    }
}

/// Every split `A1 ∘ P ∘ A2` of `A` with `A1` stable, `P` a segment and `A2`
/// right-stable. `P` is always a maximal run of consecutive elements of `A`,
/// since a stable part with two or more elements has a hole just below its
/// maximum, so only the runs are tried.
pub fn stable_splits(a: &IntSet) -> Result<Vec<StableDecomposition>> {
    require_zero_min(a)?;
    let el = a.elements();
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=el.len() {
        if i == el.len() || el[i] != el[i - 1] + 1 {
            runs.push((el[start], el[i - 1]));
            start = i;
        }
    }
    let m = a.max();
    let mut out = Vec::new();
    for (p, q) in runs {
        let a1 = IntSet::from_sorted(a.restrict(0, p));
        let a2 = IntSet::from_sorted(a.restrict(q, m).into_iter().map(|x| x - q).collect());
        if is_stable(&a1)? && is_right_stable(&a2)? {
            out.push(StableDecomposition { a1, p_len: (q - p + 1) as usize, a2 });
        }
    }
    Ok(out)
}

/// The stable decomposition of a normal set with `|2A| <= 3|A| - 4`.
///
/// `NotDecomposable` is an ordinary outcome for sets that are not extremal;
/// more than one valid split is reported as an invariant violation.
pub fn stable_decompose(a: &IntSet) -> Result<StableDecomposition> {
    if !a.is_normal() {
        return Err(Error::Domain(format!("{a} is not in normal form")));
    }
    let k = a.len();
    let t = a.doubling();
    if t + 4 > 3 * k {
        return Err(Error::Precondition(format!(
            "|2A| = {t} exceeds 3k - 4 = {}",
            (3 * k).saturating_sub(4)
        )));
    }
    let mut splits = stable_splits(a)?;
    match splits.len() {
        0 => Err(Error::NotDecomposable),
        1 => Ok(splits.pop().unwrap()),
        n => Err(Error::Invariant(format!("{a} has {n} distinct stable decompositions"))),
    }
}
