//! Growth operators `D(A) = A ∪ {2 max A}` and `D_x(A) = 2·A ∪ {x}`, the
//! four-variant family built from them, and factorization of a set into a
//! small-doubling base followed by operator steps.

use serde::{Deserialize, Serialize};

use crate::dimension::f_isomorphic;
use crate::error::{Error, Result};
use crate::set::{IntSet, NormalSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// `X̃ ∪ {2 max X̃}`
    #[serde(rename = "D")]
    ExtendRight,
    /// `(X̃)^- ∪ {2 max X̃}`
    #[serde(rename = "D_refl")]
    ExtendRightOfReflexion,
    /// `2·X̃ ∪ {x}`
    #[serde(rename = "Dx")]
    DilateAdjoinOdd,
    /// `2·(X̃)^- ∪ {x}`
    #[serde(rename = "Dx_refl")]
    DilateAdjoinOddOfReflexion,
}

impl Variant {
    pub fn reflects(self) -> bool {
        matches!(self, Variant::ExtendRightOfReflexion | Variant::DilateAdjoinOddOfReflexion)
    }

    pub fn dilates(self) -> bool {
        matches!(self, Variant::DilateAdjoinOdd | Variant::DilateAdjoinOddOfReflexion)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiStep {
    pub variant: Variant,
    pub x: Option<i64>,
}

impl PhiStep {
    pub const D: PhiStep = PhiStep { variant: Variant::ExtendRight, x: None };
    pub const D_REFL: PhiStep = PhiStep { variant: Variant::ExtendRightOfReflexion, x: None };

    pub fn dx(x: i64) -> PhiStep {
        PhiStep { variant: Variant::DilateAdjoinOdd, x: Some(x) }
    }

    pub fn dx_refl(x: i64) -> PhiStep {
        PhiStep { variant: Variant::DilateAdjoinOddOfReflexion, x: Some(x) }
    }
}

/// `A ∪ {2 max(A)}`.
pub fn op_d(a: &NormalSet) -> Result<NormalSet> {
    if a.len() < 2 {
        return Err(Error::Precondition("D needs at least two elements".into()));
    }
    NormalSet::try_from(a.with(2 * a.max())?)
}

/// True iff `x` is odd and lies in `2A \ A`.
pub fn is_legal_dx(a: &IntSet, x: i64) -> bool {
    x.rem_euclid(2) == 1 && !a.contains(x) && a.double().contains(x)
}

/// `{2a : a in A} ∪ {x}` for odd `x` in `2A \ A`.
pub fn op_dx(a: &NormalSet, x: i64) -> Result<NormalSet> {
    if x.rem_euclid(2) != 1 {
        return Err(Error::Precondition(format!("x = {x} is even")));
    }
    if !is_legal_dx(a, x) {
        return Err(Error::Precondition(format!("x = {x} is not in 2A \\ A for A = {a}")));
    }
    NormalSet::try_from(a.dilate(2)?.with(x)?)
}

/// Normalizes `X`, reflects it for the reflexion variants, then applies `D` or `D_x`.
pub fn phi_apply(step: PhiStep, x: &IntSet) -> Result<NormalSet> {
    let mut base = x.normalize().set;
    if step.variant.reflects() {
        base = base.reflect();
    }
    if step.variant.dilates() {
        let odd = step
            .x
            .ok_or_else(|| Error::Precondition("dilate variants need x".into()))?;
        op_dx(&base, odd)
    } else {
        if step.x.is_some() {
            return Err(Error::Precondition("D variants take no x".into()));
        }
        op_d(&base)
    }
}

/// Every `(step, X)` with `phi_apply(step, X) = Y`, ordered by variant:
/// plain `D`, reflected `D`, plain `D_x`, reflected `D_x`.
pub fn phi_invert(y: &NormalSet) -> Result<Vec<(PhiStep, NormalSet)>> {
    if y.len() < 4 {
        return Err(Error::Precondition("inversion needs at least four elements".into()));
    }
    let mut out = Vec::new();
    let el = y.elements();
    let (top, second) = (el[el.len() - 1], el[el.len() - 2]);
    if top == 2 * second {
        let x = NormalSet::try_from(y.without(top).expect("len >= 4"))?;
        out.push((PhiStep::D, x.clone()));
        out.push((PhiStep::D_REFL, x.reflect()));
    }
    if y.odd_count() == 1 {
        let odd = y.iter().find(|a| a.rem_euclid(2) == 1).expect("one odd element");
        let halves: Vec<i64> = y.iter().filter(|&a| a != odd).map(|a| a / 2).collect();
        // a dilated preimage would be renormalized by phi_apply, so it is no preimage
        let x = NormalSet::try_from(IntSet::new(halves)?);
        if let Some(x) = x.ok().filter(|x| is_legal_dx(x, odd)) {
            out.push((PhiStep::dx(odd), x.clone()));
            out.push((PhiStep::dx_refl(odd), x.reflect()));
        }
    }
    Ok(out)
}

fn in_regime(x: &IntSet) -> bool {
    x.doubling() + 4 <= 3 * x.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub base: NormalSet,
    /// Applied to `base` first to last.
    pub steps: Vec<PhiStep>,
    /// The base sits one element above the `|2B| <= 3|B| - 4` regime.
    pub b_prime_case: bool,
}

impl Factorization {
    pub fn replay(&self) -> Result<NormalSet> {
        self.steps
            .iter()
            .try_fold(self.base.clone(), |x, &step| phi_apply(step, &x))
    }
}

/// Peels operator steps off `A` until the remaining set has `|2X| <= 3|X| - 4`.
///
/// Inversions are tried depth-first in [`phi_invert`] order. When a set outside
/// the regime admits no inversion but dropping its minimum or maximum lands in
/// the regime, it becomes the base with `b_prime_case` set. Once the regime is
/// reached, plain or reflected `D` steps are still peeled while the result
/// stays in the regime (this only fires when the base is `D` of a progression).
pub fn factorize(a: &IntSet) -> Result<Factorization> {
    let start = a.normalize().set;
    // the statement is up to F-isomorphism, so the reflexion may factor instead
    let found = match descend(&start)? {
        Some(d) => Some(d),
        None => descend(&start.reflect())?,
    };
    let (base, mut steps, b_prime_case) = found.ok_or_else(|| Error::FactorizationFailed(a.to_string()))?;
    let mut base = base;
    if !b_prime_case {
        while base.len() >= 4 {
            let next = phi_invert(&base)?
                .into_iter()
                .find(|(s, x)| !s.variant.dilates() && in_regime(x));
            match next {
                Some((s, x)) => {
                    steps.insert(0, s);
                    base = x;
                }
                None => break,
            }
        }
    }
    Ok(Factorization { base, steps, b_prime_case })
}

type Descent = Option<(NormalSet, Vec<PhiStep>, bool)>;

fn descend(x: &NormalSet) -> Result<Descent> {
    if in_regime(x) {
        return Ok(Some((x.clone(), Vec::new(), false)));
    }
    if x.len() >= 4 {
        for (step, prev) in phi_invert(x)? {
            if let Some((base, mut steps, flag)) = descend(&prev)? {
                steps.push(step);
                return Ok(Some((base, steps, flag)));
            }
        }
    }
    if x.len() >= 4 {
        let lo = x.without(x.min()).expect("len >= 4");
        let hi = x.without(x.max()).expect("len >= 4");
        if in_regime(&lo) || in_regime(&hi) {
            return Ok(Some((x.clone(), Vec::new(), true)));
        }
    }
    Ok(None)
}

/// Replays a factorization and confirms the result is Freiman-isomorphic to `a`.
pub fn replay_matches(f: &Factorization, a: &IntSet) -> Result<bool> {
    let y = f.replay()?;
    if y.len() <= crate::dimension::FISO_CAP {
        Ok(f_isomorphic(&y, a)?.is_some())
    } else {
        let n = a.normalize().set;
        Ok(y == n || y == n.reflect())
    }
}
