//! Chains: sets grown one out-of-hull element at a time from a 3-term
//! progression, each step one-dimensional and of largest volume among the
//! competing one-element extensions with the same doubling.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimension::{is_one_dimensional, left_candidates, right_candidates};
use crate::doubling::{max_doubling, profile, DoublingProfile};
use crate::error::{Error, Result};
use crate::operators::{factorize, replay_matches, Factorization};
use crate::set::{IntSet, NormalSet};

/// Largest cardinality [`enumerate_chains`] accepts by default.
pub const ENUMERATION_CAP: usize = 10;

/// `(max - min) / gcd + 1` for one-dimensional sets.
pub fn volume_1d(a: &IntSet) -> Result<i64> {
    if a.len() >= 2 && !is_one_dimensional(a.elements()) {
        return Err(Error::Precondition(format!(
            "{a} is not one-dimensional; volume is only computed for d = 1"
        )));
    }
    Ok(a.normalize().set.as_set().max() + 1)
}

fn doubling_cap(i: usize) -> usize {
    max_doubling(i)
}

/// One-element out-of-hull extensions of `prev` that stay one-dimensional,
/// with their doubling and volume.
fn competitors(prev: &IntSet) -> Vec<(i64, usize, i64)> {
    left_candidates(prev)
        .into_iter()
        .chain(right_candidates(prev))
        .filter_map(|y| {
            let b = prev.with(y).ok()?;
            if !is_one_dimensional(b.elements()) {
                return None;
            }
            let vol = b.normalize().set.as_set().max() + 1;
            Some((y, b.doubling(), vol))
        })
        .collect()
}

fn check_extension_shape(prev: &IntSet, next: &IntSet) -> Result<i64> {
    if next.len() != prev.len() + 1 || !prev.iter().all(|a| next.contains(a)) {
        return Err(Error::Domain(format!("{next} is not {prev} plus one element")));
    }
    let y = next.iter().find(|&a| !prev.contains(a)).expect("one new element");
    if y > prev.min() && y < prev.max() {
        return Err(Error::Domain(format!("{y} lies inside the hull of {prev}")));
    }
    if !is_one_dimensional(next.elements()) {
        return Err(Error::Domain(format!("{next} is not one-dimensional")));
    }
    if next.doubling() > doubling_cap(next.len()) {
        return Err(Error::Domain(format!("{next} exceeds the doubling cap")));
    }
    Ok(y)
}

/// True iff no one-dimensional `prev ∪ {y'}` with `y'` outside `[prev]` has the
/// same doubling as `next` and a larger volume.
pub fn is_chain_extension(prev: &IntSet, next: &IntSet) -> Result<bool> {
    check_extension_shape(prev, next)?;
    let t = next.doubling();
    let vol = next.normalize().set.as_set().max() + 1;
    Ok(!competitors(prev).iter().any(|&(_, tb, vb)| tb == t && vb > vol))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCertificate {
    /// `A_3 ⊂ A_4 ⊂ … ⊂ A_k`, as subsets of the input.
    pub sets: Vec<IntSet>,
    pub profiles: Vec<DoublingProfile>,
    pub factorization: Option<Factorization>,
    pub volume: i64,
}

impl ChainCertificate {
    pub fn top(&self) -> &IntSet {
        self.sets.last().expect("at least A_3")
    }
}

/// Memoized recognizer. The chain property is invariant under affine maps,
/// so results are keyed by canonical normal form.
#[derive(Default)]
pub struct ChainOracle {
    memo: Mutex<HashMap<NormalSet, bool>>,
}

impl ChainOracle {
    pub fn new() -> Self {
        ChainOracle::default()
    }

    pub fn is_chain(&self, a: &IntSet) -> bool {
        self.path(a).is_some()
    }

    /// The nested sequence `A_3 ⊂ … ⊂ A`, if `A` is a chain.
    pub fn path(&self, a: &IntSet) -> Option<Vec<IntSet>> {
        let k = a.len();
        if k < 3 {
            return None;
        }
        if k == 3 {
            return a.is_progression(a.elements()[1] - a.min()).then(|| vec![a.clone()]);
        }
        let key = a.normalize().set.canonical();
        if let Some(false) = self.memo.lock().unwrap().get(&key) {
            return None;
        }
        let found = self.search(a);
        self.memo.lock().unwrap().insert(key, found.is_some());
        found
    }

    fn search(&self, a: &IntSet) -> Option<Vec<IntSet>> {
        if !is_one_dimensional(a.elements()) || a.doubling() > doubling_cap(a.len()) {
            return None;
        }
        for drop in [a.max(), a.min()] {
            let prev = a.without(drop).expect("k >= 4");
            if !matches!(is_chain_extension(&prev, a), Ok(true)) {
                continue;
            }
            if let Some(mut path) = self.path(&prev) {
                path.push(a.clone());
                return Some(path);
            }
        }
        None
    }
}

/// Builds a certificate when `A` is a chain.
pub fn is_chain(a: &IntSet) -> Result<Option<ChainCertificate>> {
    if a.len() < 3 {
        return Err(Error::Precondition("chains have at least three elements".into()));
    }
    let oracle = ChainOracle::new();
    let Some(sets) = oracle.path(a) else {
        return Ok(None);
    };
    certificate(sets).map(Some)
}

fn certificate(sets: Vec<IntSet>) -> Result<ChainCertificate> {
    let profiles = sets
        .iter()
        .map(|s| profile(s.len(), s.doubling()))
        .collect::<Result<Vec<_>>>()?;
    let top = sets.last().expect("nonempty");
    let factorization = if top.len() >= 4 { factorize(top).ok() } else { None };
    let volume = volume_1d(top)?;
    Ok(ChainCertificate { sets, profiles, factorization, volume })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedChain {
    pub set: NormalSet,
    pub profile: DoublingProfile,
}

/// Canonical chains of cardinality `k`, sorted by doubling then set.
pub fn enumerate_chains(k: usize) -> Result<Vec<EnumeratedChain>> {
    enumerate_chains_capped(k, ENUMERATION_CAP)
}

pub fn enumerate_chains_capped(k: usize, cap: usize) -> Result<Vec<EnumeratedChain>> {
    Ok(chain_levels(k, cap)?.pop().expect("at least level 3"))
}

/// Every level from 3 up to `k`; index `i` holds the chains of cardinality `i + 3`.
pub fn chain_levels(k: usize, cap: usize) -> Result<Vec<Vec<EnumeratedChain>>> {
    if k < 3 {
        return Err(Error::Precondition("chains have at least three elements".into()));
    }
    if k > cap {
        return Err(Error::Capacity(format!("chain enumeration is capped at k = {cap}")));
    }
    let seed: NormalSet = "{0,1,2}".parse()?;
    let mut levels = vec![vec![EnumeratedChain { profile: profile(3, 5)?, set: seed }]];
    for _ in 4..=k {
        let frontier = levels.last().unwrap();
        let found: Vec<HashSet<NormalSet>> = frontier
            .par_iter()
            .map(|c| extend_chain(c.set.as_set()))
            .collect();
        let next: HashSet<NormalSet> = found.into_iter().flatten().collect();
        let mut level = next
            .into_iter()
            .map(|set| {
                let profile = profile(set.len(), set.doubling())?;
                Ok(EnumeratedChain { set, profile })
            })
            .collect::<Result<Vec<_>>>()?;
        level.sort_by(|a, b| (a.profile.t, a.set.elements()).cmp(&(b.profile.t, b.set.elements())));
        levels.push(level);
    }
    Ok(levels)
}

/// Canonical forms of the chain extensions of one chain.
fn extend_chain(prev: &IntSet) -> HashSet<NormalSet> {
    let comps = competitors(prev);
    let cap = doubling_cap(prev.len() + 1);
    let mut best: BTreeMap<usize, i64> = BTreeMap::new();
    for &(_, t, vol) in &comps {
        let e = best.entry(t).or_insert(vol);
        *e = (*e).max(vol);
    }
    comps
        .iter()
        .filter(|&&(_, t, vol)| t <= cap && best[&t] == vol)
        .map(|&(y, _, _)| prev.with(y).expect("in range").normalize().set.canonical())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremReport {
    pub set: IntSet,
    pub k: usize,
    pub t: usize,
    pub mu: u64,
    pub volume: i64,
    pub factorization: Option<Factorization>,
    pub failures: Vec<String>,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `vol = mu + 1`, factorizes, and verifies base size and replay.
pub fn verify_main_theorem(cert: &ChainCertificate) -> Result<MainTheoremReport> {
    let a = cert.top().clone();
    let k = a.len();
    let t = a.doubling();
    let p = profile(k, t)?;
    let volume = volume_1d(&a)?;
    let mut failures = Vec::new();
    if volume != p.mu as i64 + 1 {
        failures.push(format!("volume {volume} != mu({k},{t}) + 1 = {}", p.mu + 1));
    }
    let factorization = if k >= 4 {
        match factorize(&a) {
            Ok(f) => Some(f),
            Err(e) => {
                failures.push(e.to_string());
                None
            }
        }
    } else {
        None
    };
    if let Some(f) = &factorization {
        let base = f.base.as_set();
        let small = |s: &IntSet| s.doubling() + 4 <= 3 * s.len();
        if f.b_prime_case {
            let shrinks = [base.min(), base.max()]
                .iter()
                .filter_map(|&e| base.without(e))
                .any(|b| small(&b));
            if !shrinks {
                failures.push(format!("base {base} flagged B' but no extreme removal is small"));
            }
        } else if !small(base) && base.len() > 3 {
            failures.push(format!("base {base} has |2B| > 3|B| - 4"));
        }
        if !replay_matches(f, &a)? {
            failures.push("replayed steps do not reproduce the chain".into());
        }
    }
    Ok(MainTheoremReport { set: a, k, t, mu: p.mu, volume, factorization, failures })
}
