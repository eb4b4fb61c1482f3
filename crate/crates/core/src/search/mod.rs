//! Brute-force oracles over normal one-dimensional sets: volume tables, the
//! conjectured volume bound, 1-extremality, and executable lemma checks.
//!
//! Sweeps are partitioned by the maximum element `m`. Partitions are disjoint
//! and processed in parallel; results are merged in ascending `m`, so reports
//! are identical from run to run regardless of thread count.

pub mod cache;
pub mod lemmas;
pub mod sweep;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimension::is_one_dimensional;
use crate::doubling::{legal_doublings, profile};
use crate::error::{Error, Result};
use crate::operators::op_d;
use crate::set::{IntSet, NormalSet};
use sweep::{visit_partition, SWEEP_MAX_ELEMENT};

pub use lemmas::{
    check_extension_lemmas, check_uniqueness_lemmas, sweep_extension_lemma, ExtensionCheck,
    ExtensionSweep, LemmaOutcome, LemmaStatus, UniquenessReport,
};

/// Default ceiling on the number of candidate sets a sweep may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub threads: Option<usize>,
    pub budget: u64,
    pub force: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { threads: None, budget: DEFAULT_BUDGET, force: false }
    }
}

impl SearchConfig {
    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> Result<R> {
        match self.threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map(|pool| pool.install(job))
                .map_err(|e| Error::Capacity(format!("thread pool: {e}"))),
            None => Ok(job()),
        }
    }

    fn admit(&self, k: usize, bound: i64) -> Result<()> {
        if bound > SWEEP_MAX_ELEMENT {
            return Err(Error::Capacity(format!(
                "search bound {bound} exceeds the supported maximum {SWEEP_MAX_ELEMENT}"
            )));
        }
        let n = estimate_count(k, bound);
        if n > self.budget as f64 && !self.force {
            return Err(Error::Capacity(format!(
                "sweep would visit about {n:.3e} sets (budget {}); pass force to run anyway",
                self.budget
            )));
        }
        Ok(())
    }
}

fn binomial(n: i64, r: i64) -> f64 {
    if r < 0 || r > n {
        return 0.0;
    }
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Upper estimate of the number of sets `{0 < … < m}` with `m <= bound`
/// (before the gcd filter).
pub fn estimate_count(k: usize, bound: i64) -> f64 {
    ((k as i64 - 1)..=bound)
        .map(|m| binomial(m - 1, k as i64 - 2))
        .sum()
}

/// Streams all normal sets of cardinality `k` with maximum at most `max_elem`,
/// ordered by maximum and then lexicographically.
pub struct NormalSets {
    k: usize,
    max_elem: i64,
    current: Option<Vec<i64>>,
}

/// See [`NormalSets`]. Capacity errors carry the estimated count.
pub fn enumerate_normal_sets(k: usize, max_elem: i64, budget: u64) -> Result<NormalSets> {
    if k < 3 || max_elem < k as i64 - 1 {
        return Err(Error::Precondition(format!(
            "need k >= 3 and max_elem >= k - 1 (k = {k}, max_elem = {max_elem})"
        )));
    }
    let n = estimate_count(k, max_elem);
    if n > budget as f64 {
        return Err(Error::Capacity(format!("about {n:.3e} sets exceed budget {budget}")));
    }
    Ok(NormalSets { k, max_elem, current: None })
}

impl NormalSets {
    /// Resumes after `cursor` (a previously yielded set).
    pub fn resume_after(mut self, cursor: &IntSet) -> Result<Self> {
        if cursor.len() != self.k || !cursor.is_normal() {
            return Err(Error::Precondition(format!("{cursor} is not a valid cursor")));
        }
        self.current = Some(cursor.elements().to_vec());
        Ok(self)
    }

    fn step(&self, cur: &[i64]) -> Option<Vec<i64>> {
        let k = self.k;
        let m = cur[k - 1];
        let mut v = cur.to_vec();
        // advance the interior combination a_1 < … < a_{k-2} inside (0, m)
        let mut i = k - 2;
        while i >= 1 {
            let limit = m - (k - 1 - i) as i64;
            if v[i] < limit {
                v[i] += 1;
                for j in i + 1..k - 1 {
                    v[j] = v[j - 1] + 1;
                }
                return Some(v);
            }
            i -= 1;
        }
        let m = m + 1;
        (m <= self.max_elem).then(|| {
            let mut v: Vec<i64> = (0..k as i64 - 1).collect();
            v.push(m);
            v
        })
    }
}

impl Iterator for NormalSets {
    type Item = NormalSet;

    fn next(&mut self) -> Option<NormalSet> {
        loop {
            let next = match &self.current {
                None => (0..self.k as i64).collect(),
                Some(cur) => self.step(cur)?,
            };
            self.current = Some(next.clone());
            let s = IntSet::new(next).expect("increasing");
            if let Ok(n) = NormalSet::try_from(s) {
                return Some(n);
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchReport {
    pub k: usize,
    pub t: usize,
    pub c: usize,
    pub b: usize,
    pub mu: u64,
    /// Largest `max + 1` over one-dimensional normal sets found; 0 if none.
    pub observed_max_vol: i64,
    /// Normal sets attaining `observed_max_vol`, ascending.
    pub witness_sets: Vec<IntSet>,
    /// One-dimensional sets with volume above `mu + 1`.
    pub violation_list: Vec<IntSet>,
    /// The constructed set of volume `mu + 1` appears among the witnesses.
    pub attained: bool,
    pub search_bound: i64,
    /// Dimension scope of the sweep.
    pub scope: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

// wall-clock time is not part of a report's identity
impl PartialEq for SearchReport {
    fn eq(&self, o: &Self) -> bool {
        (self.k, self.t, self.c, self.b, self.mu, self.observed_max_vol) == (o.k, o.t, o.c, o.b, o.mu, o.observed_max_vol)
            && self.witness_sets == o.witness_sets
            && self.violation_list == o.violation_list
            && self.attained == o.attained
            && self.search_bound == o.search_bound
            && self.scope == o.scope
    }
}

impl Eq for SearchReport {}

impl SearchReport {
    pub fn verified(&self) -> bool {
        self.violation_list.is_empty() && self.attained && self.observed_max_vol == self.mu as i64 + 1
    }
}

/// `mu(k, T) + k`: room above the conjectured bound for a violation to show up.
pub fn default_bound(k: usize, t: usize) -> Result<i64> {
    Ok(profile(k, t)?.mu as i64 + k as i64)
}

/// A normal one-dimensional set with `|A| = k`, `|2A| = T` and `max = mu(k, T)`:
/// `{0} ∪ [b+1, k+b-1]` when `T <= 3k - 4`, otherwise `D` of the construction
/// for `(k - 1, T - (k - 1))`.
pub fn extremal_construction(k: usize, t: usize) -> Result<NormalSet> {
    let p = profile(k, t)?;
    if p.c == 2 {
        let b = p.b as i64;
        let mut v = vec![0];
        v.extend((b + 1)..=(k as i64 + b - 1));
        return NormalSet::try_from(IntSet::new(v)?);
    }
    op_d(&extremal_construction(k - 1, t - (k - 1))?)
}

#[derive(Default)]
struct Partial {
    // per T: number of 1-dim sets at this m within the T's bound
    hits: BTreeMap<usize, usize>,
    violations: BTreeMap<usize, Vec<IntSet>>,
}

/// Sweeps cardinality `k` for every `(T, bound)` target at once.
pub fn sweep_vol1(k: usize, targets: &[(usize, i64)], cfg: &SearchConfig) -> Result<Vec<SearchReport>> {
    if k < 3 {
        return Err(Error::Precondition("sweeps need k >= 3".into()));
    }
    let mut bounds: BTreeMap<usize, i64> = BTreeMap::new();
    for &(t, bound) in targets {
        let mu = profile(k, t)?.mu as i64;
        if bound < mu {
            return Err(Error::Precondition(format!("bound {bound} is below mu({k},{t}) = {mu}")));
        }
        bounds.insert(t, bound);
    }
    let top = bounds.values().copied().max().unwrap_or(k as i64 - 1);
    cfg.admit(k, top)?;
    let started = Instant::now();
    let mus: BTreeMap<usize, i64> =
        bounds.keys().map(|&t| (t, profile(k, t).unwrap().mu as i64)).collect();

    let partials: Vec<(i64, Partial)> = cfg.run(|| {
        ((k as i64 - 1)..=top)
            .into_par_iter()
            .map(|m| {
                let mut part = Partial::default();
                visit_partition(k, m, &mut |leaf| {
                    let t = leaf.doubling;
                    let Some(&bound) = bounds.get(&t) else { return };
                    if m > bound || !is_one_dimensional(leaf.elements) {
                        return;
                    }
                    *part.hits.entry(t).or_default() += 1;
                    if m > mus[&t] {
                        part.violations
                            .entry(t)
                            .or_default()
                            .push(IntSet::new(leaf.elements.to_vec()).unwrap());
                    }
                });
                (m, part)
            })
            .collect()
    })?;

    let mut best: BTreeMap<usize, i64> = BTreeMap::new();
    let mut violations: BTreeMap<usize, Vec<IntSet>> = BTreeMap::new();
    for (m, part) in partials {
        for t in part.hits.keys() {
            best.insert(*t, m);
        }
        for (t, v) in part.violations {
            violations.entry(t).or_default().extend(v);
        }
    }

    // second pass: collect witnesses at the winning maximum of each T
    let mut by_m: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (&t, &m) in &best {
        by_m.entry(m).or_default().push(t);
    }
    let jobs: Vec<(i64, Vec<usize>)> = by_m.into_iter().collect();
    let found: Vec<BTreeMap<usize, Vec<IntSet>>> = cfg.run(|| {
        jobs.par_iter()
            .map(|(m, ts)| {
                let mut w: BTreeMap<usize, Vec<IntSet>> = BTreeMap::new();
                visit_partition(k, *m, &mut |leaf| {
                    if ts.contains(&leaf.doubling) && is_one_dimensional(leaf.elements) {
                        w.entry(leaf.doubling)
                            .or_default()
                            .push(IntSet::new(leaf.elements.to_vec()).unwrap());
                    }
                });
                w
            })
            .collect()
    })?;
    let mut witnesses: BTreeMap<usize, Vec<IntSet>> = BTreeMap::new();
    for w in found {
        witnesses.extend(w);
    }
    let elapsed = started.elapsed();

    bounds
        .iter()
        .map(|(&t, &bound)| {
            let p = profile(k, t)?;
            let witness_sets = witnesses.remove(&t).unwrap_or_default();
            let attained = k >= 4 && {
                let c = extremal_construction(k, t)?;
                witness_sets.iter().any(|w| w == c.as_set())
            } || (k == 3 && witness_sets.iter().any(|w| w.max() as u64 == p.mu));
            Ok(SearchReport {
                k,
                t,
                c: p.c,
                b: p.b,
                mu: p.mu,
                observed_max_vol: best.get(&t).map_or(0, |m| m + 1),
                witness_sets,
                violation_list: violations.remove(&t).unwrap_or_default(),
                attained,
                search_bound: bound,
                scope: "one-dimensional sets".into(),
                elapsed,
            })
        })
        .collect()
}

/// Largest one-dimensional volume for `(k, T)` among normal sets with max <= bound.
pub fn vol1_oracle(k: usize, t: usize, bound: Option<i64>, cfg: &SearchConfig) -> Result<SearchReport> {
    let bound = match bound {
        Some(b) => b,
        None => default_bound(k, t)?,
    };
    Ok(sweep_vol1(k, &[(t, bound)], cfg)?.pop().expect("one target"))
}

/// One report per legal `T` for cardinality `k`, each with the default bound.
pub fn verify_conjecture(k: usize, cfg: &SearchConfig) -> Result<Vec<SearchReport>> {
    if k < 4 {
        return Err(Error::Precondition("the volume bound is stated for k >= 4".into()));
    }
    let targets = legal_doublings(k)
        .map(|t| Ok((t, default_bound(k, t)?)))
        .collect::<Result<Vec<_>>>()?;
    sweep_vol1(k, &targets, cfg)
}

/// Whether `A` attains the largest one-dimensional volume for its `(k, T)`.
pub fn is_1_extremal(a: &IntSet, cfg: &SearchConfig) -> Result<bool> {
    if a.len() < 2 || !is_one_dimensional(a.elements()) {
        return Err(Error::Precondition(format!("{a} is not one-dimensional")));
    }
    let (k, t) = (a.len(), a.doubling());
    let vol = a.normalize().set.as_set().max() + 1;
    let bound = default_bound(k, t)?.max(vol - 1);
    let report = vol1_oracle(k, t, Some(bound), cfg)?;
    Ok(vol == report.observed_max_vol)
}

/// Lazily computed table of largest one-dimensional volumes, one full sweep
/// per cardinality.
pub struct VolTable {
    cfg: SearchConfig,
    max_k: usize,
    rows: Mutex<HashMap<usize, BTreeMap<usize, i64>>>,
}

impl VolTable {
    pub fn new(max_k: usize, cfg: SearchConfig) -> Self {
        VolTable { cfg, max_k, rows: Mutex::new(HashMap::new()) }
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    /// `None` when `k` is beyond the table's cardinality cap.
    ///
    /// A miss sweeps every doubling whose bound does not exceed the bound for
    /// `t`, so small doublings never pay for the largest ones.
    pub fn max_vol(&self, k: usize, t: usize) -> Result<Option<i64>> {
        if k > self.max_k || k < 3 {
            return Ok(None);
        }
        let reach = default_bound(k, t)?;
        if let Some(row) = self.rows.lock().unwrap().get(&k) {
            if let Some(&v) = row.get(&t) {
                return Ok(Some(v));
            }
        }
        let have: Vec<usize> = self.rows.lock().unwrap().get(&k).map(|r| r.keys().copied().collect()).unwrap_or_default();
        let mut targets = Vec::new();
        for u in legal_doublings(k) {
            let b = default_bound(k, u)?;
            if b <= reach && !have.contains(&u) {
                targets.push((u, b));
            }
        }
        let found = sweep_vol1(k, &targets, &self.cfg)?;
        let mut rows = self.rows.lock().unwrap();
        let row = rows.entry(k).or_default();
        for r in found {
            row.insert(r.t, r.observed_max_vol);
        }
        Ok(row.get(&t).copied())
    }

    /// `Some(true)` iff `A` is one-dimensional with the table's volume.
    pub fn is_1_extremal(&self, a: &IntSet) -> Result<Option<bool>> {
        if a.len() < 2 || !is_one_dimensional(a.elements()) {
            return Ok(Some(false));
        }
        let (k, t) = (a.len(), a.doubling());
        if profile(k, t).is_err() {
            return Ok(Some(false));
        }
        let vol = a.normalize().set.as_set().max() + 1;
        Ok(self.max_vol(k, t)?.map(|best| vol == best))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::set;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    // Oracle: all subsets of [0, max] containing 0 with k elements and gcd 1.
    fn brute_normal_sets(k: usize, max: i64) -> Vec<IntSet> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << (max + 1)) {
            if mask & 1 == 0 || mask.count_ones() as usize != k {
                continue;
            }
            let v: Vec<i64> = (0..=max).filter(|i| mask >> i & 1 == 1).collect();
            let s = IntSet::new(v).unwrap();
            if s.is_normal() {
                out.push(s);
            }
        }
        out.sort_by(|a, b| (a.max(), a.elements()).cmp(&(b.max(), b.elements())));
        out
    }

    #[test]
    fn enumeration_examples() {
        let v: Vec<IntSet> = enumerate_normal_sets(3, 3, DEFAULT_BUDGET).unwrap().map(Into::into).collect();
        assert_eq!(v, vec![set("{0,1,2}"), set("{0,1,3}"), set("{0,2,3}")]);
        let n = enumerate_normal_sets(4, 4, DEFAULT_BUDGET).unwrap().count();
        assert_eq!(n, brute_normal_sets(4, 4).len());
        assert_eq!(n, 4);
        let v: Vec<IntSet> = enumerate_normal_sets(6, 5, DEFAULT_BUDGET).unwrap().map(Into::into).collect();
        assert_eq!(v, vec![IntSet::segment(0, 5).unwrap()]);
        assert!(matches!(enumerate_normal_sets(8, 200, 1000), Err(Error::Capacity(_))));
        assert!(enumerate_normal_sets(2, 5, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn enumeration_agrees_with_brute_force_and_resumes() {
        for (k, max) in [(3, 7), (4, 9), (5, 10)] {
            let all: Vec<IntSet> =
                enumerate_normal_sets(k, max, DEFAULT_BUDGET).unwrap().map(Into::into).collect();
            assert_eq!(all, brute_normal_sets(k, max));
            let mid = &all[all.len() / 2];
            let rest: Vec<IntSet> = enumerate_normal_sets(k, max, DEFAULT_BUDGET)
                .unwrap()
                .resume_after(mid)
                .unwrap()
                .map(Into::into)
                .collect();
            assert_eq!(rest, all[all.len() / 2 + 1..]);
        }
    }

    #[test]
    fn oracle_examples() {
        let r = vol1_oracle(5, 12, Some(16), &cfg()).unwrap();
        assert_eq!(r.observed_max_vol, 9);
        assert!(r.witness_sets.contains(&set("{0,1,2,4,8}")));
        assert!(r.witness_sets.contains(&set("{0,4,6,7,8}")));
        assert!(r.violation_list.is_empty() && r.attained);

        let r = vol1_oracle(4, 7, Some(8), &cfg()).unwrap();
        assert_eq!((r.observed_max_vol, r.witness_sets.clone()), (4, vec![set("{0,1,2,3}")]));

        assert_eq!(vol1_oracle(5, 11, Some(12), &cfg()).unwrap().observed_max_vol, 7);
        assert!(vol1_oracle(5, 11, Some(3), &cfg()).is_err());
    }

    #[test]
    fn one_extremal_examples() {
        assert!(is_1_extremal(&set("{0,1,2,4,8}"), &cfg()).unwrap());
        assert!(is_1_extremal(&set("{0,3,4,6,7,8}"), &cfg()).unwrap());
        // doubling 10, volume 6 = mu(5,10) + 1
        let a = set("{0,1,2,3,5}");
        assert_eq!(a.doubling(), 10);
        assert!(is_1_extremal(&a, &cfg()).unwrap());
        assert!(is_1_extremal(&set("{0,1,2,3,4,6}"), &cfg()).unwrap());
        // doubling 11, volume 6 < 7
        assert!(!is_1_extremal(&set("{0,1,2,4,5}"), &cfg()).unwrap());
        assert!(is_1_extremal(&set("{0,1,2,5}"), &cfg()).is_err());
    }

    #[test]
    fn conjecture_small_k() {
        let vols: Vec<i64> = verify_conjecture(5, &cfg()).unwrap().iter().map(|r| r.observed_max_vol).collect();
        assert_eq!(vols, vec![5, 6, 7, 9]);
        for k in 4..=6 {
            for r in verify_conjecture(k, &cfg()).unwrap() {
                assert!(r.verified(), "k={k} T={}", r.t);
            }
        }
    }

    #[test]
    fn construction_hits_mu() {
        for k in 4..=10 {
            for t in legal_doublings(k) {
                let a = extremal_construction(k, t).unwrap();
                assert_eq!(a.doubling(), t);
                assert_eq!(a.as_set().max() as u64, profile(k, t).unwrap().mu);
                assert!(is_one_dimensional(a.elements()));
            }
        }
    }

    #[test]
    fn budget_guard() {
        let tight = SearchConfig { budget: 10, ..SearchConfig::default() };
        assert!(matches!(vol1_oracle(6, 14, None, &tight), Err(Error::Capacity(_))));
        let forced = SearchConfig { budget: 10, force: true, ..SearchConfig::default() };
        assert!(vol1_oracle(5, 10, None, &forced).is_ok());
        assert!(matches!(vol1_oracle(5, 10, Some(300), &forced), Err(Error::Capacity(_))));
    }

    #[test]
    fn thread_count_does_not_change_reports() {
        let one = SearchConfig { threads: Some(1), ..SearchConfig::default() };
        let four = SearchConfig { threads: Some(4), ..SearchConfig::default() };
        assert_eq!(verify_conjecture(6, &one).unwrap(), verify_conjecture(6, &four).unwrap());
    }
}
