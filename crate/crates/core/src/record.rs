//! Line-oriented records for chains and volume reports, with validating decoders.

use serde::{Deserialize, Serialize};

use crate::chains::EnumeratedChain;
use crate::doubling::profile;
use crate::error::{Error, Result};
use crate::operators::{factorize, Factorization};
use crate::search::SearchReport;
use crate::set::IntSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub set: IntSet,
    pub t: usize,
    pub c: usize,
    pub b: usize,
    pub mu: u64,
    pub vol: i64,
    pub factorization: Option<Factorization>,
}

impl ChainRecord {
    pub fn from_chain(chain: &EnumeratedChain) -> Self {
        let set = chain.set.as_set().clone();
        let p = chain.profile;
        let factorization = if set.len() >= 4 { factorize(&set).ok() } else { None };
        ChainRecord { vol: IntSet::max(&set) + 1, set, t: p.t, c: p.c, b: p.b, mu: p.mu, factorization }
    }

    /// Recomputes every derived field from `set` and compares.
    pub fn validate(&self) -> Result<()> {
        let k = self.set.len();
        if !self.set.is_normal() {
            return Err(Error::Invariant(format!("{} is not normal", self.set)));
        }
        let t = self.set.doubling();
        let p = profile(k, t)?;
        if (self.t, self.c, self.b, self.mu, self.vol) != (t, p.c, p.b, p.mu, IntSet::max(&self.set) + 1) {
            return Err(Error::Invariant(format!("record fields disagree with {}", self.set)));
        }
        if let Some(f) = &self.factorization {
            if f.replay()?.len() != k {
                return Err(Error::Invariant("factorization replays to a different size".into()));
            }
        }
        Ok(())
    }
}

pub fn to_jsonl<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for it in items {
        out.push_str(&serde_json::to_string(it).expect("serializable"));
        out.push('\n');
    }
    out
}

/// Decodes one chain record per non-blank line and validates each.
pub fn parse_chain_records(text: &str) -> Result<Vec<ChainRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let r: ChainRecord =
                serde_json::from_str(l).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
            r.validate()?;
            Ok(r)
        })
        .collect()
}

/// Decodes a JSON volume report and checks its internal consistency.
pub fn parse_search_report(text: &str) -> Result<SearchReport> {
    let r: SearchReport = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let p = profile(r.k, r.t)?;
    if (p.c, p.b, p.mu) != (r.c, r.b, r.mu) {
        return Err(Error::Invariant("profile fields disagree with (k, t)".into()));
    }
    let shape = |s: &IntSet| s.len() == r.k && s.is_normal() && s.max() <= r.search_bound;
    if !r.witness_sets.iter().chain(&r.violation_list).all(shape) {
        return Err(Error::Invariant("listed set outside the report's search space".into()));
    }
    if r.witness_sets.iter().any(|w| w.max() + 1 != r.observed_max_vol) {
        return Err(Error::Invariant("witness volume differs from observed_max_vol".into()));
    }
    Ok(r)
}
