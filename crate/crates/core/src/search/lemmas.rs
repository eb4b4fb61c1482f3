//! Executable forms of the structural statements about extending extremal
//! sets by one element. Each statement is evaluated on concrete input and
//! reported as passed, failed (a counterexample) or skipped (hypotheses not met).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sweep::{visit_partition, Bits};
use super::VolTable;
use crate::chains::ChainOracle;
use crate::dimension::{is_one_dimensional, right_candidates};
use crate::doubling::{legal_doublings, max_doubling, profile};
use crate::error::{Error, Result};
use crate::operators::{op_d, op_dx};
use crate::set::{IntSet, NormalSet};
use crate::stable::{stable_decompose, StableDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOutcome {
    pub check: String,
    pub status: LemmaStatus,
    pub detail: String,
}

impl LemmaOutcome {
    fn new(check: &str, status: LemmaStatus, detail: impl Into<String>) -> Self {
        LemmaOutcome { check: check.into(), status, detail: detail.into() }
    }

    fn skip(check: &str, detail: impl Into<String>) -> Self {
        Self::new(check, LemmaStatus::Skipped, detail)
    }

    fn verdict(check: &str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { LemmaStatus::Pass } else { LemmaStatus::Fail };
        Self::new(check, status, detail)
    }
}

pub const DOUBLING_INCREMENT: &str = "doubling_increment";
pub const EXTENSION_LOWER_BOUND: &str = "extension_lower_bound";
pub const EXTREMAL_EXTENSION: &str = "extremal_extension";
pub const SPARSE_STABLE_PARTS: &str = "sparse_stable_parts";
pub const RIGHT_UNIQUENESS: &str = "right_uniqueness";
pub const LEFT_UNIQUENESS: &str = "left_uniqueness";
pub const TWO_PROGRESSION_GROWTH: &str = "two_progression_growth";
pub const ONE_ODD_ELEMENT: &str = "one_odd_element";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionCheck {
    pub x: i64,
    pub t: usize,
    pub t_x: usize,
    pub delta_t: i64,
    /// `|2A ∩ (x + A)|`.
    pub overlap: usize,
    pub c_before: usize,
    pub c_after: usize,
    /// `T_x > 3(k+1) - 4` while `T <= 3k - 4`.
    pub crossing: bool,
    pub outcomes: Vec<LemmaOutcome>,
}

impl ExtensionCheck {
    pub fn failures(&self) -> impl Iterator<Item = &LemmaOutcome> {
        self.outcomes.iter().filter(|o| o.status == LemmaStatus::Fail)
    }
}

fn increment_ok(k: usize, delta_t: i64, overlap: usize, c_before: usize, c_after: usize) -> bool {
    delta_t == k as i64 + 1 - overlap as i64
        && (2..=k as i64).contains(&delta_t)
        && c_before.abs_diff(c_after) <= 1
}

/// Evaluates the one-element extension `A ∪ {x}` of a normal one-dimensional set.
///
/// The extremality statement needs a volume table; without one it is skipped.
pub fn check_extension_lemmas(a: &IntSet, x: i64, table: Option<&VolTable>) -> Result<ExtensionCheck> {
    if !a.is_normal() || !is_one_dimensional(a.elements()) {
        return Err(Error::Domain(format!("{a} is not a normal one-dimensional set")));
    }
    if !right_candidates(a).contains(&x) {
        return Err(Error::Domain(format!("{x} is not an extension candidate of {a}")));
    }
    let k = a.len();
    let t = a.doubling();
    let ax = a.with(x)?;
    let t_x = ax.doubling();
    let overlap = a.double().iter().filter(|&s| a.contains(s - x)).count();
    let delta_t = t_x as i64 - t as i64;
    let before = profile(k, t)?;
    let after = profile(k + 1, t_x)?;
    let crossing = t_x + 4 > 3 * (k + 1) && t + 4 <= 3 * k;

    let mut outcomes = vec![LemmaOutcome::verdict(
        DOUBLING_INCREMENT,
        increment_ok(k, delta_t, overlap, before.c, after.c),
        format!("dT = {delta_t}, overlap = {overlap}, c: {} -> {}", before.c, after.c),
    )];

    let am = a.max();
    let decomposition = if t + 4 <= 3 * k { stable_decompose(a).ok() } else { None };
    let extremal = am as u64 == before.mu;

    // lower bound on x for a decomposable extremal set
    outcomes.push(match &decomposition {
        None => LemmaOutcome::skip(EXTENSION_LOWER_BOUND, "no stable decomposition"),
        Some(_) if !extremal => LemmaOutcome::skip(EXTENSION_LOWER_BOUND, "max(A) != mu(k,T)"),
        Some(_) if x > 2 * am => LemmaOutcome::skip(EXTENSION_LOWER_BOUND, "x > 2 max(A)"),
        Some(_) if t_x + 4 <= 3 * (k + 1) => LemmaOutcome::skip(EXTENSION_LOWER_BOUND, "T_x <= 3(k+1) - 4"),
        Some(_) if (x as u64) < after.mu => LemmaOutcome::skip(EXTENSION_LOWER_BOUND, "x < mu(k+1,T_x)"),
        Some(d) => {
            let bound = 2 * am - (d.a1_max() + d.a2_max() - 2);
            LemmaOutcome::verdict(EXTENSION_LOWER_BOUND, x >= bound, format!("x = {x}, bound = {bound}"))
        }
    });

    outcomes.push(extremal_extension(a, x, &ax, decomposition.as_ref(), extremal, table)?);

    Ok(ExtensionCheck {
        x,
        t,
        t_x,
        delta_t,
        overlap,
        c_before: before.c,
        c_after: after.c,
        crossing,
        outcomes,
    })
}

fn extremal_extension(
    a: &IntSet,
    x: i64,
    ax: &IntSet,
    decomposition: Option<&StableDecomposition>,
    extremal: bool,
    table: Option<&VolTable>,
) -> Result<LemmaOutcome> {
    let (k, t, am) = (a.len(), a.doubling(), a.max());
    let t_x = ax.doubling();
    let check = EXTREMAL_EXTENSION;
    if decomposition.is_none() {
        return Ok(LemmaOutcome::skip(check, "no stable decomposition"));
    }
    if !extremal {
        return Ok(LemmaOutcome::skip(check, "max(A) != mu(k,T)"));
    }
    if t < 2 * k || t + 4 > 3 * k {
        return Ok(LemmaOutcome::skip(check, "b outside [1, k-3]"));
    }
    if x > 2 * am || t_x + 3 < 3 * (k + 1) {
        return Ok(LemmaOutcome::skip(check, "x > 2 max(A) or T_x < 3(k+1) - 3"));
    }
    let Some(table) = table else {
        return Ok(LemmaOutcome::skip(check, "no volume table"));
    };
    match table.is_1_extremal(ax)? {
        None => return Ok(LemmaOutcome::skip(check, "beyond the volume table")),
        Some(false) => return Ok(LemmaOutcome::skip(check, "A_x is not 1-extremal")),
        Some(true) => {}
    }
    let mu_x = profile(k + 1, t_x)?.mu as i64;
    let shifted = a.iter().filter(|&e| a.contains(e - (x - am))).count() as i64;
    let expect = (2 * am - x + 2) / 2;
    Ok(LemmaOutcome::verdict(
        check,
        x == mu_x && shifted == expect,
        format!("x = {x}, mu(k+1,T_x) = {mu_x}, |A ∩ (x-a+A)| = {shifted}, expected {expect}"),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSweep {
    pub k: usize,
    /// One-dimensional normal sets inspected.
    pub sets: usize,
    /// Extensions `A ∪ {x}` inspected.
    pub extensions: usize,
    /// `(A, x, reason)` for every extension breaking the doubling increment rules.
    pub failures: Vec<(IntSet, i64, String)>,
}

/// Checks the doubling increment rules for every one-dimensional normal `A`
/// with `|A| = k`, `max(A) <= mu(k,|2A|) + k`, and every `x` in `(2A - A)`
/// beyond `max(A)`. `T_x` is counted from the union, the overlap from the
/// intersection, so the identity between them is actually tested.
pub fn sweep_extension_lemma(k: usize) -> Result<ExtensionSweep> {
    if k < 3 {
        return Err(Error::Precondition("k >= 3".into()));
    }
    let caps: Vec<(usize, i64, usize)> = legal_doublings(k)
        .map(|t| Ok((t, profile(k, t)?.mu as i64 + k as i64, profile(k, t)?.c)))
        .collect::<Result<_>>()?;
    let top = caps.iter().map(|c| c.1).max().unwrap();
    if top > super::SWEEP_MAX_ELEMENT {
        return Err(Error::Capacity(format!("k = {k} needs elements up to {top}")));
    }
    let parts: Vec<ExtensionSweep> = ((k as i64 - 1)..=top)
        .into_par_iter()
        .map(|m| {
            let mut out = ExtensionSweep { k, sets: 0, extensions: 0, failures: Vec::new() };
            visit_partition(k, m, &mut |leaf| {
                let Some(&(t, cap, c)) = caps.iter().find(|c| c.0 == leaf.doubling) else {
                    return;
                };
                if m > cap || !is_one_dimensional(leaf.elements) {
                    return;
                }
                out.sets += 1;
                for x in (m + 1)..=(2 * m) {
                    let shifted: Bits = leaf.set_bits.shl(x as usize);
                    let overlap = leaf.sum_bits.and(&shifted).count();
                    if overlap == 0 {
                        continue;
                    }
                    out.extensions += 1;
                    let mut union = leaf.sum_bits.or(&shifted);
                    union.set(2 * x as usize);
                    let t_x = union.count();
                    let delta_t = t_x as i64 - t as i64;
                    let c_after = profile(k + 1, t_x).map(|p| p.c);
                    let ok = match c_after {
                        Ok(ca) => increment_ok(k, delta_t, overlap, c, ca),
                        Err(_) => false,
                    };
                    if !ok {
                        out.failures.push((
                            IntSet::new(leaf.elements.to_vec()).unwrap(),
                            x,
                            format!("T = {t}, T_x = {t_x}, overlap = {overlap}, c_after = {c_after:?}"),
                        ));
                    }
                }
            });
            out
        })
        .collect();
    let mut total = ExtensionSweep { k, sets: 0, extensions: 0, failures: Vec::new() };
    for p in parts {
        total.sets += p.sets;
        total.extensions += p.extensions;
        total.failures.extend(p.failures);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub set: IntSet,
    /// `D(A)` and whether it is 1-extremal (when the table reaches it).
    pub d_image: Option<IntSet>,
    pub d_image_extremal: Option<bool>,
    /// 1-extremal sets `D(A) ∪ {x}` with `2a < x <= 4a`.
    pub right_extremal_extensions: Vec<IntSet>,
    /// `A'` with `A = D_x(A')`, for sets with exactly one odd element.
    pub one_odd_preimage: Option<IntSet>,
    pub outcomes: Vec<LemmaOutcome>,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != LemmaStatus::Fail)
    }

    pub fn outcome(&self, check: &str) -> Option<&LemmaOutcome> {
        self.outcomes.iter().find(|o| o.check == check)
    }
}

fn tab(table: &VolTable, s: &IntSet) -> Option<bool> {
    table.is_1_extremal(s).ok().flatten()
}

/// 1-extremal sets `B ∪ {x}` for `lo < x <= hi`; `None` if any lies beyond the table.
fn extremal_extensions(b: &IntSet, lo: i64, hi: i64, table: &VolTable) -> Option<Vec<i64>> {
    let mut out = Vec::new();
    for x in (lo + 1)..=hi {
        let bx = b.with(x).ok()?;
        if !is_one_dimensional(bx.elements()) {
            continue;
        }
        if tab(table, &bx)? {
            out.push(x);
        }
    }
    Some(out)
}

/// Evaluates the uniqueness statements for chain growth on `A` (normalized
/// first). Inapplicable statements are reported as skipped with the reason.
pub fn check_uniqueness_lemmas(a: &IntSet, table: &VolTable) -> UniquenessReport {
    let a = a.normalize().set.into_set();
    let mut report = UniquenessReport {
        set: a.clone(),
        d_image: None,
        d_image_extremal: None,
        right_extremal_extensions: Vec::new(),
        one_odd_preimage: None,
        outcomes: Vec::new(),
    };
    let all = [
        SPARSE_STABLE_PARTS,
        RIGHT_UNIQUENESS,
        LEFT_UNIQUENESS,
        TWO_PROGRESSION_GROWTH,
        ONE_ODD_ELEMENT,
    ];
    if a.len() < 3 || !is_one_dimensional(a.elements()) {
        report.outcomes = all.iter().map(|c| LemmaOutcome::skip(c, "not a one-dimensional set of size >= 3")).collect();
        return report;
    }
    let oracle = ChainOracle::new();
    let chain = oracle.is_chain(&a);
    let normal = NormalSet::try_from(a.clone()).expect("normalized");

    let outcomes = vec![
        sparse_stable_parts(&a, chain),
        right_uniqueness(&normal, table, &mut report),
        left_uniqueness(&normal, chain, table),
        two_progression_growth(&a, &oracle),
        one_odd_element(&a, chain, &oracle, &mut report),
    ];
    report.outcomes = outcomes;
    report
}

fn sparse_stable_parts(a: &IntSet, chain: bool) -> LemmaOutcome {
    let check = SPARSE_STABLE_PARTS;
    if !chain {
        return LemmaOutcome::skip(check, "not a chain");
    }
    if a.doubling() + 4 > 3 * a.len() {
        return LemmaOutcome::skip(check, "|2A| > 3k - 4");
    }
    let Ok(d) = stable_decompose(a) else {
        return LemmaOutcome::verdict(check, false, "chain without a stable decomposition");
    };
    let consecutive = |s: &IntSet| s.elements().windows(2).any(|w| w[1] == w[0] + 1);
    let bad = consecutive(&d.a1) || consecutive(&d.a2);
    LemmaOutcome::verdict(check, !bad, format!("A1 = {}, A2 = {}", d.a1, d.a2))
}

fn right_uniqueness(a: &NormalSet, table: &VolTable, report: &mut UniquenessReport) -> LemmaOutcome {
    let check = RIGHT_UNIQUENESS;
    let (k, t, am) = (a.len(), a.doubling(), a.max());
    let Ok(b) = op_d(a) else {
        return LemmaOutcome::skip(check, "D(A) undefined");
    };
    report.d_image = Some(b.as_set().clone());
    report.d_image_extremal = tab(table, &b);
    if k + 2 > table.max_k() {
        return LemmaOutcome::skip(check, "extensions of D(A) lie beyond the volume table");
    }
    match tab(table, a) {
        Some(true) => {}
        Some(false) => return LemmaOutcome::skip(check, "A is not 1-extremal"),
        None => return LemmaOutcome::skip(check, "A lies beyond the volume table"),
    }
    let Some(xs) = extremal_extensions(&b, 2 * am, 4 * am, table) else {
        return LemmaOutcome::skip(check, "an extension lies beyond the volume table");
    };
    report.right_extremal_extensions = xs.iter().map(|&x| b.with(x).unwrap()).collect();
    let p = profile(k, t).expect("one-dimensional");
    let strict = am as u64 == p.mu && p.mu > 1 << p.c;
    let ok = if strict {
        xs.iter().all(|&x| x == 4 * am)
    } else {
        xs.iter().all(|&x| x == 3 * am || x == 4 * am)
    };
    let scope = if strict { "only 4a allowed" } else { "3a or 4a allowed" };
    LemmaOutcome::verdict(check, ok, format!("a = {am}, 1-extremal x = {xs:?} ({scope})"))
}

fn left_uniqueness(a: &NormalSet, chain: bool, table: &VolTable) -> LemmaOutcome {
    let check = LEFT_UNIQUENESS;
    let (k, t, am) = (a.len(), a.doubling(), a.max());
    if !chain {
        return LemmaOutcome::skip(check, "not a chain");
    }
    let p = profile(k, t).expect("one-dimensional");
    if am as u64 != p.mu || p.mu <= 1 << p.c {
        return LemmaOutcome::skip(check, "needs max(A) = mu(k,T) > 2^c");
    }
    if k + 2 > table.max_k() {
        return LemmaOutcome::skip(check, "extensions lie beyond the volume table");
    }
    // growth hypothesis: no y in (a, 2a) reaches mu(k+1, .) from either side;
    // terms whose doubling has no profile are left out
    let refl = a.reflect();
    for y in (am + 1)..(2 * am) {
        for s in [a.as_set(), refl.as_set()] {
            let sy = s.with(y).unwrap();
            if let Ok(q) = profile(k + 1, sy.doubling()) {
                if y as u64 >= q.mu {
                    return LemmaOutcome::skip(check, format!("growth hypothesis fails at y = {y}"));
                }
            }
        }
    }
    let b = op_d(a).expect("k >= 3").reflect();
    let Some(xs) = extremal_extensions(&b, 2 * am, 4 * am, table) else {
        return LemmaOutcome::skip(check, "an extension lies beyond the volume table");
    };
    LemmaOutcome::verdict(check, xs == [4 * am], format!("B = {b}, 1-extremal x = {xs:?}, expected [{}]", 4 * am))
}

fn two_progression(s: &IntSet) -> bool {
    s.len() >= 2 && s.is_progression(2)
}

fn two_progression_growth(a: &IntSet, oracle: &ChainOracle) -> LemmaOutcome {
    let check = TWO_PROGRESSION_GROWTH;
    let k = a.len();
    if a.doubling() + 4 > 3 * k {
        return LemmaOutcome::skip(check, "|2A| > 3k - 4");
    }
    let Ok(d) = stable_decompose(a) else {
        return LemmaOutcome::skip(check, "no stable decomposition");
    };
    if !(two_progression(&d.a1) && two_progression(&d.a2) && d.p_len >= 4) {
        return LemmaOutcome::skip(check, "stable parts are not 2-progressions with |P| >= 4");
    }
    if k + 2 > max_doubling_cap_k() {
        return LemmaOutcome::skip(check, "beyond the chain enumeration cap");
    }
    let mut tested = 0;
    let mut bad = Vec::new();
    for x in right_candidates(a) {
        let ax = a.with(x).unwrap();
        if ax.doubling() + 4 <= 3 * (k + 1) {
            continue;
        }
        for y in right_candidates(&ax) {
            let axy = ax.with(y).unwrap();
            if is_one_dimensional(axy.elements()) && oracle.is_chain(&axy) {
                tested += 1;
                if y != 2 * x {
                    bad.push(format!("A_xy = {axy}"));
                }
            }
        }
        let r = ax.reflexion().unwrap();
        for y in right_candidates(&r).into_iter().filter(|&y| y > x + 2) {
            let ry = r.with(y).unwrap();
            if is_one_dimensional(ry.elements()) && oracle.is_chain(&ry) {
                tested += 1;
                if y != 2 * x {
                    bad.push(format!("A'_xy = {ry}"));
                }
            }
        }
    }
    LemmaOutcome::verdict(check, bad.is_empty(), format!("{tested} chain extensions; offending: {bad:?}"))
}

fn max_doubling_cap_k() -> usize {
    crate::chains::ENUMERATION_CAP
}

fn one_odd_element(a: &IntSet, chain: bool, oracle: &ChainOracle, report: &mut UniquenessReport) -> LemmaOutcome {
    let check = ONE_ODD_ELEMENT;
    if !chain {
        return LemmaOutcome::skip(check, "not a chain");
    }
    if a.odd_count() != 1 || a.len() < 4 {
        return LemmaOutcome::skip(check, "needs exactly one odd element and k >= 4");
    }
    // sets are taken up to F-isomorphism, so the reflexion may be the D_x image
    let refl = a.reflexion().unwrap();
    let mut literal = String::new();
    let mut found = None;
    for (side, s) in [("A", a), ("A^-", &refl)] {
        let x = s.iter().find(|e| e % 2 != 0).unwrap();
        let pre = IntSet::new(s.iter().filter(|&e| e != x).map(|e| e / 2).collect()).unwrap();
        let rebuilt = NormalSet::try_from(pre.clone()).and_then(|p| op_dx(&p, x)).map(|r| r.into_set());
        let chain = oracle.is_chain(&pre);
        if rebuilt.as_ref() == Ok(s) && chain {
            found = Some((side, x, pre));
            break;
        }
        if literal.is_empty() {
            literal = format!("A' = {pre}: D_x(A') = {rebuilt:?}, chain = {chain}");
        }
    }
    let Some((side, x, pre)) = found else {
        return LemmaOutcome::verdict(check, false, literal);
    };
    report.one_odd_preimage = Some(pre.clone());
    let k = a.len();
    let mut bad = Vec::new();
    let mut tested = 0;
    if k + 1 <= max_doubling_cap_k() {
        let refl = a.reflexion().unwrap();
        for s in [a, &refl] {
            for y in right_candidates(s) {
                let b = s.with(y).unwrap();
                if b.doubling() + 4 > 3 * (k + 1) && b.doubling() <= max_doubling(k + 1) && oracle.is_chain(&b) {
                    tested += 1;
                    if b.odd_count() != 1 {
                        bad.push(b.to_string());
                    }
                }
            }
        }
    }
    LemmaOutcome::verdict(
        check,
        bad.is_empty(),
        format!("{side} = D_{x}({pre}); {tested} chains above 3k-4 containing A, offending: {bad:?}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::SearchConfig;
    use crate::set::set;

    fn table() -> VolTable {
        VolTable::new(7, SearchConfig::default())
    }

    #[test]
    fn extension_examples() {
        let c = check_extension_lemmas(&set("{0,1,2}"), 4, None).unwrap();
        assert_eq!((c.delta_t, c.overlap, c.t_x), (3, 1, 8));
        let c = check_extension_lemmas(&set("{0,1,2}"), 3, None).unwrap();
        assert_eq!(c.delta_t, 2);
        let c = check_extension_lemmas(&set("{0,2,3,4}"), 5, None).unwrap();
        assert_eq!((c.delta_t, c.t_x, c.t), (2, 10, 8));
        let c = check_extension_lemmas(&set("{0,2,3,4}"), 8, None).unwrap();
        assert_eq!((c.delta_t, c.t_x, c.t), (4, 12, 8));
        assert_eq!(c.failures().count(), 0);
        assert!(check_extension_lemmas(&set("{0,1,2}"), 9, None).is_err());
        assert!(check_extension_lemmas(&set("{0,1,2,5}"), 6, None).is_err());
    }

    #[test]
    fn overlap_matches_union_count_exhaustively_small() {
        let s = sweep_extension_lemma(4).unwrap();
        assert!(s.failures.is_empty(), "{:?}", s.failures);
        assert!(s.sets > 0 && s.extensions > s.sets);
    }

    #[test]
    fn right_uniqueness_boundary_case() {
        let t = table();
        let r = check_uniqueness_lemmas(&set("{0,1,2,4}"), &t);
        assert_eq!(r.d_image, Some(set("{0,1,2,4,8}")));
        assert_eq!(r.d_image_extremal, Some(true));
        assert_eq!(r.outcome(RIGHT_UNIQUENESS).unwrap().status, LemmaStatus::Pass, "{r:?}");
        assert_eq!(r.right_extremal_extensions, vec![set("{0,1,2,4,8,12}"), set("{0,1,2,4,8,16}")]);
        // D_1 is undefined on {0,1,2} since 1 ∈ {0,1,2}; the reflexion {0,2,3,4} is D_3({0,1,2})
        let odd = r.outcome(ONE_ODD_ELEMENT).unwrap();
        assert_eq!(odd.status, LemmaStatus::Pass, "{odd:?}");
        assert!(odd.detail.starts_with("A^- = D_3({0,1,2})"), "{odd:?}");
        assert_eq!(r.one_odd_preimage, Some(set("{0,1,2}")));
    }

    #[test]
    fn one_odd_example() {
        let t = table();
        let r = check_uniqueness_lemmas(&set("{0,4,5,6,8}"), &t);
        assert_eq!(r.one_odd_preimage, Some(set("{0,2,3,4}")));
        assert_eq!(r.outcome(ONE_ODD_ELEMENT).unwrap().status, LemmaStatus::Pass, "{r:?}");
    }

    #[test]
    fn non_sets_are_skipped() {
        let r = check_uniqueness_lemmas(&set("{0,1,2,5}"), &table());
        assert!(r.outcomes.iter().all(|o| o.status == LemmaStatus::Skipped));
    }
}
