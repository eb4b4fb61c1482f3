//! Acceptance suite. One test per criterion; each prints a single
//! `criterion N ... PASS|FAIL` line and fails when the criterion does.
//!
//! Run with `cargo test -p freiman-core --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use freiman_core::chains::{enumerate_chains, is_chain, verify_main_theorem};
use freiman_core::dimension::{additive_dim, lambda};
use freiman_core::doubling::{doubling_from_profile, legal_doublings, mu, profile};
use freiman_core::operators::{factorize, is_legal_dx, op_d, op_dx, PhiStep};
use freiman_core::search::{
    extremal_construction, is_1_extremal, sweep_extension_lemma, verify_conjecture, SearchConfig,
    SearchReport,
};
use freiman_core::set::{set, IntSet, NormalSet};
use freiman_core::stable::{is_right_stable, is_stable, stable_decompose};

// Wall-clock ceilings. Generous against the targets so that slow CI hosts
// do not flake; the printed line reports the measured time.
const CHAIN_TABLE_LIMIT: Duration = Duration::from_secs(1);
const DIMENSION_LIMIT: Duration = Duration::from_millis(1);
const MU_LIMIT: Duration = Duration::from_secs(1);
const EXTENSION_SWEEP_LIMIT: Duration = Duration::from_secs(600);
const CONJECTURE_LIMIT: Duration = Duration::from_secs(900);

const CONJECTURE_KS: std::ops::RangeInclusive<usize> = 4..=7;

fn line(n: u32, name: &str, ok: bool, detail: impl AsRef<str>) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {name:<32} {verdict}  {}", detail.as_ref());
    assert!(ok, "criterion {n} ({name}) failed: {}", detail.as_ref());
}

fn conjecture_reports() -> &'static (Vec<SearchReport>, Duration) {
    static REPORTS: OnceLock<(Vec<SearchReport>, Duration)> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let start = Instant::now();
        let cfg = SearchConfig::default();
        let reports = CONJECTURE_KS
            .flat_map(|k| verify_conjecture(k, &cfg).expect("sweep within budget"))
            .collect();
        (reports, start.elapsed())
    })
}

fn ns(s: &str) -> NormalSet {
    s.parse().unwrap()
}

#[test]
fn criterion_01_chain_table() {
    let start = Instant::now();
    let chains = enumerate_chains(5).unwrap();
    let elapsed = start.elapsed();
    let figure = [
        ("{0,1,2,3,4}", 9),
        ("{0,2,3,4,5}", 10),
        ("{0,2,4,5,6}", 11),
        ("{0,3,4,5,6}", 11),
        ("{0,2,3,4,6}", 11),
        ("{0,4,5,6,8}", 12),
        ("{0,4,6,7,8}", 12),
    ];
    let mut expected: Vec<(usize, Vec<i64>)> =
        figure.iter().map(|(s, t)| (*t, ns(s).canonical().elements().to_vec())).collect();
    expected.sort();
    let mut got: Vec<(usize, Vec<i64>)> = chains.iter().map(|c| (c.profile.t, c.set.elements().to_vec())).collect();
    got.sort();
    let doublings: Vec<usize> = got.iter().map(|g| g.0).collect();
    let mut maxima: Vec<i64> = chains.iter().map(|c| c.set.max()).collect();
    maxima.sort();
    let ok = chains.len() == 7
        && doublings == [9, 10, 11, 11, 11, 12, 12]
        && got == expected
        && maxima == [4, 5, 6, 6, 6, 8, 8]
        && elapsed < CHAIN_TABLE_LIMIT;
    line(1, "chain table k=5", ok, format!("{} chains, doublings {doublings:?}, maxima {maxima:?}, {elapsed:?}", chains.len()));
}

#[test]
fn criterion_02_dimension_examples() {
    let start = Instant::now();
    let a = set("{0,1,2,4}");
    let b = set("{0,1,2,5}");
    let (da, la, db) = (additive_dim(&a).unwrap(), lambda(a.elements()), additive_dim(&b).unwrap());
    let elapsed = start.elapsed();
    let ok = da == 1 && la == 2 && db == 2 && elapsed < DIMENSION_LIMIT;
    line(2, "dimension examples", ok, format!("dim{{0,1,2,4}} = {da} (lambda {la}), dim{{0,1,2,5}} = {db}, {elapsed:?}"));
}

#[test]
fn criterion_03_stability_examples() {
    let s = set("{0,4,5,8,9,12}");
    let r = set("{0,2,3,6}");
    let clauses = [
        ("stable{0,4,5,8,9,12}", is_stable(&s).unwrap()),
        ("!right_stable{0,4,5,8,9,12}", !is_right_stable(&s).unwrap()),
        ("right_stable{0,2,3,6}", is_right_stable(&r).unwrap()),
        ("!stable{0,2,3,6}", !is_stable(&r).unwrap()),
        ("stable{0}", is_stable(&set("{0}")).unwrap()),
    ];
    let failed: Vec<&str> = clauses.iter().filter(|c| !c.1).map(|c| c.0).collect();
    line(3, "stability examples", failed.is_empty(), format!("failed clauses: {failed:?}"));
}

#[test]
fn criterion_04_mu_coherence() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 4..=12 {
        let mut last = 0;
        for t in legal_doublings(k) {
            let p = profile(k, t).unwrap();
            if mu(k + 1, t + k).unwrap() != 2 * p.mu {
                bad.push(format!("doubling identity at ({k},{t})"));
            }
            if p.mu <= last {
                bad.push(format!("not increasing at ({k},{t})"));
            }
            last = p.mu;
            if doubling_from_profile(k, p.c, p.b).unwrap() != t {
                bad.push(format!("round trip at ({k},{t})"));
            }
        }
    }
    let elapsed = start.elapsed();
    line(4, "mu coherence k in [4,12]", bad.is_empty() && elapsed < MU_LIMIT, format!("{bad:?} {elapsed:?}"));
}

#[test]
fn criterion_05_operator_postconditions() {
    let (reports, _) = conjecture_reports();
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in reports {
        for w in &r.witness_sets {
            if w.max() as u64 != r.mu {
                continue;
            }
            let a = NormalSet::try_from(w.clone()).unwrap();
            let (k, t) = (r.k, r.t);
            let target = mu(k + 1, t + k).unwrap() as i64;
            let d = op_d(&a).unwrap();
            checked += 1;
            if d.doubling() != t + k || d.max() != target {
                bad.push(format!("D{w}"));
            }
            for x in a.double().iter().filter(|&x| is_legal_dx(&a, x)) {
                let dx = op_dx(&a, x).unwrap();
                checked += 1;
                if dx.doubling() != t + k || dx.max() != target {
                    bad.push(format!("D_{x}{w}"));
                }
            }
        }
    }
    line(5, "operator postconditions", bad.is_empty() && checked > 0, format!("{checked} applications, failures {bad:?}"));
}

#[test]
fn criterion_06_extension_sweep() {
    let start = Instant::now();
    let mut sets = 0;
    let mut exts = 0;
    let mut failures = Vec::new();
    for k in 3..=7 {
        let s = sweep_extension_lemma(k).unwrap();
        sets += s.sets;
        exts += s.extensions;
        failures.extend(s.failures);
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < EXTENSION_SWEEP_LIMIT;
    line(6, "extension sweep k<=7", ok, format!("{sets} sets, {exts} extensions, {} exceptions, {elapsed:?}", failures.len()));
}

#[test]
fn criterion_07_conjecture_desk_scale() {
    let (reports, elapsed) = conjecture_reports();
    let mut bad = Vec::new();
    for r in reports {
        let construction = extremal_construction(r.k, r.t).unwrap();
        let has_construction = r.witness_sets.contains(construction.as_set());
        if r.observed_max_vol != r.mu as i64 + 1 || !r.violation_list.is_empty() || !has_construction {
            bad.push((r.k, r.t, r.observed_max_vol, r.mu));
        }
    }
    let per_k: BTreeMap<usize, usize> = reports.iter().fold(BTreeMap::new(), |mut m, r| {
        *m.entry(r.k).or_default() += 1;
        m
    });
    let ok = bad.is_empty() && *elapsed < CONJECTURE_LIMIT;
    line(7, "conjecture k in [4,7]", ok, format!("(k, #T) {per_k:?}, mismatches {bad:?}, {elapsed:?}"));
}

#[test]
fn criterion_08_main_theorem() {
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 4..=8 {
        for c in enumerate_chains(k).unwrap() {
            let cert = is_chain(c.set.as_set()).unwrap().expect("enumerated sets are chains");
            let report = verify_main_theorem(&cert).unwrap();
            checked += 1;
            if !report.passed() {
                bad.push(format!("{}: {:?}", c.set, report.failures));
            }
        }
    }
    line(8, "main theorem k in [4,8]", bad.is_empty(), format!("{checked} chains, failures {bad:?}"));
}

#[test]
fn criterion_09_negative_controls() {
    let cfg = SearchConfig::default();
    let a = set("{0,3,4,6,7,8}");
    let first = is_1_extremal(&a, &cfg).unwrap()
        && a.doubling() == 14
        && a.max() as u64 == mu(6, 14).unwrap()
        && is_chain(&a).unwrap().is_none();

    let e = set("{0,1,2,4,8}");
    let d = op_d(&ns("{0,1,2,4}")).unwrap();
    let extremal = is_1_extremal(&e, &cfg).unwrap();
    let not_d = &e != d.as_set();
    let f = factorize(&e).unwrap();
    let d2 = f.base == ns("{0,1,2}") && f.steps == [PhiStep::D, PhiStep::D];

    // the set the "not of the form D(B)" remark can refer to: x = 3a
    let intended = set("{0,1,2,4,6}");
    let intended_ok = is_1_extremal(&intended, &cfg).unwrap()
        && intended.without(6).map(|b| 2 * b.max()) != Some(6);
    println!(
        "criterion  9 (aside) {{0,1,2,4,6}} 1-extremal and not D({{0,1,2,4}}): {}",
        if intended_ok { "holds" } else { "does not hold" }
    );

    let ok = first && extremal && not_d && d2;
    line(
        9,
        "negative controls",
        ok,
        format!(
            "{{0,3,4,6,7,8}} extremal non-chain: {first}; {{0,1,2,4,8}} 1-extremal: {extremal}, != D({{0,1,2,4}}) = {}: {not_d}, D^2({{0,1,2}}): {d2}",
            d
        ),
    );
}

#[test]
fn criterion_10_small_doubling_structure() {
    let (reports, _) = conjecture_reports();
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in reports {
        let (k, t) = (r.k, r.t);
        if t + 4 > 3 * k {
            continue;
        }
        let b = (t + 1 - 2 * k) as i64;
        for w in &r.witness_sets {
            checked += 1;
            if w.length() != k as i64 + b {
                bad.push(format!("{w}: length"));
                continue;
            }
            let Ok(dec) = stable_decompose(w) else {
                bad.push(format!("{w}: no unique decomposition"));
                continue;
            };
            let two = w.double();
            let p_len = two.max() + 1 - dec.a1_max() - dec.a2_max();
            let rebuilt = IntSet::segment(0, p_len - 1)
                .and_then(|p| dec.a1.concat(&p))
                .and_then(|s| s.concat(&dec.a2));
            if rebuilt.as_ref() != Ok(&two) || p_len < t as i64 - b {
                bad.push(format!("{w}: 2A shape, |P'| = {p_len}"));
            }
        }
    }
    line(10, "3k-4 structure k in [4,7]", bad.is_empty() && checked > 0, format!("{checked} sets, failures {bad:?}"));
}
