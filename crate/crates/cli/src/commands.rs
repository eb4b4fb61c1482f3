use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use freiman_core::chains::{enumerate_chains, is_chain, verify_main_theorem};
use freiman_core::dimension::{additive_dim, f_isomorphic, lambda};
use freiman_core::doubling::{legal_doublings, profile};
use freiman_core::operators::factorize;
use freiman_core::record::{to_jsonl, ChainRecord};
use freiman_core::search::cache::{report_key, ReportCache};
use freiman_core::search::lemmas::{check_uniqueness_lemmas, sweep_extension_lemma, LemmaStatus};
use freiman_core::search::{default_bound, sweep_vol1, SearchConfig, SearchReport, VolTable};
use freiman_core::stable::stable_decompose;
use freiman_core::Error;
use serde_json::json;

use crate::output::{emit, write_meta, write_reports};
use crate::{Command, RunArgs, SearchArgs, Verdict};

pub fn run(cmd: Command) -> Result<Verdict> {
    match cmd {
        Command::Mu { k, t } => {
            if k < 4 {
                eprintln!("warning: the volume bound is stated for k >= 4; k = {k} is outside its range");
            }
            println!("{}", serde_json::to_string(&profile(k, t)?)?);
            Ok(Verdict::Pass)
        }
        Command::Dim { set } => {
            let dim = additive_dim(&set)?;
            println!("{}", json!({ "lambda": lambda(set.elements()), "dim": dim }));
            Ok(Verdict::Pass)
        }
        Command::Decompose { set } => {
            match stable_decompose(&set) {
                Ok(d) => println!("{}", serde_json::to_string(&d)?),
                Err(Error::NotDecomposable) => println!("{}", json!({ "error": "not_decomposable" })),
                Err(e) => return Err(e.into()),
            }
            Ok(Verdict::Pass)
        }
        Command::ChainCheck { set } => {
            match is_chain(&set)? {
                Some(cert) => println!("{}", json!({ "chain": true, "certificate": cert })),
                None => println!("{}", json!({ "chain": false })),
            }
            Ok(Verdict::Pass)
        }
        Command::ChainEnum { k, out } => {
            let records: Vec<ChainRecord> = enumerate_chains(k)?.iter().map(ChainRecord::from_chain).collect();
            let text = to_jsonl(&records);
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(Verdict::Pass)
        }
        Command::Factorize { set } => match factorize(&set) {
            Ok(f) => {
                println!("{}", serde_json::to_string(&f)?);
                Ok(Verdict::Pass)
            }
            Err(Error::FactorizationFailed(s)) => {
                println!("{}", json!({ "error": "factorization_failed", "set": s }));
                Ok(Verdict::Counterexample)
            }
            Err(e) => Err(e.into()),
        },
        Command::Fiso { a, b } => {
            let map = f_isomorphic(&a, &b)?;
            println!("{}", json!({ "isomorphic": map.is_some(), "map": map }));
            Ok(Verdict::Pass)
        }
        Command::Search(args) => search(args),
        Command::Verify { k, run, out } => verify(k, &run, out.as_deref()),
    }
}

fn config(run: &RunArgs) -> SearchConfig {
    SearchConfig { threads: run.threads, force: run.force, ..SearchConfig::default() }
}

/// Serves targets from the cache where possible and sweeps the rest in one pass.
fn search_reports(k: usize, targets: &[(usize, i64)], cfg: &SearchConfig, cache: Option<&ReportCache>) -> Result<(Vec<SearchReport>, usize)> {
    let mut found: BTreeMap<usize, SearchReport> = BTreeMap::new();
    let mut missing = Vec::new();
    for &(t, bound) in targets {
        match cache.map(|c| c.get::<SearchReport>(&report_key(k, t, bound))).transpose()?.flatten() {
            Some(r) => {
                found.insert(t, r);
            }
            None => missing.push((t, bound)),
        }
    }
    let hits = found.len();
    if !missing.is_empty() {
        for r in sweep_vol1(k, &missing, cfg)? {
            if let Some(c) = cache {
                c.put(&report_key(k, r.t, r.search_bound), &r)?;
            }
            found.insert(r.t, r);
        }
    }
    Ok((found.into_values().collect(), hits))
}

fn search(args: SearchArgs) -> Result<Verdict> {
    let started = std::time::SystemTime::now();
    let clock = Instant::now();
    let k = args.k;
    if k < 4 {
        eprintln!("warning: the volume bound is stated for k >= 4; k = {k} is outside its range");
    }
    let ts: Vec<usize> = match args.t {
        Some(t) => {
            profile(k, t)?;
            vec![t]
        }
        None => legal_doublings(k).collect(),
    };
    let targets = ts
        .iter()
        .map(|&t| Ok((t, args.bound.map_or_else(|| default_bound(k, t), Ok)?)))
        .collect::<Result<Vec<_>>>()?;
    let cache = (!args.no_cache).then(ReportCache::from_env);
    let cfg = config(&args.run);
    let (reports, hits) = search_reports(k, &targets, &cfg, cache.as_ref())?;
    let text = emit(&reports, args.format)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            write_meta(path, started, clock.elapsed(), &args, hits)?;
        }
        None => print!("{text}"),
    }
    Ok(if reports.iter().any(|r| !r.violation_list.is_empty()) {
        Verdict::Counterexample
    } else {
        Verdict::Pass
    })
}

fn verify(k: usize, run: &RunArgs, out: Option<&Path>) -> Result<Verdict> {
    if k < 4 {
        bail!("verify needs k >= 4");
    }
    let cfg = config(run);
    let mut failed = false;
    let mut summary = |check: &str, ok: bool, detail: serde_json::Value| {
        failed |= !ok;
        println!("{}", json!({ "check": check, "pass": ok, "detail": detail }));
    };

    let targets = legal_doublings(k)
        .map(|t| Ok((t, default_bound(k, t)?)))
        .collect::<Result<Vec<_>>>()?;
    let (reports, _) = search_reports(k, &targets, &cfg, Some(&ReportCache::from_env()))?;
    let off: Vec<usize> = reports.iter().filter(|r| !r.verified()).map(|r| r.t).collect();
    summary("volume_bound", off.is_empty(), json!({ "doublings": reports.len(), "not_verified": off }));

    let ext = sweep_extension_lemma(k)?;
    summary(
        "extension_rules",
        ext.failures.is_empty(),
        json!({ "sets": ext.sets, "extensions": ext.extensions, "failures": ext.failures.len() }),
    );

    let chains = enumerate_chains(k)?;
    let mut theorem = Vec::new();
    for c in &chains {
        let cert = is_chain(c.set.as_set())?.context("enumerated set is not recognized as a chain")?;
        theorem.push(verify_main_theorem(&cert)?);
    }
    let bad = theorem.iter().filter(|r| !r.passed()).count();
    summary("chain_structure", bad == 0, json!({ "chains": chains.len(), "failures": bad }));

    let table = VolTable::new(k + 2, cfg.clone());
    let lemmas: Vec<_> = chains.iter().map(|c| check_uniqueness_lemmas(c.set.as_set(), &table)).collect();
    let mut tally: BTreeMap<String, [usize; 3]> = BTreeMap::new();
    for r in &lemmas {
        for o in &r.outcomes {
            let slot = match o.status {
                LemmaStatus::Pass => 0,
                LemmaStatus::Fail => 1,
                LemmaStatus::Skipped => 2,
            };
            tally.entry(o.check.clone()).or_default()[slot] += 1;
        }
    }
    let lemma_fail = tally.values().any(|v| v[1] > 0);
    let tally: BTreeMap<_, _> = tally
        .into_iter()
        .map(|(name, [p, f, s])| (name, json!({ "pass": p, "fail": f, "skipped": s })))
        .collect();
    summary("chain_growth", !lemma_fail, json!(tally));

    if let Some(dir) = out {
        write_reports(dir, &reports, &ext, &theorem, &lemmas)?;
    }
    Ok(if failed { Verdict::Counterexample } else { Verdict::Pass })
}

