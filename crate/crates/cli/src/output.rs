use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use freiman_core::chains::MainTheoremReport;
use freiman_core::record::to_jsonl;
use freiman_core::search::lemmas::{ExtensionSweep, UniquenessReport};
use freiman_core::search::SearchReport;
use serde_json::json;

use crate::{Format, SearchArgs};

/// Renders search reports. Nothing time-dependent goes into the data itself.
pub fn emit(reports: &[SearchReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(reports)? + "\n",
        Format::Jsonl => to_jsonl(reports),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "t", "c", "b", "mu", "observed_max_vol", "attained", "witness", "violations"])?;
            for r in reports {
                let witness = r.witness_sets.first().map(|s| s.to_string()).unwrap_or_default();
                w.write_record([
                    r.k.to_string(),
                    r.t.to_string(),
                    r.c.to_string(),
                    r.b.to_string(),
                    r.mu.to_string(),
                    r.observed_max_vol.to_string(),
                    r.attained.to_string(),
                    witness,
                    r.violation_list.len().to_string(),
                ])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    })
}

fn meta_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

fn unix(t: SystemTime) -> u64 {
    t.duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// Timestamps and run parameters live in `<out>.meta.json`, never in `<out>`.
pub fn write_meta(out: &Path, started: SystemTime, elapsed: Duration, args: &SearchArgs, cache_hits: usize) -> Result<()> {
    let meta = json!({
        "started_unix": unix(started),
        "finished_unix": unix(SystemTime::now()),
        "elapsed_secs": elapsed.as_secs_f64(),
        "k": args.k,
        "t": args.t,
        "bound": args.bound,
        "threads": args.run.threads,
        "force": args.run.force,
        "cache": !args.no_cache,
        "cache_hits": cache_hits,
        "scope": "one-dimensional sets only",
    });
    let path = meta_path(out);
    std::fs::write(&path, serde_json::to_string_pretty(&meta)? + "\n")
        .with_context(|| format!("writing {}", path.display()))
}

pub fn write_reports(
    dir: &Path,
    volumes: &[SearchReport],
    ext: &ExtensionSweep,
    theorem: &[MainTheoremReport],
    lemmas: &[UniquenessReport],
) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let files = [
        ("volumes.jsonl", to_jsonl(volumes)),
        ("extensions.json", serde_json::to_string_pretty(ext)? + "\n"),
        ("chains.jsonl", to_jsonl(theorem)),
        ("growth.jsonl", to_jsonl(lemmas)),
    ];
    for (name, text) in files {
        let path = dir.join(name);
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meta_sits_next_to_output() {
        assert_eq!(meta_path(Path::new("out/r.csv")), PathBuf::from("out/r.csv.meta.json"));
    }
}
