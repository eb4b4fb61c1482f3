//! Content-addressed store for finished reports. Entries are named by the
//! SHA-256 of their key and never rewritten once present.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const CACHE_DIR_ENV: &str = "FREIMAN_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".freiman-cache";

#[derive(Debug, Clone)]
pub struct ReportCache {
    dir: PathBuf,
}

impl ReportCache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        ReportCache { dir: dir.into() }
    }

    /// Directory from `FREIMAN_CACHE_DIR`, else `.freiman-cache`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV).map_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR), PathBuf::from);
        Self::at(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        self.dir.join(format!("{}.json", hex::encode(digest)))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Result<Option<T>> {
        let path = self.path_for(key);
        match fs::read(&path) {
            Ok(bytes) => serde_json::from_slice(&bytes)
                .map(Some)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Stores `value` unless an entry for `key` already exists.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> Result<PathBuf> {
        let path = self.path_for(key);
        if path.exists() {
            return Ok(path);
        }
        fs::create_dir_all(&self.dir)?;
        let bytes = serde_json::to_vec_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}

/// Cache key for a sweep target.
pub fn report_key(k: usize, t: usize, bound: i64) -> String {
    format!("vol1/v1/k={k}/t={t}/bound={bound}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_append_only() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ReportCache::at(dir.path());
        let key = report_key(5, 12, 13);
        assert_eq!(cache.get::<Vec<i64>>(&key).unwrap(), None);
        let p = cache.put(&key, &vec![1i64, 2, 3]).unwrap();
        assert!(p.starts_with(dir.path()));
        cache.put(&key, &vec![9i64]).unwrap();
        assert_eq!(cache.get::<Vec<i64>>(&key).unwrap(), Some(vec![1, 2, 3]));
        assert_ne!(cache.path_for(&key), cache.path_for(&report_key(5, 12, 14)));
    }
}
