//! File cache of rendered reports.
//!
//! Each entry is `<dir>/<key>.json` where the key is the SHA-256 of the
//! schema version, canonical group spec, operation and parameters.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliResult;
use crate::reports::SCHEMA;

/// Environment override for the cache directory.
pub const CACHE_DIR_ENV: &str = "KFIN_CACHE_DIR";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub schema: String,
    pub created_at: u64,
    pub value: String,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

pub fn cache_key(spec: &str, operation: &str, params: &[(&str, String)]) -> String {
    let mut h = Sha256::new();
    for part in [SCHEMA, spec, operation] {
        h.update(part.as_bytes());
        h.update([0u8]);
    }
    for (k, v) in params {
        h.update(k.as_bytes());
        h.update(b"=");
        h.update(v.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> CliResult<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored value; unreadable or stale entries count as misses.
    pub fn get(&self, key: &str) -> Option<String> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == key && entry.schema == SCHEMA).then_some(entry.value)
    }

    pub fn put(&self, key: &str, value: &str) -> CliResult<()> {
        let entry = CacheEntry {
            key: key.to_string(),
            schema: SCHEMA.to_string(),
            created_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
            value: value.to_string(),
        };
        // write-then-rename so concurrent readers never see a partial file
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(tmp, self.path(key))?;
        Ok(())
    }

    pub fn get_or_compute(
        &self,
        key: &str,
        compute: impl FnOnce() -> CliResult<String>,
    ) -> CliResult<String> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = compute()?;
        self.put(key, &v)?;
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path()).unwrap();
        let key = cache_key("Z/6", "ffin", &[("radius", "8".into())]);
        assert_eq!(key.len(), 64);
        assert_ne!(key, cache_key("Z/6", "ffin", &[("radius", "9".into())]));
        assert!(cache.get(&key).is_none());
        let v = cache.get_or_compute(&key, || Ok("{\"a\":1}".into())).unwrap();
        let again = cache
            .get_or_compute(&key, || panic!("should be cached"))
            .unwrap();
        assert_eq!(v, again);
        fs::write(cache.path(&key), "not json").unwrap();
        assert!(cache.get(&key).is_none());
    }
}
