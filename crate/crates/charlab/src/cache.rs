//! Advisory result cache for `charlab analyze`.
//!
//! Keyed by group fingerprint, prime, and tool version; a hit replays the
//! stored analysis fragment byte-for-byte. The cache is never required
//! for correctness: any read or parse problem is treated as a miss, and
//! writes go through a temporary file renamed into place so concurrent
//! writers never expose a partial entry.

use std::fs;
use std::path::{Path, PathBuf};
use std::process;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::TOOL_VERSION;

pub const CACHE_SCHEMA: &str = "charlab/cache/v1";

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "CHARLAB_CACHE_DIR";

/// The fragment of an analyze run that is worth replaying: everything
/// derived from the character table of one group at one prime.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalysisFragment {
    pub profile: Value,
    pub detector: Option<Value>,
    pub mckay: Option<Value>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    schema: String,
    tool_version: String,
    fingerprint: String,
    prime: u64,
    fragment: AnalysisFragment,
}

/// Resolved cache location, or `None` when caching is disabled (no usable
/// directory, or the caller opted out).
pub fn cache_dir(disabled: bool) -> Option<PathBuf> {
    if disabled {
        return None;
    }
    if let Ok(dir) = std::env::var(CACHE_DIR_ENV) {
        if dir.is_empty() {
            return None;
        }
        return Some(PathBuf::from(dir));
    }
    if let Ok(dir) = std::env::var("XDG_CACHE_HOME") {
        if !dir.is_empty() {
            return Some(Path::new(&dir).join("charlab"));
        }
    }
    std::env::var("HOME")
        .ok()
        .filter(|h| !h.is_empty())
        .map(|h| Path::new(&h).join(".cache").join("charlab"))
}

fn entry_path(dir: &Path, fingerprint: &str, prime: u64) -> PathBuf {
    dir.join(format!("{fingerprint}-p{prime}-v{TOOL_VERSION}.json"))
}

pub fn lookup(dir: &Path, fingerprint: &str, prime: u64) -> Option<AnalysisFragment> {
    let text = fs::read_to_string(entry_path(dir, fingerprint, prime)).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    if entry.schema != CACHE_SCHEMA
        || entry.tool_version != TOOL_VERSION
        || entry.fingerprint != fingerprint
        || entry.prime != prime
    {
        return None;
    }
    Some(entry.fragment)
}

/// Best-effort store; failures are ignored (the cache is advisory).
pub fn store(dir: &Path, fingerprint: &str, prime: u64, fragment: &AnalysisFragment) {
    let entry = CacheEntry {
        schema: CACHE_SCHEMA.to_string(),
        tool_version: TOOL_VERSION.to_string(),
        fingerprint: fingerprint.to_string(),
        prime,
        fragment: fragment.clone(),
    };
    let Ok(text) = serde_json::to_string_pretty(&entry) else {
        return;
    };
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    let path = entry_path(dir, fingerprint, prime);
    let tmp = dir.join(format!(
        ".tmp-{}-{fingerprint}-p{prime}",
        process::id()
    ));
    if fs::write(&tmp, text).is_ok() {
        let _ = fs::rename(&tmp, &path);
    }
}
