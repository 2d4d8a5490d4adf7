//! Disk cache of `PolyJSON` files keyed by `(family, n, d, ν, m)`.
//!
//! The directory comes from `MPCONE_CACHE_DIR`; when unset nothing is read or
//! written. Unreadable, corrupt or stale entries are logged and recomputed,
//! never fatal.

use std::path::{Path, PathBuf};

use crate::polyjson::{PolyJson, Provenance, SCHEMA_VERSION};
use crate::CliResult;

pub const CACHE_ENV: &str = "MPCONE_CACHE_DIR";

/// What happened on a lookup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup {
    Disabled,
    Hit,
    Miss,
    Corrupt,
    VersionMismatch,
}

#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

fn slug(text: &str) -> String {
    let mut out = String::new();
    for ch in text.chars() {
        match ch {
            'A'..='Z' => {
                out.push('_');
                out.push(ch.to_ascii_lowercase());
            }
            'a'..='z' | '0'..='9' | '-' => out.push(ch),
            '/' => out.push('o'),
            _ => out.push('.'),
        }
    }
    out
}

impl Cache {
    pub fn from_env() -> Self {
        Cache { dir: std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from) }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, key: &Provenance) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let m: Vec<String> = key.m.iter().map(|x| x.to_string()).collect();
        let name = format!(
            "{}-n{}-d{}-nu{}-m{}.json",
            slug(&key.family),
            key.n,
            slug(&key.d),
            slug(key.nu.as_deref().unwrap_or("none")),
            m.join("_")
        );
        Some(dir.join(name))
    }

    pub fn load(&self, key: &Provenance) -> (Option<PolyJson>, Lookup) {
        let Some(path) = self.path_for(key) else {
            return (None, Lookup::Disabled);
        };
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return (None, Lookup::Miss),
            Err(e) => {
                log::warn!("cache entry {} unreadable ({e}); recomputing", path.display());
                return (None, Lookup::Corrupt);
            }
        };
        let value: serde_json::Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => {
                log::warn!("cache entry {} is corrupt ({e}); recomputing", path.display());
                return (None, Lookup::Corrupt);
            }
        };
        if value.get("schema").and_then(|v| v.as_u64()) != Some(SCHEMA_VERSION as u64) {
            log::info!("cache entry {} has another schema version; recomputing", path.display());
            return (None, Lookup::VersionMismatch);
        }
        match serde_json::from_value::<PolyJson>(value) {
            Ok(j) if &j.provenance == key && j.coeffs().is_ok() => (Some(j), Lookup::Hit),
            Ok(_) => {
                log::warn!("cache entry {} does not match its key; recomputing", path.display());
                (None, Lookup::Corrupt)
            }
            Err(e) => {
                log::warn!("cache entry {} is corrupt ({e}); recomputing", path.display());
                (None, Lookup::Corrupt)
            }
        }
    }

    /// Writes through a temporary file and a rename; failures are logged.
    pub fn store(&self, j: &PolyJson) {
        let Some(path) = self.path_for(&j.provenance) else {
            return;
        };
        let write = || -> std::io::Result<()> {
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent)?;
            }
            let tmp = path.with_extension(format!("tmp{}", std::process::id()));
            std::fs::write(&tmp, j.to_json())?;
            std::fs::rename(&tmp, &path)
        };
        if let Err(e) = write() {
            log::warn!("could not write cache entry {}: {e}", path.display());
        }
    }

    pub fn get_or_compute(
        &self,
        key: &Provenance,
        compute: impl FnOnce() -> CliResult<PolyJson>,
    ) -> CliResult<(PolyJson, Lookup)> {
        let (hit, lookup) = self.load(key);
        if let Some(j) = hit {
            return Ok((j, lookup));
        }
        let j = compute()?;
        self.store(&j);
        Ok((j, lookup))
    }
}
