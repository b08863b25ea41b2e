//! On-disk cache of computed exponents.
//!
//! One file per exponent at
//! `<root>/cache/v<FORMAT_VERSION>/n<n>/K<K>/W<m>.<path>.json`. Each file
//! holds the lookup key, the canonical polynomial JSON as an opaque string
//! and the SHA-256 of that string.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;
use zassenhaus_core::freealg::AssocPoly;

/// Bumped whenever the canonical JSON or the display grammar changes.
pub const FORMAT_VERSION: u32 = 1;

/// Overrides the cache root when `--cache` is not given.
pub const CACHE_ENV: &str = "ZASSENHAUS_CACHE_DIR";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O error at {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed cache entry {path}: {message}")]
    Malformed { path: PathBuf, message: String },
    #[error("cache entry {path} was written for a different key")]
    KeyMismatch { path: PathBuf },
    #[error("cache entry {path} failed its digest check (stored {stored}, computed {computed})")]
    DigestMismatch {
        path: PathBuf,
        stored: String,
        computed: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CacheKey {
    pub n: usize,
    pub max_degree: usize,
    pub m: usize,
    pub path: String,
    pub version: u32,
}

impl CacheKey {
    pub fn new(n: usize, max_degree: usize, m: usize, path: &str) -> Self {
        CacheKey {
            n,
            max_degree,
            m,
            path: path.to_string(),
            version: FORMAT_VERSION,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub payload: String,
    pub digest: String,
}

pub fn digest(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

impl CacheEntry {
    pub fn new(key: CacheKey, poly: &AssocPoly) -> Self {
        let payload = poly.to_json_string();
        CacheEntry {
            digest: digest(&payload),
            key,
            payload,
        }
    }

    /// Decodes the payload and checks it belongs to the key: right
    /// generator count, truncation degree and homogeneous degree `m`.
    pub fn poly(&self, origin: &Path) -> Result<AssocPoly, CacheError> {
        let malformed = |message: String| CacheError::Malformed {
            path: origin.to_path_buf(),
            message,
        };
        let poly = AssocPoly::from_json_str(&self.payload).map_err(|e| malformed(e.to_string()))?;
        let ctx = poly.ctx();
        if ctx.n() != self.key.n || ctx.max_degree() != self.key.max_degree {
            return Err(malformed(format!(
                "payload context {ctx} does not match the key"
            )));
        }
        if !poly.is_zero() && !poly.is_homogeneous_of(self.key.m) {
            return Err(malformed(format!(
                "payload is not homogeneous of degree {}",
                self.key.m
            )));
        }
        Ok(poly)
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Cache { root: root.into() }
    }

    /// `--cache` if given, else the environment variable, else no cache.
    pub fn resolve(flag: Option<&Path>) -> Option<Cache> {
        flag.map(Path::to_path_buf)
            .or_else(|| {
                std::env::var_os(CACHE_ENV)
                    .filter(|v| !v.is_empty())
                    .map(PathBuf::from)
            })
            .map(Cache::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn entry_path(&self, key: &CacheKey) -> PathBuf {
        self.root
            .join("cache")
            .join(format!("v{}", key.version))
            .join(format!("n{}", key.n))
            .join(format!("K{}", key.max_degree))
            .join(format!("W{}.{}.json", key.m, key.path))
    }

    /// Writes through a temporary file and renames it into place.
    pub fn store(&self, entry: &CacheEntry) -> Result<PathBuf, CacheError> {
        let path = self.entry_path(&entry.key);
        let io_err = |source| CacheError::Io {
            path: path.clone(),
            source,
        };
        let dir = path.parent().expect("entry paths have a parent");
        fs::create_dir_all(dir).map_err(io_err)?;
        let body = serde_json::to_string(entry).expect("plain data serializes");
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        fs::write(&tmp, body).map_err(io_err)?;
        fs::rename(&tmp, &path).map_err(io_err)?;
        Ok(path)
    }

    /// `Ok(None)` when there is no entry; errors when one exists but
    /// cannot be trusted.
    pub fn load(&self, key: &CacheKey) -> Result<Option<CacheEntry>, CacheError> {
        let path = self.entry_path(key);
        let body = match fs::read_to_string(&path) {
            Ok(body) => body,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        let entry: CacheEntry = serde_json::from_str(&body).map_err(|e| CacheError::Malformed {
            path: path.clone(),
            message: e.to_string(),
        })?;
        if &entry.key != key {
            return Err(CacheError::KeyMismatch { path });
        }
        let computed = digest(&entry.payload);
        if computed != entry.digest {
            return Err(CacheError::DigestMismatch {
                path,
                stored: entry.digest,
                computed,
            });
        }
        Ok(Some(entry))
    }

    /// Loads and decodes one exponent.
    pub fn load_poly(&self, key: &CacheKey) -> Result<Option<AssocPoly>, CacheError> {
        match self.load(key)? {
            Some(entry) => entry.poly(&self.entry_path(key)).map(Some),
            None => Ok(None),
        }
    }
}
