//! On-disk cache of Verma windows. Entries are JSON files named by a hash of
//! their key, carry a SHA-256 checksum of the payload, and are replaced
//! atomically (write to a temporary file, then rename).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::roots::{LieAlgebra, Weight};
use crate::verma::{build_window, VermaWindow, WindowDoc, ORDERING_TAG};

/// Bumping this invalidates every existing entry.
pub const CACHE_VERSION: u32 = 1;

/// Environment variable naming the cache directory when no flag is given.
pub const CACHE_ENV: &str = "LIEO_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub cartan_type: String,
    pub lambda: Vec<String>,
    pub depth: usize,
    pub ordering: String,
    pub version: u32,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: CacheKey,
    checksum: String,
    payload: WindowDoc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// The entry was unusable and has been rebuilt.
    Recomputed(String),
}

#[derive(Clone, Debug)]
pub struct WindowCache {
    dir: PathBuf,
    version: u32,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn checksum(doc: &WindowDoc) -> Result<String> {
    let bytes = serde_json::to_vec(doc).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(sha256_hex(&bytes))
}

impl WindowCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        Self::with_version(dir, CACHE_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: u32) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        Ok(WindowCache { dir, version })
    }

    /// The explicit directory if given, else the environment variable.
    pub fn resolve(flag: Option<&Path>) -> Result<Option<Self>> {
        match flag {
            Some(d) => Self::new(d).map(Some),
            None => match std::env::var_os(CACHE_ENV) {
                Some(d) if !d.is_empty() => Self::new(PathBuf::from(d)).map(Some),
                _ => Ok(None),
            },
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(&self, cartan_type: &str, lambda: &Weight, depth: usize) -> CacheKey {
        CacheKey {
            cartan_type: cartan_type.to_string(),
            lambda: lambda.coords.iter().map(ToString::to_string).collect(),
            depth,
            ordering: ORDERING_TAG.into(),
            version: self.version,
        }
    }

    /// File for a key; the version is left out so that a newer version
    /// finds and replaces a stale entry.
    pub fn path(&self, key: &CacheKey) -> PathBuf {
        let id = format!("{}|{}|{}|{}", key.cartan_type, key.lambda.join(","), key.depth, key.ordering);
        self.dir.join(format!("window-{}.json", &sha256_hex(id.as_bytes())[..24]))
    }

    pub fn store(&self, window: &VermaWindow) -> Result<PathBuf> {
        let key = self.key(&window.cartan_type, &window.lambda, window.depth);
        let payload = window.to_doc();
        let entry = CacheEntry {
            checksum: checksum(&payload)?,
            key,
            payload,
        };
        let path = self.path(&entry.key);
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        serde_json::to_writer(&mut tmp, &entry).map_err(|e| Error::Cache(e.to_string()))?;
        tmp.flush().map_err(io)?;
        tmp.persist(&path).map_err(|e| io(e.error))?;
        Ok(path)
    }

    /// `Ok(None)` when there is no entry or it belongs to another version;
    /// `Err` when the entry is corrupt.
    pub fn load(&self, cartan_type: &str, lambda: &Weight, depth: usize) -> Result<Option<VermaWindow>> {
        let key = self.key(cartan_type, lambda, depth);
        let path = self.path(&key);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let entry: CacheEntry = serde_json::from_slice(&bytes)
            .map_err(|e| Error::Cache(format!("unreadable entry {}: {e}", path.display())))?;
        if entry.key.version != self.version {
            return Ok(None);
        }
        if entry.key != key {
            return Err(Error::Cache(format!("key mismatch in {}", path.display())));
        }
        if checksum(&entry.payload)? != entry.checksum {
            return Err(Error::Cache(format!("checksum mismatch in {}", path.display())));
        }
        VermaWindow::from_doc(&entry.payload).map(Some)
    }

    /// Loads the window, building and storing it on a miss. Corrupt entries
    /// are rebuilt and reported through the status.
    pub fn get_or_build(
        &self,
        alg: &Arc<LieAlgebra>,
        lambda: &Weight,
        depth: usize,
    ) -> Result<(VermaWindow, CacheStatus)> {
        let cartan_type = alg.root_system().cartan_type().to_string();
        let status = match self.load(&cartan_type, lambda, depth) {
            Ok(Some(w)) => return Ok((w, CacheStatus::Hit)),
            Ok(None) => CacheStatus::Miss,
            Err(e) => CacheStatus::Recomputed(e.to_string()),
        };
        let window = build_window(Arc::clone(alg), lambda, depth)?;
        self.store(&window)?;
        Ok((window, status))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (tempfile::TempDir, Arc<LieAlgebra>, Weight) {
        let dir = tempfile::tempdir().unwrap();
        let alg = Arc::new(LieAlgebra::from_type_str("A2").unwrap());
        (dir, alg, Weight::fundamental(vec![1, -1]))
    }

    #[test]
    fn roundtrip() {
        let (dir, alg, lam) = setup();
        let cache = WindowCache::new(dir.path()).unwrap();
        let w = build_window(Arc::clone(&alg), &lam, 6).unwrap();
        cache.store(&w).unwrap();
        assert_eq!(cache.load("A2", &lam, 6).unwrap(), Some(w.clone()));
        assert_eq!(cache.load("A2", &lam, 5).unwrap(), None);
        let (warm, status) = cache.get_or_build(&alg, &lam, 6).unwrap();
        assert_eq!(status, CacheStatus::Hit);
        assert_eq!(warm, w);
    }

    #[test]
    fn version_bump_invalidates() {
        let (dir, alg, lam) = setup();
        let old = WindowCache::with_version(dir.path(), CACHE_VERSION).unwrap();
        old.store(&build_window(Arc::clone(&alg), &lam, 3).unwrap()).unwrap();
        let new = WindowCache::with_version(dir.path(), CACHE_VERSION + 1).unwrap();
        assert_eq!(new.load("A2", &lam, 3).unwrap(), None);
        let (_, status) = new.get_or_build(&alg, &lam, 3).unwrap();
        assert_eq!(status, CacheStatus::Miss);
        assert!(new.load("A2", &lam, 3).unwrap().is_some());
        assert_eq!(old.load("A2", &lam, 3).unwrap(), None);
    }

    #[test]
    fn corruption_is_detected_and_recomputed() {
        let (dir, alg, lam) = setup();
        let cache = WindowCache::new(dir.path()).unwrap();
        let cold = build_window(Arc::clone(&alg), &lam, 4).unwrap();
        let path = cache.store(&cold).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        // flip one Gram entry without touching the checksum
        let tampered = text.replacen("\"grams\":[[[0,0],[[\"1\"]]]", "\"grams\":[[[0,0],[[\"2\"]]]", 1);
        assert_ne!(text, tampered);
        fs::write(&path, tampered).unwrap();
        assert!(matches!(cache.load("A2", &lam, 4), Err(Error::Cache(_))));
        let (w, status) = cache.get_or_build(&alg, &lam, 4).unwrap();
        assert!(matches!(status, CacheStatus::Recomputed(_)));
        assert_eq!(w, cold);
        fs::write(&path, b"not json").unwrap();
        assert!(cache.load("A2", &lam, 4).is_err());
    }
}
