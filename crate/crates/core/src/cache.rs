//! On-disk cache of KR crystals: `{family}_{n}/{r}x{s}.krz`, a JSON file
//! holding the sorted vertex tableaux and the `f_0` table.

use crate::cartan::AffineType;
use crate::classical::{Tableau, NONE};
use crate::crystal::Crystal;
use crate::kr::{KrCrystal, KrError};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Changes whenever generated crystals could change.
pub const CACHE_VERSION: &str = concat!("kr-crystals-", env!("CARGO_PKG_VERSION"), "-1");

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache format: {0}")]
    Format(#[from] serde_json::Error),
    #[error("cache entry is stale or mismatched: {0}")]
    Stale(String),
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    family: String,
    n: usize,
    r: usize,
    s: usize,
    vertices: Vec<Tableau>,
    f0: Vec<u32>,
}

fn family_tag(aff: &AffineType) -> String {
    format!("{:?}", aff.family)
}

/// The file for `B^{r,s}` of `aff` under `dir`.
pub fn cache_path(dir: &Path, aff: &AffineType, r: usize, s: usize) -> PathBuf {
    dir.join(format!("{}_{}", family_tag(aff), aff.n())).join(format!("{}x{}.krz", r, s))
}

pub fn save(dir: &Path, k: &KrCrystal) -> Result<PathBuf, CacheError> {
    let path = cache_path(dir, &k.aff, k.r, k.s);
    std::fs::create_dir_all(path.parent().expect("cache path has a parent"))?;
    let f0 = (0..k.len()).map(|b| k.f(0, b).map_or(NONE, |x| x as u32)).collect();
    let entry = Entry { version: CACHE_VERSION.to_string(), family: family_tag(&k.aff), n: k.aff.n(), r: k.r, s: k.s, vertices: k.vertices.clone(), f0 };
    let tmp = path.with_extension("krz.tmp");
    std::fs::write(&tmp, serde_json::to_vec(&entry)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Loads `B^{r,s}` if a current entry exists.
pub fn load(dir: &Path, aff: &AffineType, r: usize, s: usize) -> Result<Option<KrCrystal>, CacheError> {
    let path = cache_path(dir, aff, r, s);
    if !path.exists() {
        return Ok(None);
    }
    let entry: Entry = serde_json::from_slice(&std::fs::read(&path)?)?;
    if entry.version != CACHE_VERSION || entry.family != family_tag(aff) || entry.n != aff.n() || (entry.r, entry.s) != (r, s) {
        return Err(CacheError::Stale(path.display().to_string()));
    }
    KrCrystal::from_tables(aff, r, s, entry.vertices, entry.f0).map(Some).map_err(|e| CacheError::Stale(format!("{}: {}", path.display(), e)))
}

/// Loads from the cache, or generates and stores. Stale entries are
/// regenerated.
pub fn load_or_generate(dir: &Path, aff: &AffineType, r: usize, s: usize, cap: usize) -> Result<KrCrystal, KrError> {
    match load(dir, aff, r, s) {
        Ok(Some(k)) => return Ok(k),
        Ok(None) | Err(CacheError::Stale(_)) => {}
        Err(e) => return Err(KrError::Cache(e.to_string())),
    }
    let k = KrCrystal::with_cap(aff, r, s, cap)?;
    save(dir, &k).map_err(|e| KrError::Cache(e.to_string()))?;
    Ok(k)
}
