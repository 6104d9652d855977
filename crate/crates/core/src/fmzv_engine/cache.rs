//! Append-only JSON-lines cache of computed residues.
//!
//! Each line is a record `{"p": 5, "index": "1,2", "star": false,
//! "residue": 1}`. Lookups hit the in-memory map loaded at open time; every
//! fresh computation is appended to the file, so a later run can reuse it.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fmzv_engine::harmonic_mod_p;
use crate::index_algebra::Index;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CacheRecord {
    p: u64,
    index: String,
    star: bool,
    residue: u64,
}

#[derive(Debug)]
pub struct ValueCache {
    path: PathBuf,
    map: HashMap<(u64, String, bool), u64>,
}

impl ValueCache {
    /// Opens (or creates) the cache file `fmzv-values.jsonl` in `dir`.
    pub fn open(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir).map_err(|e| Error::CacheIo(e.to_string()))?;
        let path = dir.join("fmzv-values.jsonl");
        let mut map = HashMap::new();
        if path.exists() {
            let file = File::open(&path).map_err(|e| Error::CacheIo(e.to_string()))?;
            for line in BufReader::new(file).lines() {
                let line = line.map_err(|e| Error::CacheIo(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CacheRecord =
                    serde_json::from_str(&line).map_err(|_| Error::CacheFormat(line.clone()))?;
                map.insert((rec.p, rec.index, rec.star), rec.residue);
            }
        }
        Ok(ValueCache { path, map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn lookup(&self, k: &Index, p: u64, star: bool) -> Option<u64> {
        self.map.get(&(p, k.to_string(), star)).copied()
    }

    /// Cached lookup of `zeta_p(k)` (or the star variant); computes and
    /// appends on a miss.
    pub fn residue(&mut self, k: &Index, p: u64, star: bool) -> Result<u64> {
        if let Some(hit) = self.lookup(k, p, star) {
            return Ok(hit);
        }
        let residue = harmonic_mod_p(k, p, star).residue();
        let rec = CacheRecord {
            p,
            index: k.to_string(),
            star,
            residue,
        };
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| Error::CacheIo(e.to_string()))?;
        let line = serde_json::to_string(&rec).expect("record serializes");
        writeln!(file, "{line}").map_err(|e| Error::CacheIo(e.to_string()))?;
        self.map.insert((p, rec.index, star), residue);
        Ok(residue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn warm_cache_agrees_with_cold() {
        let dir = std::env::temp_dir().join(format!("mzv-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let k: Index = "1,2".parse().unwrap();

        let mut cold = ValueCache::open(&dir).unwrap();
        assert!(cold.is_empty());
        assert_eq!(cold.residue(&k, 5, false).unwrap(), 1);
        assert_eq!(cold.residue(&k, 5, true).unwrap(), 1);
        drop(cold);

        let mut warm = ValueCache::open(&dir).unwrap();
        assert_eq!(warm.len(), 2);
        assert_eq!(warm.lookup(&k, 5, false), Some(1));
        assert_eq!(warm.residue(&k, 5, false).unwrap(), 1);

        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn malformed_lines_are_reported() {
        let dir = std::env::temp_dir().join(format!("mzv-cache-bad-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("fmzv-values.jsonl"), "not json\n").unwrap();
        assert!(matches!(
            ValueCache::open(&dir).unwrap_err(),
            Error::CacheFormat(_)
        ));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
