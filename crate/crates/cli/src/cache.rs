//! Syzygy orders already computed, keyed by chamber and `b`, stored as JSON
//! lines beside the chamber database.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub chamber_id: String,
    pub b: u32,
    pub mu: usize,
    pub syzord: usize,
}

#[derive(Debug, Default)]
pub struct ResultsCache {
    path: Option<PathBuf>,
    entries: BTreeMap<(String, u32), CacheEntry>,
    fresh: Vec<CacheEntry>,
}

impl ResultsCache {
    /// `chambers.json` → `chambers.cache.jsonl`.
    pub fn path_beside(db: &Path) -> PathBuf {
        let stem = db.file_stem().and_then(|s| s.to_str()).unwrap_or("chambers");
        db.with_file_name(format!("{stem}.cache.jsonl"))
    }

    /// A cache that is never read or written.
    pub fn disabled() -> Self {
        ResultsCache::default()
    }

    /// Loads `path` if it exists; a missing file is an empty cache.
    pub fn open(path: PathBuf) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        if path.exists() {
            let file = fs::File::open(&path).map_err(|e| CliError::io(&path, e))?;
            for line in BufReader::new(file).lines() {
                let line = line.map_err(|e| CliError::io(&path, e))?;
                if line.trim().is_empty() {
                    continue;
                }
                let e: CacheEntry = serde_json::from_str(&line)?;
                entries.insert((e.chamber_id.clone(), e.b), e);
            }
        }
        Ok(ResultsCache {
            path: Some(path),
            entries,
            fresh: Vec::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, chamber_id: &str, b: u32) -> Option<&CacheEntry> {
        self.entries.get(&(chamber_id.to_string(), b))
    }

    pub fn insert(&mut self, e: CacheEntry) {
        if self.path.is_none() {
            return;
        }
        let key = (e.chamber_id.clone(), e.b);
        if self.entries.get(&key) != Some(&e) {
            self.fresh.push(e.clone());
            self.entries.insert(key, e);
        }
    }

    /// Appends the entries added since loading.
    pub fn flush(&mut self) -> Result<(), CliError> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if self.fresh.is_empty() {
            return Ok(());
        }
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| CliError::io(path, e))?;
        for e in self.fresh.drain(..) {
            writeln!(f, "{}", serde_json::to_string(&e)?).map_err(|err| CliError::io(path, err))?;
        }
        Ok(())
    }
}
