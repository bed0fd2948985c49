//! Append-only JSON-lines result cache keyed by canonical form, command and parameters.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::records::Record;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub verdict: String,
    /// SHA-256 of the record's JSON text.
    pub digest: String,
    pub record: Record,
}

pub fn digest(rec: &Record) -> String {
    let text = serde_json::to_string(rec).expect("records serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn cache_key(form: &str, command: &str, params: &str) -> String {
    format!("{command}|{params}|{form}")
}

impl CacheEntry {
    pub fn new(key: String, record: Record) -> Self {
        Self { key, verdict: record.verdict().to_string(), digest: digest(&record), record }
    }

    /// Deterministic ~5% sample of entries to recompute on a hit.
    pub fn sampled(&self) -> bool {
        u8::from_str_radix(&self.digest[..2], 16).is_ok_and(|b| b < 13)
    }
}

#[derive(Debug, Default)]
pub struct ResultCache {
    path: Option<PathBuf>,
    entries: HashMap<String, CacheEntry>,
}

impl ResultCache {
    /// Opens the store, creating nothing until the first insert.
    pub fn open(path: &Path) -> Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::MalformedInput(format!("cannot read cache {}: {e}", path.display())))?;
            for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                let entry: CacheEntry = serde_json::from_str(line)
                    .map_err(|e| Error::MalformedInput(format!("cache line {}: {e}", i + 1)))?;
                if digest(&entry.record) != entry.digest || entry.record.verdict() != entry.verdict {
                    return Err(Error::MalformedInput(format!("cache line {}: digest mismatch", i + 1)));
                }
                entries.insert(entry.key.clone(), entry);
            }
        }
        Ok(Self { path: Some(path.to_path_buf()), entries })
    }

    pub fn get(&self, key: &str) -> Option<&CacheEntry> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Appends new entries; keys already present are left alone.
    pub fn insert_all(&mut self, new: Vec<CacheEntry>) -> Result<()> {
        let fresh: Vec<CacheEntry> = new.into_iter().filter(|e| !self.entries.contains_key(&e.key)).collect();
        if fresh.is_empty() {
            return Ok(());
        }
        if let Some(path) = &self.path {
            let io = |e: std::io::Error| Error::MalformedInput(format!("cannot write cache {}: {e}", path.display()));
            let mut file = std::fs::OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
            for e in &fresh {
                let line = serde_json::to_string(e).expect("entries serialize");
                writeln!(file, "{line}").map_err(io)?;
            }
        }
        for e in fresh {
            self.entries.entry(e.key.clone()).or_insert(e);
        }
        Ok(())
    }
}
