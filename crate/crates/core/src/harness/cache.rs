use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    /// Canonical form for trees, graph6 otherwise.
    pub form: String,
    pub parameter: String,
    pub method: String,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    #[serde(flatten)]
    key: CacheKey,
    value: usize,
}

/// Append-only JSON-lines store of computed values.  Unreadable lines (say,
/// a write cut short) are ignored on load.
pub struct ResultsCache {
    path: PathBuf,
    known: Mutex<HashMap<CacheKey, usize>>,
}

impl ResultsCache {
    pub const DEFAULT_FILE: &'static str = "edd-cache.jsonl";

    pub fn open(path: impl AsRef<Path>) -> Result<Self, HarnessError> {
        let path = path.as_ref().to_path_buf();
        let mut known = HashMap::new();
        match File::open(&path) {
            Ok(f) => {
                for line in BufReader::new(f).lines() {
                    if let Ok(e) = serde_json::from_str::<Entry>(&line?) {
                        known.insert(e.key, e.value);
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        Ok(ResultsCache {
            path,
            known: Mutex::new(known),
        })
    }

    pub fn get(&self, key: &CacheKey) -> Option<usize> {
        self.known.lock().expect("cache lock").get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.known.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn insert(&self, key: CacheKey, value: usize) -> Result<(), HarnessError> {
        let mut known = self.known.lock().expect("cache lock");
        if known.get(&key) == Some(&value) {
            return Ok(());
        }
        let line = serde_json::to_string(&Entry {
            key: key.clone(),
            value,
        })?;
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(f, "{line}")?;
        known.insert(key, value);
        Ok(())
    }

    /// Looks `key` up, computing and appending it on a miss.
    pub fn get_or_compute(
        &self,
        key: CacheKey,
        compute: impl FnOnce() -> Result<usize, HarnessError>,
    ) -> Result<usize, HarnessError> {
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let v = compute()?;
        self.insert(key, v)?;
        Ok(v)
    }
}
