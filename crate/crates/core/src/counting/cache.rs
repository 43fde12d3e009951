//! Single-file JSON cache of exact counts, keyed by (kind, n, params).
//! Entries never go stale (they are theorems), so the only interesting
//! failure is disagreement, which is always an error worth surfacing.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::counting::ExactCount;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheOutcome {
    /// The record matched an existing entry byte for byte.
    Hit,
    /// The record is new and was added.
    Inserted,
}

#[derive(Debug)]
pub struct CountCache {
    path: PathBuf,
    entries: BTreeMap<String, ExactCount>,
}

impl CountCache {
    /// Loads the cache, or starts empty when the file does not exist yet.
    /// A file whose keys disagree with their own records is rejected.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let entries = match std::fs::read_to_string(&path) {
            Ok(text) => {
                let map: BTreeMap<String, ExactCount> = serde_json::from_str(&text)?;
                for (key, record) in &map {
                    if record.cache_key() != *key {
                        return Err(Error::CacheMismatch { key: key.clone() });
                    }
                }
                map
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(e.into()),
        };
        Ok(CountCache { path, entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&ExactCount> {
        self.entries.get(key)
    }

    /// Inserts a freshly computed record, or verifies it against the stored
    /// one. Any disagreement is an internal inconsistency.
    pub fn reconcile(&mut self, record: ExactCount) -> Result<CacheOutcome> {
        let key = record.cache_key();
        match self.entries.get(&key) {
            Some(existing) if *existing == record => Ok(CacheOutcome::Hit),
            Some(_) => Err(Error::CacheMismatch { key }),
            None => {
                self.entries.insert(key, record);
                Ok(CacheOutcome::Inserted)
            }
        }
    }

    /// Writes the whole map back; key order is stable (BTreeMap), so saves
    /// are deterministic.
    pub fn save(&self) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.entries)?;
        std::fs::write(&self.path, text)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_avoiding_permutations, count_window_avoiders};

    fn temp_path(name: &str) -> PathBuf {
        let mut p = std::env::temp_dir();
        p.push(format!("census-cache-test-{}-{name}.json", std::process::id()));
        p
    }

    #[test]
    fn round_trip_and_hit() {
        let path = temp_path("round-trip");
        let _ = std::fs::remove_file(&path);

        let mut cache = CountCache::open(&path).unwrap();
        assert!(cache.is_empty());
        let record = count_avoiding_permutations(5).unwrap();
        assert_eq!(
            cache.reconcile(record.clone()).unwrap(),
            CacheOutcome::Inserted
        );
        cache.save().unwrap();

        let mut reopened = CountCache::open(&path).unwrap();
        assert_eq!(reopened.len(), 1);
        assert_eq!(reopened.get("perm_avoiders:n=5"), Some(&record));
        assert_eq!(reopened.reconcile(record).unwrap(), CacheOutcome::Hit);

        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn disagreement_is_an_error() {
        let path = temp_path("disagreement");
        let _ = std::fs::remove_file(&path);

        let mut cache = CountCache::open(&path).unwrap();
        let mut record = count_window_avoiders(8, &[1, 2]).unwrap();
        cache.reconcile(record.clone()).unwrap();
        record.value += 1u32;
        assert!(matches!(
            cache.reconcile(record),
            Err(Error::CacheMismatch { .. })
        ));
    }

    #[test]
    fn corrupted_file_is_rejected() {
        let path = temp_path("corrupt");
        std::fs::write(&path, "{ not json").unwrap();
        assert!(matches!(
            CountCache::open(&path),
            Err(Error::CacheFormat(_))
        ));

        // Key that does not match its record.
        let record = count_avoiding_permutations(4).unwrap();
        let text = format!(
            "{{\"wrong_key\": {}}}",
            serde_json::to_string(&record).unwrap()
        );
        std::fs::write(&path, text).unwrap();
        assert!(matches!(
            CountCache::open(&path),
            Err(Error::CacheMismatch { .. })
        ));

        std::fs::remove_file(&path).unwrap();
    }
}
