//! Roster snapshots and atomic reload.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use advisor_match_core::{load_roster, serialize_roster, AreaSchema, LoadError, Roster};
use arc_swap::ArcSwap;
use sha2::{Digest, Sha256};

/// An immutable roster plus the token that identifies it to clients.
#[derive(Debug)]
pub struct Snapshot {
    pub roster: Roster,
    pub version: String,
}

/// First 12 hex digits of the SHA-256 of the roster's canonical CSV.
pub fn content_digest(roster: &Roster) -> String {
    let hash = Sha256::digest(serialize_roster(roster).as_bytes());
    hex::encode(&hash[..6])
}

/// Shared service state. Requests take one snapshot and use only that;
/// reload publishes a new one with a single pointer swap.
pub struct AppState {
    current: ArcSwap<Snapshot>,
    source: Option<PathBuf>,
    schema: AreaSchema,
    generation: AtomicU64,
    reload_lock: Mutex<()>,
}

impl AppState {
    /// Loads `path` once. Fails without creating any state on a bad file.
    pub fn from_file(path: impl AsRef<Path>, schema: AreaSchema) -> Result<Self, LoadError> {
        let path = path.as_ref().to_path_buf();
        let roster = load_roster(&path, &schema)?;
        Ok(Self::build(roster, Some(path), schema))
    }

    /// State over a fixed roster; reload re-publishes the same content.
    pub fn from_roster(roster: Roster) -> Self {
        let schema = roster.schema().clone();
        Self::build(roster, None, schema)
    }

    fn build(roster: Roster, source: Option<PathBuf>, schema: AreaSchema) -> Self {
        let version = format!("1-{}", content_digest(&roster));
        Self {
            current: ArcSwap::from_pointee(Snapshot { roster, version }),
            source,
            schema,
            generation: AtomicU64::new(1),
            reload_lock: Mutex::new(()),
        }
    }

    pub fn snapshot(&self) -> Arc<Snapshot> {
        self.current.load_full()
    }

    /// Re-reads the data file and swaps it in. On error the old snapshot stays.
    pub fn reload(&self) -> Result<Arc<Snapshot>, LoadError> {
        let _guard = self.reload_lock.lock().unwrap_or_else(|e| e.into_inner());
        let roster = match &self.source {
            Some(path) => load_roster(path, &self.schema)?,
            None => self.snapshot().roster.clone(),
        };
        let generation = self.generation.fetch_add(1, Ordering::SeqCst) + 1;
        let version = format!("{generation}-{}", content_digest(&roster));
        let next = Arc::new(Snapshot { roster, version });
        self.current.store(Arc::clone(&next));
        Ok(next)
    }
}
