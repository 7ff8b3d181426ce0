use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use punctual_core::hilbert::{enumerate_o_sequences, HFConstraints};
use punctual_core::ideal::{enumerate_monomial_ideals_capped, enumerate_strongly_stable};
use punctual_core::tangent::nonnegative_tangent_dim;

use crate::render::Output;
use crate::Failure;

/// Spot checks per run.
const SPOT_CHECKS: usize = 2;

/// A cacheable table cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum CachedOp {
    OSequenceCount { k: u64 },
    MonomialCount { n: usize, k: u64 },
    BorelCount { n: usize, k: u64 },
    /// Borel ideals with nonnegative tangent dimension at least `(n-1)(k-1)`.
    ThresholdCount { n: usize, k: u64 },
}

impl CachedOp {
    fn module(&self) -> &'static str {
        match self {
            CachedOp::OSequenceCount { .. } => "hilbert",
            CachedOp::MonomialCount { .. } | CachedOp::BorelCount { .. } => "ideal",
            CachedOp::ThresholdCount { .. } => "tangent",
        }
    }

    pub fn compute(&self, cap: u64) -> Result<u64, Failure> {
        Ok(match *self {
            CachedOp::OSequenceCount { k } => enumerate_o_sequences(k, &HFConstraints::none()).len() as u64,
            CachedOp::MonomialCount { n, k } => enumerate_monomial_ideals_capped(n, k, cap)?.len() as u64,
            CachedOp::BorelCount { n, k } => enumerate_strongly_stable(n, k).len() as u64,
            CachedOp::ThresholdCount { n, k } => {
                let expected = (n as u64 - 1) * (k - 1);
                enumerate_strongly_stable(n, k).iter().filter(|i| nonnegative_tangent_dim(*i) >= expected).count() as u64
            }
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
struct Key {
    module: String,
    op: CachedOp,
    version: String,
}

impl Key {
    fn new(op: &CachedOp) -> Self {
        Key { module: op.module().into(), op: op.clone(), version: punctual_core::VERSION.into() }
    }

    fn digest(&self) -> String {
        let text = serde_json::to_string(self).expect("keys serialize");
        format!("{:x}", Sha256::digest(text.as_bytes()))
    }
}

#[derive(Serialize, Deserialize, Debug)]
struct Entry {
    key: Key,
    value: u64,
}

pub struct Cache {
    dir: Option<PathBuf>,
    cap: u64,
    hits: Mutex<Vec<(CachedOp, u64)>>,
}

fn io(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

impl Cache {
    pub fn new(dir: Option<PathBuf>, cap: u64) -> Self {
        Cache { dir, cap, hits: Mutex::new(Vec::new()) }
    }

    fn path_for(dir: &Path, key: &Key) -> PathBuf {
        dir.join(format!("{}.json", key.digest()))
    }

    pub fn get(&self, op: &CachedOp) -> Result<u64, Failure> {
        let Some(dir) = &self.dir else { return op.compute(self.cap) };
        let key = Key::new(op);
        let path = Self::path_for(dir, &key);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(entry) = serde_json::from_str::<Entry>(&text) {
                if entry.key == key {
                    self.hits.lock().unwrap().push((op.clone(), entry.value));
                    return Ok(entry.value);
                }
            }
        }
        let value = op.compute(self.cap)?;
        write_entry(dir, &Entry { key, value })?;
        Ok(value)
    }

    /// Recomputes a seeded sample of this run's cache hits.
    pub fn spot_check(&self, seed: u64) -> Result<(), Failure> {
        let mut hits = self.hits.lock().unwrap().clone();
        hits.sort();
        hits.dedup();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (op, cached) in hits.choose_multiple(&mut rng, SPOT_CHECKS) {
            let fresh = op.compute(self.cap)?;
            if fresh != *cached {
                return Err(Failure::Mismatch(format!("cache entry {op:?} holds {cached}, fresh computation gives {fresh}")));
            }
            log::info!("spot check of cached {op:?} agrees");
        }
        Ok(())
    }
}

fn write_entry(dir: &Path, entry: &Entry) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let path = Cache::path_for(dir, &entry.key);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let text = serde_json::to_string_pretty(entry).expect("entries serialize");
    fs::write(&tmp, text).map_err(|e| io(&tmp, e))?;
    fs::rename(&tmp, &path).map_err(|e| io(&path, e))
}

fn read_entries(dir: &Path) -> Result<Vec<(PathBuf, Entry)>, Failure> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for item in fs::read_dir(dir).map_err(|e| io(dir, e))? {
        let path = item.map_err(|e| io(dir, e))?.path();
        if path.extension().and_then(|s| s.to_str()) != Some("json") {
            continue;
        }
        let text = fs::read_to_string(&path).map_err(|e| io(&path, e))?;
        match serde_json::from_str::<Entry>(&text) {
            Ok(entry) => out.push((path, entry)),
            Err(e) => log::warn!("skipping unreadable cache entry {}: {e}", path.display()),
        }
    }
    out.sort_by(|a, b| a.1.key.op.cmp(&b.1.key.op));
    Ok(out)
}

fn op_name(op: &CachedOp) -> String {
    serde_json::to_value(op).unwrap()["op"].as_str().unwrap().to_string()
}

pub fn status(dir: &Path) -> Result<Output, Failure> {
    let entries = read_entries(dir)?;
    let mut by_op: BTreeMap<String, u64> = BTreeMap::new();
    for (_, e) in &entries {
        *by_op.entry(op_name(&e.key.op)).or_default() += 1;
    }
    let rows = by_op.iter().map(|(k, v)| vec![k.clone(), v.to_string()]).collect();
    let json = json!({ "dir": dir.display().to_string(), "entries": entries.len(), "by_op": by_op });
    Ok(Output::new(json, &["op", "entries"], rows))
}

pub fn clear(dir: &Path) -> Result<Output, Failure> {
    let entries = read_entries(dir)?;
    for (path, _) in &entries {
        fs::remove_file(path).map_err(|e| io(path, e))?;
    }
    let json = json!({ "dir": dir.display().to_string(), "removed": entries.len() });
    Ok(Output::new(json, &["removed"], vec![vec![entries.len().to_string()]]))
}

/// Recomputes every entry, rewrites it under the current version and
/// reports the entries whose stored value differed.
pub fn rebuild(dir: &Path, cap: u64) -> Result<(Output, bool), Failure> {
    let entries = read_entries(dir)?;
    let mut diffs = Vec::new();
    let mut rows = Vec::new();
    for (path, entry) in &entries {
        let fresh = entry.key.op.compute(cap)?;
        let same = fresh == entry.value;
        if !same {
            diffs.push(json!({ "op": entry.key.op, "cached": entry.value, "fresh": fresh }));
        }
        rows.push(vec![
            serde_json::to_string(&entry.key.op).unwrap(),
            entry.value.to_string(),
            fresh.to_string(),
            if same { "ok".into() } else { "DIFF".into() },
        ]);
        let key = Key::new(&entry.key.op);
        if Cache::path_for(dir, &key) != *path {
            fs::remove_file(path).map_err(|e| io(path, e))?;
        }
        write_entry(dir, &Entry { key, value: fresh })?;
    }
    let ok = diffs.is_empty();
    let json = json!({ "dir": dir.display().to_string(), "entries": entries.len(), "diffs": diffs });
    Ok((Output::new(json, &["op", "cached", "fresh", "status"], rows), ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_spot_check() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()), 1000);
        let op = CachedOp::MonomialCount { n: 3, k: 4 };
        assert_eq!(cache.get(&op).unwrap(), 13);
        assert_eq!(cache.get(&op).unwrap(), 13);
        cache.spot_check(0).unwrap();
        assert_eq!(read_entries(dir.path()).unwrap().len(), 1);
        // tamper and rebuild
        let (path, mut entry) = read_entries(dir.path()).unwrap().pop().unwrap();
        entry.value = 14;
        fs::write(&path, serde_json::to_string(&entry).unwrap()).unwrap();
        let stale = Cache::new(Some(dir.path().to_path_buf()), 1000);
        assert_eq!(stale.get(&op).unwrap(), 14);
        assert!(matches!(stale.spot_check(0), Err(Failure::Mismatch(_))));
        let (_, ok) = rebuild(dir.path(), 1000).unwrap();
        assert!(!ok);
        assert!(rebuild(dir.path(), 1000).unwrap().1);
        clear(dir.path()).unwrap();
        assert!(read_entries(dir.path()).unwrap().is_empty());
    }
}
