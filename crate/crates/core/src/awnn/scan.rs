use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use super::{Awnn, AwnnCounters, AwnnEntry, Nearest};
use crate::error::{Error, Result};
use crate::geometry::{Point, SiteId};

/// Flat-vector AWNN: O(1) insert and delete, exhaustive O(n) query.
#[derive(Debug, Default)]
pub struct ScanAwnn {
    entries: Vec<AwnnEntry>,
    slot: HashMap<SiteId, usize>,
    inserts: u64,
    deletes: u64,
    queries: AtomicU64,
}

impl Awnn for ScanAwnn {
    const NAME: &'static str = "scan";

    fn insert(&mut self, entry: AwnnEntry) -> Result<()> {
        if self.slot.contains_key(&entry.site_id) {
            return Err(Error::DuplicateSite(entry.site_id));
        }
        self.slot.insert(entry.site_id, self.entries.len());
        self.entries.push(entry);
        self.inserts += 1;
        Ok(())
    }

    fn delete(&mut self, id: SiteId) -> Result<AwnnEntry> {
        let idx = self.slot.remove(&id).ok_or(Error::UnknownSite(id))?;
        let removed = self.entries.swap_remove(idx);
        if let Some(moved) = self.entries.get(idx) {
            self.slot.insert(moved.site_id, idx);
        }
        self.deletes += 1;
        Ok(removed)
    }

    fn nearest(&self, q: Point) -> Option<Nearest> {
        self.queries.fetch_add(1, Ordering::Relaxed);
        let mut best: Option<Nearest> = None;
        for e in &self.entries {
            let cand = Nearest {
                site_id: e.site_id,
                value: e.value(q),
            };
            if best.is_none_or(|b| cand.beats(&b)) {
                best = Some(cand);
            }
        }
        best
    }

    fn len(&self) -> usize {
        self.entries.len()
    }

    fn contains(&self, id: SiteId) -> bool {
        self.slot.contains_key(&id)
    }

    fn entries(&self) -> Vec<AwnnEntry> {
        let mut out = self.entries.clone();
        out.sort_by_key(|e| e.site_id);
        out
    }

    fn counters(&self) -> AwnnCounters {
        AwnnCounters {
            inserts: self.inserts,
            deletes: self.deletes,
            queries: self.queries.load(Ordering::Relaxed),
        }
    }
}
