use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use super::{Awnn, AwnnCounters, AwnnEntry, Nearest};
use crate::error::{Error, Result};
use crate::geometry::{Point, SiteId};

const LEAF_SIZE: usize = 8;

#[derive(Debug, Clone, Copy)]
struct Slot {
    serial: u64,
    entry: AwnnEntry,
}

#[derive(Debug)]
struct KdNode {
    lo: Point,
    hi: Point,
    min_weight: f64,
    start: usize,
    end: usize,
    children: Option<(usize, usize)>,
}

impl KdNode {
    /// Lower bound on `‖pq‖ + w` for every entry below this node.
    ///
    /// Every step (subtraction, square, sum, sqrt, addition) rounds
    /// monotonically, so the bound never exceeds the computed value of any
    /// entry in the box. Pruning on `bound > best` is therefore exact.
    fn lower_bound(&self, q: Point) -> f64 {
        let dx = if q.x < self.lo.x {
            self.lo.x - q.x
        } else if q.x > self.hi.x {
            q.x - self.hi.x
        } else {
            0.0
        };
        let dy = if q.y < self.lo.y {
            self.lo.y - q.y
        } else if q.y > self.hi.y {
            q.y - self.hi.y
        } else {
            0.0
        };
        (dx * dx + dy * dy).sqrt() + self.min_weight
    }
}

/// Static kd-tree over a fixed batch of entries.
#[derive(Debug)]
struct StaticTier {
    slots: Vec<Slot>,
    nodes: Vec<KdNode>,
}

impl StaticTier {
    fn build(mut slots: Vec<Slot>) -> Self {
        let mut nodes = Vec::with_capacity(2 * slots.len() / LEAF_SIZE + 1);
        if !slots.is_empty() {
            let len = slots.len();
            Self::build_node(&mut slots, 0, len, &mut nodes);
        }
        StaticTier { slots, nodes }
    }

    fn build_node(slots: &mut [Slot], start: usize, end: usize, nodes: &mut Vec<KdNode>) -> usize {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut min_weight = f64::INFINITY;
        for s in &slots[start..end] {
            let c = s.entry.center;
            lo.x = lo.x.min(c.x);
            lo.y = lo.y.min(c.y);
            hi.x = hi.x.max(c.x);
            hi.y = hi.y.max(c.y);
            min_weight = min_weight.min(s.entry.weight);
        }
        let idx = nodes.len();
        nodes.push(KdNode {
            lo,
            hi,
            min_weight,
            start,
            end,
            children: None,
        });
        if end - start > LEAF_SIZE {
            let mid = start + (end - start) / 2;
            let split_x = hi.x - lo.x >= hi.y - lo.y;
            slots[start..end].select_nth_unstable_by(mid - start, |a, b| {
                if split_x {
                    a.entry.center.x.total_cmp(&b.entry.center.x)
                } else {
                    a.entry.center.y.total_cmp(&b.entry.center.y)
                }
            });
            let left = Self::build_node(slots, start, mid, nodes);
            let right = Self::build_node(slots, mid, end, nodes);
            nodes[idx].children = Some((left, right));
        }
        idx
    }

    fn query(&self, q: Point, dead: &HashSet<u64>, best: &mut Option<Nearest>) {
        if !self.nodes.is_empty() {
            self.query_node(0, q, dead, best);
        }
    }

    fn query_node(&self, idx: usize, q: Point, dead: &HashSet<u64>, best: &mut Option<Nearest>) {
        let node = &self.nodes[idx];
        match node.children {
            None => {
                for s in &self.slots[node.start..node.end] {
                    if dead.contains(&s.serial) {
                        continue;
                    }
                    let cand = Nearest {
                        site_id: s.entry.site_id,
                        value: s.entry.value(q),
                    };
                    if best.is_none_or(|b| cand.beats(&b)) {
                        *best = Some(cand);
                    }
                }
            }
            Some((left, right)) => {
                let lb_left = self.nodes[left].lower_bound(q);
                let lb_right = self.nodes[right].lower_bound(q);
                let order = if lb_right < lb_left {
                    [(right, lb_right), (left, lb_left)]
                } else {
                    [(left, lb_left), (right, lb_right)]
                };
                for (child, bound) in order {
                    // Equal bounds are still explored: a tie may carry a smaller id.
                    if best.is_none_or(|b| bound <= b.value) {
                        self.query_node(child, q, dead, best);
                    }
                }
            }
        }
    }
}

/// Logarithmic-method AWNN over static kd-trees.
///
/// Tier `i` holds at most `2^i` slots. An insert carries lower tiers upward
/// like a binary counter. Deletes only tombstone a slot; tombstoned slots are
/// dropped when their tier is merged, or by a global rebuild once the
/// tombstones exceed half of the live entries.
#[derive(Debug, Default)]
pub struct TieredAwnn {
    tiers: Vec<Option<StaticTier>>,
    live: HashMap<SiteId, Slot>,
    dead: HashSet<u64>,
    next_serial: u64,
    rebuilds: u64,
    inserts: u64,
    deletes: u64,
    queries: AtomicU64,
}

impl TieredAwnn {
    /// Number of global rebuilds triggered by tombstone accumulation.
    pub fn rebuilds(&self) -> u64 {
        self.rebuilds
    }

    pub fn tombstones(&self) -> usize {
        self.dead.len()
    }

    fn rebuild(&mut self) {
        let mut slots: Vec<Slot> = self.live.values().copied().collect();
        slots.sort_by_key(|s| s.serial);
        self.tiers.clear();
        self.dead.clear();
        if !slots.is_empty() {
            let level = slots.len().next_power_of_two().trailing_zeros() as usize;
            self.tiers.resize_with(level + 1, || None);
            self.tiers[level] = Some(StaticTier::build(slots));
        }
        self.rebuilds += 1;
    }
}

impl Awnn for TieredAwnn {
    const NAME: &'static str = "tiered";

    fn insert(&mut self, entry: AwnnEntry) -> Result<()> {
        if self.live.contains_key(&entry.site_id) {
            return Err(Error::DuplicateSite(entry.site_id));
        }
        let slot = Slot {
            serial: self.next_serial,
            entry,
        };
        self.next_serial += 1;
        self.live.insert(entry.site_id, slot);

        let mut carry = vec![slot];
        let mut level = 0;
        loop {
            if level == self.tiers.len() {
                self.tiers.push(None);
            }
            if let Some(tier) = self.tiers[level].take() {
                let dead = &mut self.dead;
                carry.extend(tier.slots.into_iter().filter(|s| !dead.remove(&s.serial)));
            }
            if carry.len() <= 1 << level {
                self.tiers[level] = Some(StaticTier::build(carry));
                break;
            }
            level += 1;
        }
        self.inserts += 1;
        Ok(())
    }

    fn delete(&mut self, id: SiteId) -> Result<AwnnEntry> {
        let slot = self.live.remove(&id).ok_or(Error::UnknownSite(id))?;
        self.dead.insert(slot.serial);
        self.deletes += 1;
        if 2 * self.dead.len() > self.live.len() {
            self.rebuild();
        }
        Ok(slot.entry)
    }

    fn nearest(&self, q: Point) -> Option<Nearest> {
        self.queries.fetch_add(1, Ordering::Relaxed);
        let mut best = None;
        for tier in self.tiers.iter().flatten() {
            tier.query(q, &self.dead, &mut best);
        }
        best
    }

    fn len(&self) -> usize {
        self.live.len()
    }

    fn contains(&self, id: SiteId) -> bool {
        self.live.contains_key(&id)
    }

    fn entries(&self) -> Vec<AwnnEntry> {
        let mut out: Vec<AwnnEntry> = self.live.values().map(|s| s.entry).collect();
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
