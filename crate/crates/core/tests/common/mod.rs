//! Shadow models shared by the integration tests. These are deliberately
//! naive and do not call into the structures they check.

#![allow(dead_code)]

use disk_connectivity::{Point, Site, SiteId};

/// Exhaustive-scan AWNN model over plain tuples.
#[derive(Debug, Default, Clone)]
pub struct ShadowAwnn {
    entries: Vec<(SiteId, f64, f64, f64)>,
}

impl ShadowAwnn {
    pub fn contains(&self, id: SiteId) -> bool {
        self.entries.iter().any(|e| e.0 == id)
    }

    pub fn insert(&mut self, id: SiteId, x: f64, y: f64, w: f64) -> bool {
        if self.contains(id) {
            return false;
        }
        self.entries.push((id, x, y, w));
        true
    }

    pub fn delete(&mut self, id: SiteId) -> bool {
        let before = self.entries.len();
        self.entries.retain(|e| e.0 != id);
        before != self.entries.len()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn nearest(&self, q: Point) -> Option<(SiteId, f64)> {
        let mut best: Option<(SiteId, f64)> = None;
        for &(id, x, y, w) in &self.entries {
            let dx = x - q.x;
            let dy = y - q.y;
            let v = (dx * dx + dy * dy).sqrt() + w;
            best = match best {
                Some((bid, bv)) if bv < v || (bv == v && bid < id) => Some((bid, bv)),
                _ => Some((id, v)),
            };
        }
        best
    }
}

/// Label-array union-find model: relabels a whole class on every union.
#[derive(Debug, Default, Clone)]
pub struct LabelModel {
    label: std::collections::HashMap<SiteId, usize>,
}

impl LabelModel {
    pub fn contains(&self, id: SiteId) -> bool {
        self.label.contains_key(&id)
    }

    pub fn make_set(&mut self, id: SiteId) -> bool {
        if self.contains(id) {
            return false;
        }
        self.label.insert(id, id.0);
        true
    }

    pub fn union(&mut self, a: SiteId, b: SiteId) {
        let (la, lb) = (self.label[&a], self.label[&b]);
        for l in self.label.values_mut() {
            if *l == lb {
                *l = la;
            }
        }
    }

    pub fn same(&self, a: SiteId, b: SiteId) -> bool {
        self.label[&a] == self.label[&b]
    }

    pub fn classes(&self) -> usize {
        self.label
            .values()
            .collect::<std::collections::HashSet<_>>()
            .len()
    }
}

/// Components of the disk graph by plain pairwise closed-disk tests.
pub fn brute_labels(sites: &[Site]) -> Vec<usize> {
    let n = sites.len();
    let mut label: Vec<usize> = (0..n).collect();
    let touch = |a: &Site, b: &Site| {
        let dx = a.center.x - b.center.x;
        let dy = a.center.y - b.center.y;
        let r = a.radius + b.radius;
        dx * dx + dy * dy <= r * r
    };
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if label[j] < label[i] && touch(&sites[i], &sites[j]) {
                    label[i] = label[j];
                    changed = true;
                }
            }
        }
    }
    label
}

pub fn floor_log2(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        n.ilog2()
    }
}
