//! Disjoint-set union over site ids.
//!
//! Union by rank with full path compression. `find` compresses paths and so
//! needs `&mut self`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::SiteId;

#[derive(Debug, Clone, Default)]
pub struct DsuForest {
    index: HashMap<SiteId, usize>,
    ids: Vec<SiteId>,
    parent: Vec<usize>,
    rank: Vec<u8>,
    set_count: usize,
    steps: u64,
}

impl DsuForest {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn set_count(&self) -> usize {
        self.set_count
    }

    pub fn contains(&self, id: SiteId) -> bool {
        self.index.contains_key(&id)
    }

    /// Total parent-pointer hops taken by `find` so far.
    pub fn pointer_steps(&self) -> u64 {
        self.steps
    }

    pub fn make_set(&mut self, id: SiteId) -> Result<()> {
        if self.index.contains_key(&id) {
            return Err(Error::DuplicateSite(id));
        }
        let slot = self.ids.len();
        self.index.insert(id, slot);
        self.ids.push(id);
        self.parent.push(slot);
        self.rank.push(0);
        self.set_count += 1;
        Ok(())
    }

    fn slot(&self, id: SiteId) -> Result<usize> {
        self.index.get(&id).copied().ok_or(Error::UnknownSite(id))
    }

    fn find_slot(&mut self, slot: usize) -> usize {
        let mut root = slot;
        while self.parent[root] != root {
            root = self.parent[root];
            self.steps += 1;
        }
        let mut cur = slot;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Canonical representative of the set holding `id`.
    pub fn find(&mut self, id: SiteId) -> Result<SiteId> {
        let slot = self.slot(id)?;
        let root = self.find_slot(slot);
        Ok(self.ids[root])
    }

    /// Merges the sets of `a` and `b`. Returns `true` if they were distinct.
    pub fn union(&mut self, a: SiteId, b: SiteId) -> Result<bool> {
        let (sa, sb) = (self.slot(a)?, self.slot(b)?);
        let (ra, rb) = (self.find_slot(sa), self.find_slot(sb));
        if ra == rb {
            return Ok(false);
        }
        let (child, root) = if self.rank[ra] < self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = root;
        if self.rank[ra] == self.rank[rb] {
            self.rank[root] += 1;
        }
        self.set_count -= 1;
        Ok(true)
    }

    pub fn same_set(&mut self, a: SiteId, b: SiteId) -> Result<bool> {
        Ok(self.find(a)? == self.find(b)?)
    }

    /// Number of parent pointers between `id` and its root, without compressing.
    pub fn depth(&self, id: SiteId) -> Result<usize> {
        let mut cur = self.slot(id)?;
        let mut depth = 0;
        while self.parent[cur] != cur {
            cur = self.parent[cur];
            depth += 1;
        }
        Ok(depth)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(i: usize) -> SiteId {
        SiteId(i)
    }

    #[test]
    fn make_set_examples() {
        let mut d = DsuForest::new();
        d.make_set(id(0)).unwrap();
        assert_eq!(d.set_count(), 1);
        d.make_set(id(1)).unwrap();
        assert_ne!(d.find(id(0)).unwrap(), d.find(id(1)).unwrap());
        assert_eq!(d.make_set(id(0)), Err(Error::DuplicateSite(id(0))));
        assert_eq!(d.set_count(), 2);
    }

    #[test]
    fn union_examples() {
        let mut d = DsuForest::new();
        for i in 0..3 {
            d.make_set(id(i)).unwrap();
        }
        assert!(d.union(id(0), id(1)).unwrap());
        assert!(d.same_set(id(0), id(1)).unwrap());
        assert!(!d.union(id(0), id(0)).unwrap());
        assert_eq!(d.set_count(), 2);
        d.union(id(1), id(2)).unwrap();
        assert_eq!(d.find(id(0)).unwrap(), d.find(id(2)).unwrap());
        assert_eq!(d.set_count(), 1);
        assert_eq!(d.union(id(0), id(9)), Err(Error::UnknownSite(id(9))));
    }

    #[test]
    fn find_examples() {
        let mut d = DsuForest::new();
        d.make_set(id(5)).unwrap();
        assert_eq!(d.find(id(5)).unwrap(), id(5));
        assert_eq!(d.find(id(6)), Err(Error::UnknownSite(id(6))));
    }

    #[test]
    fn compressed_paths_after_chain_of_unions() {
        let mut d = DsuForest::new();
        let k = 64;
        for i in 0..k {
            d.make_set(id(i)).unwrap();
        }
        // Pair up into trees of growing rank so real depth builds up.
        let mut width = 1;
        while width < k {
            for start in (0..k).step_by(2 * width) {
                d.union(id(start), id(start + width)).unwrap();
            }
            width *= 2;
        }
        assert!((0..k).any(|i| d.depth(id(i)).unwrap() > 2));
        for i in 0..k {
            d.find(id(i)).unwrap();
            assert!(d.depth(id(i)).unwrap() <= 2);
        }
        for i in 0..k {
            assert!(d.depth(id(i)).unwrap() <= 1);
        }
    }
}
