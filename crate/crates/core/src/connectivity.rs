//! The incremental connectivity structure: a component tree to discover which
//! components a new disk touches, plus a disjoint-set forest for queries.

use crate::awnn::{Awnn, ScanAwnn};
use crate::component_tree::{ComponentTree, MergeReport, Violation};
use crate::dsu::DsuForest;
use crate::error::{Error, Result};
use crate::geometry::{Point, Site, SiteId};

/// Snapshot of the monotone operation counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub insertions: u64,
    pub connectivity_queries: u64,
    pub components: usize,
    pub height: u32,
    pub expansions: u64,
    pub sites_moved: u64,
    pub max_site_moves: u32,
    pub awnn_inserts: u64,
    pub awnn_deletes: u64,
    pub awnn_queries: u64,
}

impl Stats {
    /// `(name, value)` pairs in the fixed order used by text output.
    pub fn fields(&self) -> [(&'static str, u64); 10] {
        [
            ("insertions", self.insertions),
            ("queries", self.connectivity_queries),
            ("components", self.components as u64),
            ("height", u64::from(self.height)),
            ("expansions", self.expansions),
            ("sites_moved", self.sites_moved),
            ("max_site_moves", u64::from(self.max_site_moves)),
            ("awnn_inserts", self.awnn_inserts),
            ("awnn_deletes", self.awnn_deletes),
            ("awnn_queries", self.awnn_queries),
        ]
    }
}

#[derive(Debug)]
pub struct DiskConnectivity<A: Awnn = ScanAwnn> {
    tree: ComponentTree<A>,
    dsu: DsuForest,
    sites: Vec<Site>,
    queries: u64,
}

impl Default for DiskConnectivity<ScanAwnn> {
    fn default() -> Self {
        Self::new()
    }
}

impl DiskConnectivity<ScanAwnn> {
    pub fn new() -> Self {
        Self::with_backend()
    }
}

impl<A: Awnn> DiskConnectivity<A> {
    pub fn with_backend() -> Self {
        DiskConnectivity {
            tree: ComponentTree::with_backend(),
            dsu: DsuForest::new(),
            sites: Vec::new(),
            queries: 0,
        }
    }

    /// Inserts the disk `(center, radius)` under the next free id.
    ///
    /// Every component the disk touches is merged in both the tree and the
    /// disjoint-set forest. Invalid geometry is rejected without mutation.
    pub fn insert(&mut self, center: Point, radius: f64) -> Result<(SiteId, MergeReport)> {
        let id = SiteId(self.sites.len());
        let site = Site::new(id, center, radius)?;
        let report = self.tree.insert_site(site)?;
        self.dsu.make_set(id)?;
        for &rep in &report.representatives {
            self.dsu.union(rep, id)?;
        }
        self.sites.push(site);
        Ok((id, report))
    }

    /// Whether `a` and `b` are in the same connected component.
    pub fn connected(&mut self, a: SiteId, b: SiteId) -> Result<bool> {
        for id in [a, b] {
            if !self.dsu.contains(id) {
                return Err(Error::UnknownSite(id));
            }
        }
        self.queries += 1;
        self.dsu.same_set(a, b)
    }

    pub fn component_count(&self) -> usize {
        self.dsu.set_count()
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn site(&self, id: SiteId) -> Option<&Site> {
        self.sites.get(id.0)
    }

    /// All sites in insertion order.
    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn tree(&self) -> &ComponentTree<A> {
        &self.tree
    }

    pub fn stats(&self) -> Stats {
        let t = self.tree.stats();
        Stats {
            insertions: t.site_insertions,
            connectivity_queries: self.queries,
            components: self.component_count(),
            height: self.tree.height(),
            expansions: t.expansions,
            sites_moved: t.sites_moved,
            max_site_moves: t.max_site_moves,
            awnn_inserts: t.awnn_inserts,
            awnn_deletes: t.awnn_deletes,
            awnn_queries: t.awnn_queries,
        }
    }

    /// Tree audit plus a check that the disjoint-set partition matches the
    /// tree's leaves.
    pub fn audit(&mut self) -> Vec<String> {
        let mut out: Vec<String> = self
            .tree
            .audit(&self.sites)
            .iter()
            .map(Violation::to_string)
            .collect();
        if self.dsu.set_count() != self.tree.component_count() {
            out.push(format!(
                "dsu holds {} sets but the tree has {} components",
                self.dsu.set_count(),
                self.tree.component_count()
            ));
        }
        let comps: Vec<Vec<SiteId>> = self
            .tree
            .components()
            .map(|(_, ids)| ids.to_vec())
            .collect();
        for ids in comps {
            let root = self.dsu.find(ids[0]).ok();
            if let Some(&stray) = ids.iter().find(|&&id| self.dsu.find(id).ok() != root) {
                out.push(format!(
                    "dsu splits the component holding {} and {}",
                    ids[0], stray
                ));
            }
        }
        out
    }
}
