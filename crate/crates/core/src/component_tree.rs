//! The component tree: a complete binary tree whose leaves each hold one
//! connected component of the disk graph, and whose every node holds an AWNN
//! over all sites stored in its subtree.
//!
//! Two invariants hold between public operations:
//!
//! 1. every connected component is stored in exactly one leaf;
//! 2. the AWNN of a node contains exactly the sites stored in the leaves of
//!    its subtree, each with weight `-radius`.
//!
//! Leaves with no component are *empty* and sit in a FIFO queue. The tree
//! only changes shape when a new isolated component arrives and the queue is
//! empty; it then doubles (a new root over the old tree and an equally sized
//! empty subtree).
//!
//! Nodes use heap indexing: the root is node 0 and the children of node `i`
//! are `2i + 1` and `2i + 2`. Leaves are addressed by [`LeafId`], their
//! left-to-right position. Doubling keeps the old tree as the left subtree,
//! so leaf positions stay valid across expansions while node indices of the
//! old tree shift.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::awnn::{Awnn, AwnnEntry, ScanAwnn};
use crate::error::{Error, Result};
use crate::geometry::{disks_intersect, Site, SiteId};

/// Heap index of a tree node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);

    pub fn parent(self) -> Option<NodeId> {
        (self.0 > 0).then(|| NodeId((self.0 - 1) / 2))
    }

    pub fn children(self) -> (NodeId, NodeId) {
        (NodeId(2 * self.0 + 1), NodeId(2 * self.0 + 2))
    }

    /// Depth below the root.
    pub fn depth(self) -> u32 {
        (self.0 + 1).ilog2()
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node {}", self.0)
    }
}

/// Left-to-right position of a leaf. Stable across tree expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeafId(pub usize);

impl fmt::Display for LeafId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "leaf {}", self.0)
    }
}

/// What happened during one site insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeReport {
    pub inserted: SiteId,
    /// Leaves whose components the new disk intersects, in leaf order.
    pub intersected_components: Vec<LeafId>,
    /// Leaf now holding the new site: the largest intersected component, or
    /// a fresh leaf if the site is isolated.
    pub target_leaf: LeafId,
    /// One site from each intersected component, aligned with
    /// `intersected_components`.
    pub representatives: Vec<SiteId>,
    /// Sites relocated from absorbed components into `target_leaf`.
    pub sites_moved: usize,
    /// Whether the tree doubled during this insertion.
    pub expanded: bool,
}

impl MergeReport {
    pub fn merged(&self) -> usize {
        self.intersected_components.len()
    }
}

/// Operation counters, monotone over the lifetime of a tree.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeStats {
    pub site_insertions: u64,
    pub awnn_inserts: u64,
    pub awnn_deletes: u64,
    pub awnn_queries: u64,
    pub sites_moved: u64,
    pub max_site_moves: u32,
    pub expansions: u64,
}

#[derive(Debug, Clone, Copy)]
struct SiteRecord {
    site: Site,
    leaf: LeafId,
    moves: u32,
}

/// One way the structure can be inconsistent. Produced by [`ComponentTree::audit`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// A site of the universe is stored in no leaf, or in several.
    SiteLeafCount { site: SiteId, leaves: usize },
    /// A stored site is not part of the audited universe.
    UnexpectedSite { site: SiteId, leaf: LeafId },
    /// The site table disagrees with the leaf contents.
    SiteTable { site: SiteId, detail: String },
    /// A leaf's sites do not induce a connected subgraph.
    DisconnectedLeaf {
        leaf: LeafId,
        reachable: usize,
        size: usize,
    },
    /// Two different leaves hold intersecting disks.
    AdjacentLeaves {
        a: SiteId,
        b: SiteId,
        leaf_a: LeafId,
        leaf_b: LeafId,
    },
    /// A node's AWNN differs from the union of its subtree's components.
    AwnnContents {
        node: NodeId,
        missing: Vec<SiteId>,
        extra: Vec<SiteId>,
    },
    /// An AWNN entry has the wrong center or weight.
    AwnnEntry { node: NodeId, site: SiteId },
    /// The empty-leaf queue is not exactly the set of empty leaves.
    Queue { detail: String },
    /// Node or leaf arrays do not describe a complete tree of the recorded height.
    Shape { detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SiteLeafCount { site, leaves } => {
                write!(f, "site {site} stored in {leaves} leaves")
            }
            Violation::UnexpectedSite { site, leaf } => {
                write!(f, "site {site} in {leaf} is not in the universe")
            }
            Violation::SiteTable { site, detail } => write!(f, "site table for {site}: {detail}"),
            Violation::DisconnectedLeaf {
                leaf,
                reachable,
                size,
            } => write!(
                f,
                "{leaf} disconnected: {reachable} of {size} sites reachable"
            ),
            Violation::AdjacentLeaves {
                a,
                b,
                leaf_a,
                leaf_b,
            } => {
                write!(
                    f,
                    "sites {a} ({leaf_a}) and {b} ({leaf_b}) intersect across leaves"
                )
            }
            Violation::AwnnContents {
                node,
                missing,
                extra,
            } => write!(f, "awnn at {node}: missing {missing:?}, extra {extra:?}"),
            Violation::AwnnEntry { node, site } => {
                write!(f, "awnn at {node}: bad entry for site {site}")
            }
            Violation::Queue { detail } => write!(f, "empty-leaf queue: {detail}"),
            Violation::Shape { detail } => write!(f, "tree shape: {detail}"),
        }
    }
}

#[derive(Debug)]
pub struct ComponentTree<A: Awnn = ScanAwnn> {
    height: u32,
    nodes: Vec<A>,
    leaves: Vec<Vec<SiteId>>,
    empty_queue: VecDeque<LeafId>,
    sites: HashMap<SiteId, SiteRecord>,
    stats: TreeStats,
}

impl Default for ComponentTree<ScanAwnn> {
    fn default() -> Self {
        Self::new()
    }
}

impl ComponentTree<ScanAwnn> {
    pub fn new() -> Self {
        Self::with_backend()
    }
}

impl<A: Awnn> ComponentTree<A> {
    /// Height-0 tree: one node that is both root and the only (empty) leaf.
    pub fn with_backend() -> Self {
        ComponentTree {
            height: 0,
            nodes: vec![A::default()],
            leaves: vec![Vec::new()],
            empty_queue: VecDeque::from([LeafId(0)]),
            sites: HashMap::new(),
            stats: TreeStats::default(),
        }
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn site_count(&self) -> usize {
        self.sites.len()
    }

    pub fn stats(&self) -> TreeStats {
        self.stats
    }

    /// Leaves currently waiting in the empty-leaf queue, front first.
    pub fn empty_leaves(&self) -> impl Iterator<Item = LeafId> + '_ {
        self.empty_queue.iter().copied()
    }

    pub fn component_count(&self) -> usize {
        self.leaves.len() - self.empty_queue.len()
    }

    pub fn component(&self, leaf: LeafId) -> Option<&[SiteId]> {
        self.leaves.get(leaf.0).map(Vec::as_slice)
    }

    /// Non-empty leaves with their sites, in leaf order.
    pub fn components(&self) -> impl Iterator<Item = (LeafId, &[SiteId])> + '_ {
        self.leaves
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(i, c)| (LeafId(i), c.as_slice()))
    }

    pub fn site(&self, id: SiteId) -> Option<&Site> {
        self.sites.get(&id).map(|r| &r.site)
    }

    pub fn leaf_of(&self, id: SiteId) -> Option<LeafId> {
        self.sites.get(&id).map(|r| r.leaf)
    }

    /// How often `id` has been moved between leaves.
    pub fn site_moves(&self, id: SiteId) -> Option<u32> {
        self.sites.get(&id).map(|r| r.moves)
    }

    pub fn max_site_moves(&self) -> u32 {
        self.stats.max_site_moves
    }

    pub fn awnn(&self, node: NodeId) -> Option<&A> {
        self.nodes.get(node.0)
    }

    pub fn leaf_node(&self, leaf: LeafId) -> NodeId {
        NodeId((1 << self.height) - 1 + leaf.0)
    }

    pub fn node_leaf(&self, node: NodeId) -> Option<LeafId> {
        let first = (1 << self.height) - 1;
        (node.0 >= first && node.0 < self.nodes.len()).then(|| LeafId(node.0 - first))
    }

    /// Lowest common ancestor under heap indexing.
    pub fn lca(&self, a: NodeId, b: NodeId) -> NodeId {
        lca(a, b)
    }

    fn path_to_root(&self, leaf: LeafId) -> impl Iterator<Item = NodeId> {
        std::iter::successors(Some(self.leaf_node(leaf)), |n| n.parent())
    }

    fn awnn_insert(&mut self, node: NodeId, site: &Site) {
        self.nodes[node.0]
            .insert(AwnnEntry::from_site(site))
            .expect("site ids are checked before touching the AWNNs");
        self.stats.awnn_inserts += 1;
    }

    fn awnn_delete(&mut self, node: NodeId, id: SiteId) {
        self.nodes[node.0]
            .delete(id)
            .expect("Invariant 2 places every stored site on its leaf-to-root path");
        self.stats.awnn_deletes += 1;
    }

    fn awnn_query(&mut self, node: NodeId, site: &Site) -> bool {
        self.stats.awnn_queries += 1;
        self.nodes[node.0]
            .nearest(site.center)
            .is_some_and(|hit| hit.value <= site.radius)
    }

    /// Doubles the tree. Only allowed when no empty leaf is left.
    ///
    /// The old tree becomes the left subtree of a new root, the right subtree
    /// is empty, the new root's AWNN is rebuilt from the old root's entries
    /// and the `2^h` new leaves are queued left to right.
    pub fn expand_tree(&mut self) -> Result<()> {
        if !self.empty_queue.is_empty() {
            return Err(Error::QueueNotEmpty(self.empty_queue.len()));
        }
        let old_leaves = self.leaves.len();
        let new_len = 2 * self.nodes.len() + 1;
        let root_entries = self.nodes[0].entries();
        let copies = root_entries.len() as u64;
        let mut new_root = A::from_entries(root_entries).expect("root AWNN holds distinct ids");
        let old = std::mem::take(&mut self.nodes);
        let mut nodes: Vec<A> = Vec::with_capacity(new_len);
        nodes.resize_with(new_len, A::default);
        for (i, awnn) in old.into_iter().enumerate() {
            // Depth d, position p moves to depth d + 1, position p.
            let shifted = i + (1 << NodeId(i).depth());
            nodes[shifted] = awnn;
        }
        std::mem::swap(&mut nodes[0], &mut new_root);
        self.nodes = nodes;
        self.height += 1;
        self.leaves.resize_with(2 * old_leaves, Vec::new);
        self.empty_queue
            .extend((old_leaves..2 * old_leaves).map(LeafId));
        self.stats.awnn_inserts += copies;
        self.stats.expansions += 1;
        Ok(())
    }

    fn check_fresh(&self, sites: &[Site]) -> Result<()> {
        let mut seen = HashSet::with_capacity(sites.len());
        for s in sites {
            if self.sites.contains_key(&s.id) || !seen.insert(s.id) {
                return Err(Error::DuplicateSite(s.id));
            }
        }
        Ok(())
    }

    /// Stores a component that touches nothing already in the tree.
    ///
    /// The caller guarantees isolation and internal connectivity; use
    /// [`insert_isolated_component_checked`](Self::insert_isolated_component_checked)
    /// to have both verified. Takes the front of the empty-leaf queue,
    /// doubling the tree first if the queue is empty, and adds the sites to
    /// every AWNN from that leaf up to the root.
    pub fn insert_isolated_component(&mut self, component: &[Site]) -> Result<LeafId> {
        self.insert_isolated(component).map(|(leaf, _)| leaf)
    }

    /// Like [`insert_isolated_component`](Self::insert_isolated_component) but
    /// rejects components that intersect stored disks or are disconnected.
    pub fn insert_isolated_component_checked(&mut self, component: &[Site]) -> Result<LeafId> {
        if component.is_empty() {
            return Err(Error::EmptyComponent);
        }
        self.check_fresh(component)?;
        for s in component {
            if let Some(t) = self.sites.values().find(|r| disks_intersect(s, &r.site)) {
                return Err(Error::Precondition(format!(
                    "site {} intersects stored site {}",
                    s.id, t.site.id
                )));
            }
        }
        if reachable_within(component, 0) != component.len() {
            return Err(Error::Precondition("component is not connected".into()));
        }
        self.insert_isolated_component(component)
    }

    fn insert_isolated(&mut self, component: &[Site]) -> Result<(LeafId, bool)> {
        if component.is_empty() {
            return Err(Error::EmptyComponent);
        }
        self.check_fresh(component)?;
        let expanded = self.empty_queue.is_empty();
        if expanded {
            self.expand_tree()?;
        }
        let leaf = self
            .empty_queue
            .pop_front()
            .expect("expansion leaves at least one empty leaf");
        for s in component {
            self.sites.insert(
                s.id,
                SiteRecord {
                    site: *s,
                    leaf,
                    moves: 0,
                },
            );
            self.leaves[leaf.0].push(s.id);
        }
        let path: Vec<NodeId> = self.path_to_root(leaf).collect();
        for node in path {
            for s in component {
                self.awnn_insert(node, s);
            }
        }
        Ok((leaf, expanded))
    }

    /// Leaves whose components contain a disk intersecting `site`'s disk.
    ///
    /// Queries the root first; if its nearest disk boundary lies farther than
    /// `site.radius` nothing is hit. Otherwise descends, querying both
    /// children of each visited node and entering those whose nearest
    /// boundary is within `site.radius`.
    pub fn find_intersected_components(&mut self, site: &Site) -> Vec<LeafId> {
        let mut found = Vec::new();
        if !self.awnn_query(NodeId::ROOT, site) {
            return found;
        }
        let mut stack = vec![NodeId::ROOT];
        while let Some(node) = stack.pop() {
            if let Some(leaf) = self.node_leaf(node) {
                found.push(leaf);
                continue;
            }
            let (left, right) = node.children();
            // Right first so the stack pops left subtrees first.
            if self.awnn_query(right, site) {
                stack.push(right);
            }
            if self.awnn_query(left, site) {
                stack.push(left);
            }
        }
        found
    }

    /// Inserts one site, merging every component it touches into the largest.
    pub fn insert_site(&mut self, site: Site) -> Result<MergeReport> {
        if self.sites.contains_key(&site.id) {
            return Err(Error::DuplicateSite(site.id));
        }
        let hit = self.find_intersected_components(&site);
        self.stats.site_insertions += 1;
        if hit.is_empty() {
            let (leaf, expanded) = self.insert_isolated(&[site])?;
            return Ok(MergeReport {
                inserted: site.id,
                intersected_components: hit,
                target_leaf: leaf,
                representatives: Vec::new(),
                sites_moved: 0,
                expanded,
            });
        }

        let representatives: Vec<SiteId> = hit.iter().map(|l| self.leaves[l.0][0]).collect();
        let mut target = hit[0];
        for &leaf in &hit[1..] {
            if self.leaves[leaf.0].len() > self.leaves[target.0].len() {
                target = leaf;
            }
        }

        self.sites.insert(
            site.id,
            SiteRecord {
                site,
                leaf: target,
                moves: 0,
            },
        );
        self.leaves[target.0].push(site.id);
        let path: Vec<NodeId> = self.path_to_root(target).collect();
        for node in path {
            self.awnn_insert(node, &site);
        }

        let mut moved = 0;
        for &leaf in hit.iter().filter(|&&l| l != target) {
            moved += self.absorb(leaf, target);
        }
        self.stats.sites_moved += moved as u64;

        Ok(MergeReport {
            inserted: site.id,
            intersected_components: hit,
            target_leaf: target,
            representatives,
            sites_moved: moved,
            expanded: false,
        })
    }

    /// Clean-up for one absorbed component: moves its sites from `from` into
    /// `into`, updating the AWNNs strictly below their lowest common ancestor,
    /// and queues the emptied leaf.
    fn absorb(&mut self, from: LeafId, into: LeafId) -> usize {
        let moving = std::mem::take(&mut self.leaves[from.0]);
        let meet = lca(self.leaf_node(from), self.leaf_node(into));
        let below = |start: NodeId| {
            std::iter::successors(Some(start), |n| n.parent()).take_while(move |&n| n != meet)
        };
        let removal: Vec<NodeId> = below(self.leaf_node(from)).collect();
        let addition: Vec<NodeId> = below(self.leaf_node(into)).collect();
        for &id in &moving {
            let record = self
                .sites
                .get_mut(&id)
                .expect("leaf sites are in the site table");
            record.leaf = into;
            record.moves += 1;
            let site = record.site;
            self.stats.max_site_moves = self.stats.max_site_moves.max(record.moves);
            for &node in &removal {
                self.awnn_delete(node, id);
            }
            for &node in &addition {
                self.awnn_insert(node, &site);
            }
        }
        let count = moving.len();
        self.leaves[into.0].extend(moving);
        self.empty_queue.push_back(from);
        count
    }

    /// Checks every structural invariant against `universe`, the full set of
    /// sites that should be stored. Returns all violations found.
    pub fn audit(&self, universe: &[Site]) -> Vec<Violation> {
        let mut out = Vec::new();
        self.audit_shape(&mut out);
        if !out.is_empty() {
            return out;
        }
        self.audit_sites(universe, &mut out);
        self.audit_components(&mut out);
        self.audit_awnns(&mut out);
        self.audit_queue(&mut out);
        out
    }

    fn audit_shape(&self, out: &mut Vec<Violation>) {
        let leaves = 1usize << self.height;
        if self.nodes.len() != 2 * leaves - 1 {
            out.push(Violation::Shape {
                detail: format!(
                    "{} nodes for height {} (expected {})",
                    self.nodes.len(),
                    self.height,
                    2 * leaves - 1
                ),
            });
        }
        if self.leaves.len() != leaves {
            out.push(Violation::Shape {
                detail: format!(
                    "{} leaves for height {} (expected {leaves})",
                    self.leaves.len(),
                    self.height
                ),
            });
        }
    }

    fn audit_sites(&self, universe: &[Site], out: &mut Vec<Violation>) {
        let mut placed: HashMap<SiteId, Vec<LeafId>> = HashMap::new();
        for (i, comp) in self.leaves.iter().enumerate() {
            for &id in comp {
                placed.entry(id).or_default().push(LeafId(i));
            }
        }
        let known: HashSet<SiteId> = universe.iter().map(|s| s.id).collect();
        for s in universe {
            let leaves = placed.get(&s.id).map_or(0, Vec::len);
            if leaves != 1 {
                out.push(Violation::SiteLeafCount { site: s.id, leaves });
            }
            match self.sites.get(&s.id) {
                None => out.push(Violation::SiteTable {
                    site: s.id,
                    detail: "missing".into(),
                }),
                Some(r) => {
                    if r.site != *s {
                        out.push(Violation::SiteTable {
                            site: s.id,
                            detail: "stored geometry differs".into(),
                        });
                    }
                    if leaves == 1 && placed[&s.id][0] != r.leaf {
                        out.push(Violation::SiteTable {
                            site: s.id,
                            detail: format!(
                                "recorded in {} but stored in {}",
                                r.leaf, placed[&s.id][0]
                            ),
                        });
                    }
                }
            }
        }
        let mut extra: Vec<(SiteId, LeafId)> = placed
            .iter()
            .filter(|(id, _)| !known.contains(id))
            .map(|(&id, leaves)| (id, leaves[0]))
            .collect();
        extra.sort();
        out.extend(
            extra
                .into_iter()
                .map(|(site, leaf)| Violation::UnexpectedSite { site, leaf }),
        );
        if self.sites.len() != placed.len() {
            let mut orphans: Vec<SiteId> = self
                .sites
                .keys()
                .filter(|id| !placed.contains_key(id))
                .copied()
                .collect();
            orphans.sort();
            for site in orphans {
                out.push(Violation::SiteTable {
                    site,
                    detail: "recorded but stored in no leaf".into(),
                });
            }
        }
    }

    fn stored_sites(&self, ids: &[SiteId]) -> Vec<Site> {
        ids.iter()
            .filter_map(|id| self.sites.get(id).map(|r| r.site))
            .collect()
    }

    fn audit_components(&self, out: &mut Vec<Violation>) {
        let comps: Vec<(LeafId, Vec<Site>)> = self
            .components()
            .map(|(leaf, ids)| (leaf, self.stored_sites(ids)))
            .collect();
        for (leaf, sites) in &comps {
            let reachable = reachable_within(sites, 0);
            if reachable != sites.len() {
                out.push(Violation::DisconnectedLeaf {
                    leaf: *leaf,
                    reachable,
                    size: sites.len(),
                });
            }
        }
        for (i, (leaf_a, a_sites)) in comps.iter().enumerate() {
            for (leaf_b, b_sites) in &comps[i + 1..] {
                'pair: for a in a_sites {
                    for b in b_sites {
                        if disks_intersect(a, b) {
                            out.push(Violation::AdjacentLeaves {
                                a: a.id,
                                b: b.id,
                                leaf_a: *leaf_a,
                                leaf_b: *leaf_b,
                            });
                            break 'pair;
                        }
                    }
                }
            }
        }
    }

    fn audit_awnns(&self, out: &mut Vec<Violation>) {
        // Bottom-up: expected id set per node.
        let mut expected: Vec<Vec<SiteId>> = vec![Vec::new(); self.nodes.len()];
        let first_leaf = (1 << self.height) - 1;
        for i in (0..self.nodes.len()).rev() {
            expected[i] = if i >= first_leaf {
                self.leaves[i - first_leaf].clone()
            } else {
                let (l, r) = NodeId(i).children();
                let mut ids = expected[l.0].clone();
                ids.extend_from_slice(&expected[r.0]);
                ids
            };
        }
        for (i, awnn) in self.nodes.iter().enumerate() {
            let node = NodeId(i);
            let want: HashSet<SiteId> = expected[i].iter().copied().collect();
            let entries = awnn.entries();
            let have: HashSet<SiteId> = entries.iter().map(|e| e.site_id).collect();
            let mut missing: Vec<SiteId> = want.difference(&have).copied().collect();
            let mut extra: Vec<SiteId> = have.difference(&want).copied().collect();
            if !missing.is_empty() || !extra.is_empty() || awnn.len() != have.len() {
                missing.sort();
                extra.sort();
                out.push(Violation::AwnnContents {
                    node,
                    missing,
                    extra,
                });
            }
            for e in entries {
                if let Some(r) = self.sites.get(&e.site_id) {
                    if e != AwnnEntry::from_site(&r.site) {
                        out.push(Violation::AwnnEntry {
                            node,
                            site: e.site_id,
                        });
                    }
                }
            }
        }
    }

    fn audit_queue(&self, out: &mut Vec<Violation>) {
        let mut seen = HashSet::new();
        for &leaf in &self.empty_queue {
            if !seen.insert(leaf) {
                out.push(Violation::Queue {
                    detail: format!("{leaf} queued twice"),
                });
            }
            match self.leaves.get(leaf.0) {
                None => out.push(Violation::Queue {
                    detail: format!("{leaf} does not exist"),
                }),
                Some(c) if !c.is_empty() => out.push(Violation::Queue {
                    detail: format!("{leaf} is queued but holds {} sites", c.len()),
                }),
                _ => {}
            }
        }
        for (i, c) in self.leaves.iter().enumerate() {
            if c.is_empty() && !seen.contains(&LeafId(i)) {
                out.push(Violation::Queue {
                    detail: format!("empty {} is not queued", LeafId(i)),
                });
            }
        }
    }
}

/// Lowest common ancestor of two heap-indexed nodes: repeatedly replace the
/// larger index, which is never shallower, by its parent.
pub fn lca(mut a: NodeId, mut b: NodeId) -> NodeId {
    while a != b {
        if a.0 > b.0 {
            a = NodeId((a.0 - 1) / 2);
        } else {
            b = NodeId((b.0 - 1) / 2);
        }
    }
    a
}

/// Number of sites reachable from `sites[start]` in the disk graph induced by
/// `sites`. Quadratic; audit use only.
fn reachable_within(sites: &[Site], start: usize) -> usize {
    if sites.is_empty() {
        return 0;
    }
    let mut seen = vec![false; sites.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..sites.len() {
            if !seen[j] && disks_intersect(&sites[i], &sites[j]) {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count
}
