//! Dynamic additively weighted nearest neighbor (AWNN) structures.
//!
//! An AWNN stores weighted points and, for a query point `q`, reports the
//! point `p` minimizing `‖pq‖ + w_p`. The component tree stores every site
//! with weight `-r_s`, which turns the query into "which disk boundary is
//! closest to `q`".
//!
//! Two backends implement [`Awnn`]:
//!
//! * [`ScanAwnn`] keeps a flat vector. Updates are O(1), queries O(n). It is
//!   the reference backend and the default everywhere.
//! * [`TieredAwnn`] applies the logarithmic method to static kd-trees with
//!   lower-bound pruning. Deletions leave tombstones; the structure is rebuilt
//!   once tombstones outnumber half of the live entries.
//!
//! Both return bit-identical answers: the minimum of
//! `euclidean_distance(center, q) + weight`, ties going to the smallest id.

use std::fmt::Debug;

use crate::error::Result;
use crate::geometry::{euclidean_distance, Point, Site, SiteId};

mod scan;
mod tiered;

pub use scan::ScanAwnn;
pub use tiered::TieredAwnn;

/// A weighted point. The weight is always the negated radius of its site.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AwnnEntry {
    pub site_id: SiteId,
    pub center: Point,
    pub weight: f64,
}

impl AwnnEntry {
    pub fn from_site(site: &Site) -> Self {
        AwnnEntry {
            site_id: site.id,
            center: site.center,
            weight: -site.radius,
        }
    }

    #[inline]
    pub fn value(&self, q: Point) -> f64 {
        euclidean_distance(self.center, q) + self.weight
    }
}

/// Answer to a nearest neighbor query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nearest {
    pub site_id: SiteId,
    pub value: f64,
}

impl Nearest {
    /// `true` if `self` beats `other` under (value, id) order.
    #[inline]
    pub(crate) fn beats(&self, other: &Nearest) -> bool {
        self.value < other.value || (self.value == other.value && self.site_id < other.site_id)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AwnnCounters {
    pub inserts: u64,
    pub deletes: u64,
    pub queries: u64,
}

/// Contract shared by all AWNN backends.
///
/// Mutation needs exclusive access. Queries take `&self` and may run
/// concurrently between mutations; the query counter is atomic.
pub trait Awnn: Debug + Default + Send + Sync {
    /// Short backend name used in reports.
    const NAME: &'static str;

    /// Adds `entry`. Fails with [`Error::DuplicateSite`](crate::Error) if its
    /// id is already present, leaving the structure unchanged.
    fn insert(&mut self, entry: AwnnEntry) -> Result<()>;

    /// Removes the entry for `id` and returns it. Fails with
    /// [`Error::UnknownSite`](crate::Error) if absent.
    fn delete(&mut self, id: SiteId) -> Result<AwnnEntry>;

    /// Entry minimizing `‖pq‖ + w_p`, smallest id on ties. `None` when empty.
    fn nearest(&self, q: Point) -> Option<Nearest>;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn contains(&self, id: SiteId) -> bool;

    /// All live entries, sorted by id.
    fn entries(&self) -> Vec<AwnnEntry>;

    fn counters(&self) -> AwnnCounters;

    /// Builds a structure holding `entries`. Each entry counts as one insert.
    fn from_entries<I: IntoIterator<Item = AwnnEntry>>(entries: I) -> Result<Self> {
        let mut awnn = Self::default();
        for entry in entries {
            awnn.insert(entry)?;
        }
        Ok(awnn)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn entry(id: usize, x: f64, y: f64, w: f64) -> AwnnEntry {
        AwnnEntry {
            site_id: SiteId(id),
            center: Point::new(x, y),
            weight: w,
        }
    }

    fn contract_examples<A: Awnn>() {
        let mut a = A::default();
        assert!(a.nearest(Point::new(3.0, 3.0)).is_none());
        a.insert(entry(0, 0.0, 0.0, -1.0)).unwrap();
        assert_eq!(a.len(), 1);
        a.insert(entry(1, 5.0, 0.0, -10.0)).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(
            a.insert(entry(1, 9.0, 9.0, -1.0)),
            Err(Error::DuplicateSite(SiteId(1)))
        );
        assert_eq!(a.len(), 2);
        let hit = a.nearest(Point::new(0.0, 0.0)).unwrap();
        assert_eq!(hit.site_id, SiteId(1));
        assert_eq!(hit.value, -5.0);

        a.delete(SiteId(1)).unwrap();
        assert_eq!(a.nearest(Point::new(0.0, 0.0)).unwrap().site_id, SiteId(0));
        assert_eq!(a.delete(SiteId(1)), Err(Error::UnknownSite(SiteId(1))));
        a.delete(SiteId(0)).unwrap();
        assert!(a.is_empty());
        assert!(a.nearest(Point::new(0.0, 0.0)).is_none());
        assert_eq!(
            A::default().delete(SiteId(4)),
            Err(Error::UnknownSite(SiteId(4)))
        );

        let mut b = A::default();
        b.insert(entry(7, 0.0, 0.0, -1.0)).unwrap();
        b.insert(entry(3, 0.0, 0.0, -1.0)).unwrap();
        let hit = b.nearest(Point::new(1.0, 1.0)).unwrap();
        assert_eq!(hit.site_id, SiteId(3));
        assert_eq!(hit.value, 2f64.sqrt() - 1.0);

        let c = b.counters();
        assert_eq!((c.inserts, c.deletes, c.queries), (2, 0, 1));
        let ids: Vec<_> = b.entries().iter().map(|e| e.site_id).collect();
        assert_eq!(ids, vec![SiteId(3), SiteId(7)]);
    }

    #[test]
    fn scan_contract() {
        contract_examples::<ScanAwnn>();
    }

    #[test]
    fn tiered_contract() {
        contract_examples::<TieredAwnn>();
    }
}
