//! Incremental connectivity in disk intersection graphs.
//!
//! Sites (plane points with positive radii) are inserted one at a time.
//! Two sites are adjacent when their closed disks intersect; the structure
//! answers "are `a` and `b` in the same connected component?" at any point.
//! No bound on the ratio between the largest and smallest radius is assumed.
//!
//! The moving parts:
//!
//! * [`component_tree::ComponentTree`] keeps one connected component per
//!   leaf of a complete binary tree and an AWNN structure ([`awnn`]) over the
//!   sites of every subtree. A new disk finds all components it touches by
//!   descending only into subtrees whose nearest disk boundary is within its
//!   radius. Merges move the smaller components into the largest one.
//! * [`dsu::DsuForest`] mirrors the partition for near-constant time queries.
//! * [`DiskConnectivity`] ties both together.
//! * [`oracle`] has the brute-force reference and instance generators,
//!   [`cli`] the text protocol and benchmark harness.
//!
//! ```
//! use disk_connectivity::{DiskConnectivity, Point};
//!
//! let mut dc = DiskConnectivity::new();
//! let (a, _) = dc.insert(Point::new(0.0, 0.0), 1.0).unwrap();
//! let (b, _) = dc.insert(Point::new(10.0, 0.0), 1.0).unwrap();
//! assert!(!dc.connected(a, b).unwrap());
//! let (_, report) = dc.insert(Point::new(5.0, 0.0), 4.2).unwrap();
//! assert_eq!(report.intersected_components.len(), 2);
//! assert!(dc.connected(a, b).unwrap());
//! assert_eq!(dc.component_count(), 1);
//! ```

pub mod awnn;
pub mod cli;
pub mod component_tree;
pub mod connectivity;
pub mod dsu;
mod error;
pub mod geometry;
pub mod oracle;

pub use awnn::{Awnn, AwnnEntry, ScanAwnn, TieredAwnn};
pub use component_tree::{ComponentTree, LeafId, MergeReport, NodeId};
pub use connectivity::{DiskConnectivity, Stats};
pub use dsu::DsuForest;
pub use error::{Error, Result};
pub use geometry::{disks_intersect, euclidean_distance, weighted_distance, Point, Site, SiteId};
