//! Plane primitives shared by every other module.
//!
//! Coordinates and radii are `f64`. Disks are closed, so tangent disks
//! intersect.

use std::fmt;

use crate::error::{Error, Result};

/// Stable identifier of a site. Assigned in insertion order and never reused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SiteId(pub usize);

impl fmt::Display for SiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for SiteId {
    fn from(value: usize) -> Self {
        SiteId(value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point) -> f64 {
        euclidean_distance(*self, *other)
    }

    pub(crate) fn distance_squared(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// A point with a strictly positive radius: the closed disk `D_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Site {
    pub id: SiteId,
    pub center: Point,
    pub radius: f64,
}

impl Site {
    /// Builds a site, rejecting non-finite coordinates and radii that are not
    /// strictly positive and finite.
    pub fn new(id: SiteId, center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::InvalidSite(format!(
                "center ({}, {}) is not finite",
                center.x, center.y
            )));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidSite(format!(
                "radius {radius} must be positive and finite"
            )));
        }
        Ok(Site { id, center, radius })
    }

    pub fn intersects(&self, other: &Site) -> bool {
        disks_intersect(self, other)
    }
}

pub fn euclidean_distance(a: Point, b: Point) -> f64 {
    a.distance_squared(&b).sqrt()
}

/// Closed-disk intersection test, `‖st‖² ≤ (r_s + r_t)²`.
pub fn disks_intersect(s: &Site, t: &Site) -> bool {
    let reach = s.radius + t.radius;
    s.center.distance_squared(&t.center) <= reach * reach
}

/// Additively weighted distance from `q` to `s` with weight `-r_s`: the signed
/// distance from `q` to the boundary of `D_s`. Negative inside the disk.
pub fn weighted_distance(q: Point, s: &Site) -> f64 {
    euclidean_distance(q, s.center) - s.radius
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn site(x: f64, y: f64, r: f64) -> Site {
        Site::new(SiteId(0), Point::new(x, y), r).unwrap()
    }

    #[test]
    fn euclidean_distance_examples() {
        assert_eq!(
            euclidean_distance(Point::new(0.0, 0.0), Point::new(0.0, 0.0)),
            0.0
        );
        assert_eq!(
            euclidean_distance(Point::new(0.0, 0.0), Point::new(3.0, 4.0)),
            5.0
        );
        assert_eq!(
            euclidean_distance(Point::new(1.0, 1.0), Point::new(-2.0, 5.0)),
            5.0
        );
    }

    #[test]
    fn intersection_examples() {
        assert!(disks_intersect(&site(0.0, 0.0, 1.0), &site(2.0, 0.0, 1.0)));
        assert!(!disks_intersect(&site(0.0, 0.0, 1.0), &site(3.0, 0.0, 1.0)));
        assert!(disks_intersect(&site(0.0, 0.0, 2.0), &site(0.5, 0.0, 0.25)));
        let s = site(4.0, -1.0, 0.5);
        assert!(disks_intersect(&s, &s));
    }

    #[test]
    fn weighted_distance_examples() {
        assert_eq!(
            weighted_distance(Point::new(0.0, 0.0), &site(0.0, 0.0, 1.0)),
            -1.0
        );
        assert_eq!(
            weighted_distance(Point::new(3.0, 4.0), &site(0.0, 0.0, 2.0)),
            3.0
        );
        assert_eq!(
            weighted_distance(Point::new(2.0, 0.0), &site(0.0, 0.0, 2.0)),
            0.0
        );
    }

    #[test]
    fn rejects_invalid_sites() {
        let p = Point::new(0.0, 0.0);
        assert!(Site::new(SiteId(0), p, 0.0).is_err());
        assert!(Site::new(SiteId(0), p, -1.0).is_err());
        assert!(Site::new(SiteId(0), p, f64::INFINITY).is_err());
        assert!(Site::new(SiteId(0), p, f64::NAN).is_err());
        assert!(Site::new(SiteId(0), Point::new(f64::NAN, 0.0), 1.0).is_err());
        assert!(Site::new(SiteId(0), Point::new(0.0, f64::NEG_INFINITY), 1.0).is_err());
    }

    fn coord() -> impl Strategy<Value = f64> {
        -1000.0..1000.0f64
    }

    fn any_site() -> impl Strategy<Value = Site> {
        (coord(), coord(), 0.001..200.0f64).prop_map(|(x, y, r)| site(x, y, r))
    }

    proptest! {
        #[test]
        fn intersection_is_symmetric(s in any_site(), t in any_site()) {
            prop_assert_eq!(disks_intersect(&s, &t), disks_intersect(&t, &s));
        }

        #[test]
        fn squared_and_weighted_forms_agree(s in any_site(), t in any_site()) {
            let gap = s.center.distance(&t.center) - (s.radius + t.radius);
            prop_assume!(gap.abs() > 1e-9);
            prop_assert_eq!(
                disks_intersect(&s, &t),
                weighted_distance(s.center, &t) <= s.radius
            );
        }

        #[test]
        fn triangle_inequality(
            a in (coord(), coord()),
            b in (coord(), coord()),
            c in (coord(), coord()),
        ) {
            let (a, b, c) = (Point::new(a.0, a.1), Point::new(b.0, b.1), Point::new(c.0, c.1));
            let ac = euclidean_distance(a, c);
            let via = euclidean_distance(a, b) + euclidean_distance(b, c);
            prop_assert!(ac <= via * (1.0 + 1e-12) + 1e-12);
            prop_assert_eq!(euclidean_distance(a, b), euclidean_distance(b, a));
        }
    }
}
