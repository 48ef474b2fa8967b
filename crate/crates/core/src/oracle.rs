//! Brute-force ground truth and deterministic instance generators.
//!
//! [`OracleState`] tests every new disk against all stored disks, so it is
//! quadratic overall and only meant for checking the real structure.
//! [`bfs_labels`] is a second, independent ground truth built from the
//! explicit intersection graph.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, Pareto};

use crate::dsu::DsuForest;
use crate::error::{Error, Result};
use crate::geometry::{disks_intersect, Point, Site, SiteId};

/// All-pairs incremental connectivity.
#[derive(Debug, Clone, Default)]
pub struct OracleState {
    sites: Vec<Site>,
    dsu: DsuForest,
    pair_tests: u64,
}

impl OracleState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// Number of disk-pair intersection tests performed so far.
    pub fn pair_tests(&self) -> u64 {
        self.pair_tests
    }

    pub fn insert(&mut self, site: Site) -> Result<()> {
        self.dsu.make_set(site.id)?;
        for t in &self.sites {
            self.pair_tests += 1;
            if disks_intersect(&site, t) {
                self.dsu.union(site.id, t.id)?;
            }
        }
        self.sites.push(site);
        Ok(())
    }

    pub fn connected(&mut self, a: SiteId, b: SiteId) -> Result<bool> {
        self.dsu.same_set(a, b)
    }

    pub fn component_count(&self) -> usize {
        self.dsu.set_count()
    }

    /// Component label per site (in insertion order), numbered by first
    /// appearance. Two partitions are equal iff their label vectors are.
    pub fn labels(&mut self) -> Vec<usize> {
        let ids: Vec<SiteId> = self.sites.iter().map(|s| s.id).collect();
        let roots: Vec<SiteId> = ids
            .iter()
            .map(|&id| self.dsu.find(id).expect("every oracle site has a set"))
            .collect();
        canonical_labels(&roots)
    }
}

/// Renumbers arbitrary component keys by order of first appearance.
pub fn canonical_labels<K: Eq + std::hash::Hash + Copy>(keys: &[K]) -> Vec<usize> {
    let mut seen = std::collections::HashMap::new();
    keys.iter()
        .map(|k| {
            let next = seen.len();
            *seen.entry(*k).or_insert(next)
        })
        .collect()
}

/// Connected components of the explicit intersection graph of `sites`, found
/// by breadth-first search. Labels follow [`canonical_labels`] numbering.
pub fn bfs_labels(sites: &[Site]) -> Vec<usize> {
    let n = sites.len();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if disks_intersect(&sites[i], &sites[j]) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in &adjacency[i] {
                if label[j] == usize::MAX {
                    label[j] = next;
                    queue.push_back(j);
                }
            }
        }
        next += 1;
    }
    label
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Centers uniform in the box, radii uniform in `[min, max]`.
    Uniform,
    /// Centers uniform, radii from a Lomax (shifted Pareto) law starting at
    /// `min`, capped at the box side. Gives an unbounded radius ratio.
    HeavyTail,
    /// `⌈√n⌉` Gaussian clusters with uniform cluster centers.
    Clustered,
    /// Collinear chain of pairwise tangent disks, inserted in random order.
    /// Radii are multiples of 1/8 so every tangency is exact in `f64`.
    TangentChain,
}

impl Preset {
    pub const ALL: [Preset; 4] = [
        Preset::Uniform,
        Preset::HeavyTail,
        Preset::Clustered,
        Preset::TangentChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Uniform => "uniform",
            Preset::HeavyTail => "heavy_tail",
            Preset::Clustered => "clustered",
            Preset::TangentChain => "tangent_chain",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown preset `{s}`")))
    }
}

/// Radius and spread parameters. Which fields matter depends on the preset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusParams {
    /// Lower radius bound (the floor for `heavy_tail`).
    pub min: f64,
    /// Upper radius bound. Unused by `heavy_tail`.
    pub max: f64,
    /// Pareto shape for `heavy_tail`.
    pub tail_shape: f64,
    /// Pareto scale for `heavy_tail`.
    pub tail_scale: f64,
    /// Standard deviation of site offsets around a cluster center.
    pub cluster_sigma: f64,
}

impl RadiusParams {
    pub fn defaults_for(preset: Preset) -> Self {
        let base = RadiusParams {
            min: 0.5,
            max: 1.5,
            tail_shape: 1.5,
            tail_scale: 0.5,
            cluster_sigma: 1.5,
        };
        match preset {
            Preset::Uniform | Preset::TangentChain => base,
            Preset::HeavyTail => RadiusParams { min: 0.01, ..base },
            Preset::Clustered => RadiusParams {
                min: 0.2,
                max: 0.6,
                ..base
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub preset: Preset,
    pub n: usize,
    pub seed: u64,
    /// Side of the square `[0, box_side]²` holding the centers.
    pub box_side: f64,
    pub radius: RadiusParams,
}

impl GeneratorConfig {
    /// Preset defaults. The box side `2√n` (at least 10) keeps uniform
    /// instances near the percolation threshold, so components keep merging.
    pub fn new(preset: Preset, n: usize, seed: u64) -> Self {
        GeneratorConfig {
            preset,
            n,
            seed,
            box_side: (2.0 * (n as f64).sqrt()).max(10.0),
            radius: RadiusParams::defaults_for(preset),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidConfig(what.to_string()));
        let r = &self.radius;
        if !(self.box_side.is_finite() && self.box_side > 0.0) {
            return bad("box side must be positive and finite");
        }
        if !(r.min.is_finite() && r.min > 0.0) {
            return bad("minimum radius must be positive and finite");
        }
        if !(r.max.is_finite() && r.max >= r.min) {
            return bad("maximum radius must be finite and at least the minimum");
        }
        if !(r.tail_shape.is_finite() && r.tail_shape > 0.0) {
            return bad("tail shape must be positive and finite");
        }
        if !(r.tail_scale.is_finite() && r.tail_scale > 0.0) {
            return bad("tail scale must be positive and finite");
        }
        if !(r.cluster_sigma.is_finite() && r.cluster_sigma >= 0.0) {
            return bad("cluster sigma must be nonnegative and finite");
        }
        if self.preset == Preset::TangentChain && r.max < 0.125 {
            return bad("tangent chain radii are multiples of 1/8; max must be at least 0.125");
        }
        Ok(())
    }
}

/// Deterministic instance for `cfg`. Site ids are `0..n` in list order,
/// which is also the intended insertion order.
pub fn generate(cfg: &GeneratorConfig) -> Result<Vec<Site>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let side = cfg.box_side;
    let r = cfg.radius;
    let mut raw: Vec<(Point, f64)> = Vec::with_capacity(cfg.n);
    match cfg.preset {
        Preset::Uniform => {
            for _ in 0..cfg.n {
                let c = Point::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side));
                raw.push((c, rng.gen_range(r.min..=r.max)));
            }
        }
        Preset::HeavyTail => {
            let pareto = Pareto::new(r.tail_scale, r.tail_shape)
                .map_err(|e| Error::InvalidConfig(e.to_string()))?;
            for _ in 0..cfg.n {
                let c = Point::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side));
                let radius = (r.min + pareto.sample(&mut rng) - r.tail_scale).min(side);
                raw.push((c, radius));
            }
        }
        Preset::Clustered => {
            let k = (cfg.n as f64).sqrt().ceil().max(1.0) as usize;
            let centers: Vec<Point> = (0..k)
                .map(|_| Point::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side)))
                .collect();
            let spread = Normal::new(0.0, r.cluster_sigma)
                .map_err(|e| Error::InvalidConfig(e.to_string()))?;
            for _ in 0..cfg.n {
                let home = centers[rng.gen_range(0..k)];
                let c = Point::new(
                    home.x + spread.sample(&mut rng),
                    home.y + spread.sample(&mut rng),
                );
                raw.push((c, rng.gen_range(r.min..=r.max)));
            }
        }
        Preset::TangentChain => {
            let lo = ((r.min * 8.0).ceil() as i64).max(1);
            let hi = ((r.max * 8.0).floor() as i64).max(lo);
            let mut x = 0.0;
            let mut prev: Option<f64> = None;
            for _ in 0..cfg.n {
                let radius = rng.gen_range(lo..=hi) as f64 / 8.0;
                if let Some(p) = prev {
                    x += p + radius;
                }
                raw.push((Point::new(x, 0.0), radius));
                prev = Some(radius);
            }
            raw.shuffle(&mut rng);
        }
    }
    raw.into_iter()
        .enumerate()
        .map(|(i, (c, radius))| Site::new(SiteId(i), c, radius))
        .collect()
}

/// Ratio of the largest to the smallest radius. `1.0` for empty input.
pub fn radius_ratio(sites: &[Site]) -> f64 {
    let (lo, hi) = sites.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), s| {
        (lo.min(s.radius), hi.max(s.radius))
    });
    if sites.is_empty() {
        1.0
    } else {
        hi / lo
    }
}
