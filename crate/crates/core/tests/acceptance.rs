//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --release --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

mod common;

use std::collections::HashSet;
use std::fs;
use std::path::PathBuf;
use std::sync::OnceLock;

use common::{LabelModel, ShadowAwnn};
use disk_connectivity::cli::{
    awnn_update_envelope, ceil_log2, floor_log2, move_bound, run_benchmark, run_script, BenchReport,
};
use disk_connectivity::oracle::{generate, GeneratorConfig, OracleState, Preset};
use disk_connectivity::{
    Awnn, AwnnEntry, DiskConnectivity, DsuForest, Point, ScanAwnn, SiteId, TieredAwnn,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEEDS: std::ops::RangeInclusive<u64> = 1..=5;
const ORACLE_N: usize = 500;
const AUDIT_N: usize = 200;
const SAMPLED_PAIRS: usize = 50;
const FULL_CHECK_EVERY: usize = 50;
const MODEL_OPS: usize = 10_000;
const BENCH_SIZES: [usize; 4] = [1000, 2000, 4000, 8000];

fn verdict(criterion: u32, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {criterion}: {detail}");
}

#[derive(Debug)]
struct OracleRun {
    preset: Preset,
    seed: u64,
    mismatches: usize,
    pairs_checked: usize,
    sites_moved: u64,
    max_site_moves: u32,
    awnn_updates: u64,
    n: usize,
}

fn oracle_run(preset: Preset, seed: u64) -> OracleRun {
    let sites = generate(&GeneratorConfig::new(preset, ORACLE_N, seed)).unwrap();
    let mut dc = DiskConnectivity::new();
    let mut oracle = OracleState::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut mismatches = 0;
    let mut pairs_checked = 0;
    for (i, s) in sites.iter().enumerate() {
        dc.insert(s.center, s.radius).unwrap();
        oracle.insert(*s).unwrap();
        let live = i + 1;
        for _ in 0..SAMPLED_PAIRS {
            let (a, b) = (
                SiteId(rng.gen_range(0..live)),
                SiteId(rng.gen_range(0..live)),
            );
            if dc.connected(a, b).unwrap() != oracle.connected(a, b).unwrap() {
                mismatches += 1;
            }
            pairs_checked += 1;
        }
        if live % FULL_CHECK_EVERY == 0 {
            for a in 0..live {
                for b in a + 1..live {
                    let (a, b) = (SiteId(a), SiteId(b));
                    if dc.connected(a, b).unwrap() != oracle.connected(a, b).unwrap() {
                        mismatches += 1;
                    }
                    pairs_checked += 1;
                }
            }
            if dc.component_count() != oracle.component_count() {
                mismatches += 1;
            }
        }
    }
    let tree = dc.tree();
    let max_site_moves = sites
        .iter()
        .map(|s| tree.site_moves(s.id).unwrap())
        .max()
        .unwrap_or(0);
    let stats = dc.stats();
    assert_eq!(max_site_moves, stats.max_site_moves);
    OracleRun {
        preset,
        seed,
        mismatches,
        pairs_checked,
        sites_moved: stats.sites_moved,
        max_site_moves,
        awnn_updates: stats.awnn_inserts + stats.awnn_deletes,
        n: sites.len(),
    }
}

/// The twenty criterion-1 runs, shared with criteria 3 and 4.
fn oracle_runs() -> &'static [OracleRun] {
    static RUNS: OnceLock<Vec<OracleRun>> = OnceLock::new();
    RUNS.get_or_init(|| {
        Preset::ALL
            .into_iter()
            .flat_map(|p| SEEDS.map(move |s| (p, s)))
            .map(|(p, s)| oracle_run(p, s))
            .collect()
    })
}

#[test]
fn criterion_1_oracle_equivalence() {
    let runs = oracle_runs();
    assert_eq!(runs.len(), 20);
    let mismatches: usize = runs.iter().map(|r| r.mismatches).sum();
    let pairs: usize = runs.iter().map(|r| r.pairs_checked).sum();
    for r in runs.iter().filter(|r| r.mismatches > 0) {
        println!(
            "  {} seed {}: {} mismatches",
            r.preset, r.seed, r.mismatches
        );
    }
    verdict(
        1,
        mismatches == 0,
        &format!("{pairs} pair queries over 4 presets x 5 seeds, {mismatches} mismatches"),
    );
    assert_eq!(mismatches, 0);
}

#[test]
fn criterion_2_invariant_audit() {
    let mut violations = 0;
    let mut audits = 0;
    for preset in Preset::ALL {
        for seed in SEEDS {
            let sites = generate(&GeneratorConfig::new(preset, AUDIT_N, seed)).unwrap();
            let mut dc = DiskConnectivity::new();
            for s in &sites {
                dc.insert(s.center, s.radius).unwrap();
                let found = dc.audit();
                audits += 1;
                if !found.is_empty() {
                    println!("  {preset} seed {seed} after {}: {:?}", dc.len(), found);
                }
                violations += found.len();
            }
        }
    }
    verdict(
        2,
        violations == 0,
        &format!("{audits} audits at n={AUDIT_N}, {violations} violations"),
    );
    assert_eq!(violations, 0);
}

#[test]
fn criterion_3_move_bound() {
    let mut ok = true;
    for r in oracle_runs() {
        let per_site = r.max_site_moves <= floor_log2(r.n) as u32;
        let total = r.sites_moved <= move_bound(r.n);
        if !(per_site && total) {
            println!(
                "  {} seed {}: max moves {} (bound {}), total {} (bound {})",
                r.preset,
                r.seed,
                r.max_site_moves,
                floor_log2(r.n),
                r.sites_moved,
                move_bound(r.n)
            );
        }
        ok &= per_site && total;
    }
    let worst = oracle_runs()
        .iter()
        .map(|r| r.max_site_moves)
        .max()
        .unwrap();
    let most = oracle_runs().iter().map(|r| r.sites_moved).max().unwrap();
    verdict(
        3,
        ok,
        &format!(
            "max per-site moves {worst} <= {}, max total moves {most} <= {}",
            floor_log2(ORACLE_N),
            move_bound(ORACLE_N)
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_4_awnn_update_envelope() {
    let envelope = awnn_update_envelope(ORACLE_N);
    let mut ok = true;
    let mut worst = 0.0f64;
    for r in oracle_runs() {
        ok &= r.awnn_updates <= envelope;
        let k = (1 + ceil_log2(r.n)) as f64;
        let constant = r.awnn_updates as f64 / (r.n as f64 * k * k);
        worst = worst.max(constant);
        println!(
            "  {} seed {}: {} AWNN updates, constant {:.4}",
            r.preset, r.seed, r.awnn_updates, constant
        );
    }
    verdict(
        4,
        ok,
        &format!("all runs <= {envelope}; largest measured constant {worst:.4} (envelope 4)"),
    );
    assert!(ok);
}

fn awnn_model_mismatches<A: Awnn>(seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut real = A::default();
    let mut shadow = ShadowAwnn::default();
    let mut mismatches = 0;
    let coord = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) {
            rng.gen_range(-20..=20) as f64 * 0.5
        } else {
            rng.gen_range(-100.0..100.0)
        }
    };
    for _ in 0..MODEL_OPS {
        match rng.gen_range(0..10) {
            0..=3 => {
                let id = SiteId(rng.gen_range(0..600));
                let (x, y) = (coord(&mut rng), coord(&mut rng));
                let w = -(rng.gen_range(1..=16) as f64) * 0.25;
                let entry = AwnnEntry {
                    site_id: id,
                    center: Point::new(x, y),
                    weight: w,
                };
                if real.insert(entry).is_ok() != shadow.insert(id, x, y, w) {
                    mismatches += 1;
                }
            }
            4..=6 => {
                let id = SiteId(rng.gen_range(0..600));
                if real.delete(id).is_ok() != shadow.delete(id) {
                    mismatches += 1;
                }
            }
            _ => {
                let q = Point::new(coord(&mut rng), coord(&mut rng));
                let got = real.nearest(q).map(|n| (n.site_id, n.value));
                if got != shadow.nearest(q) {
                    mismatches += 1;
                }
            }
        }
        if real.len() != shadow.len() {
            mismatches += 1;
        }
    }
    mismatches
}

#[test]
fn criterion_5_awnn_model() {
    let scan = awnn_model_mismatches::<ScanAwnn>(5);
    let tiered = awnn_model_mismatches::<TieredAwnn>(5);
    verdict(
        5,
        scan == 0 && tiered == 0,
        &format!("{MODEL_OPS} ops per backend; scan {scan} mismatches, tiered {tiered} mismatches"),
    );
    assert_eq!((scan, tiered), (0, 0));
}

#[test]
fn criterion_6_dsu_model() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut dsu = DsuForest::new();
    let mut model = LabelModel::default();
    let mut present: Vec<SiteId> = Vec::new();
    let mut mismatches = 0;
    for _ in 0..MODEL_OPS {
        match rng.gen_range(0..3) {
            0 => {
                let id = SiteId(rng.gen_range(0..2000));
                let fresh = model.make_set(id);
                if dsu.make_set(id).is_ok() != fresh {
                    mismatches += 1;
                }
                if fresh {
                    present.push(id);
                }
            }
            _ if present.is_empty() => {}
            kind => {
                let a = present[rng.gen_range(0..present.len())];
                let b = present[rng.gen_range(0..present.len())];
                if kind == 1 {
                    let merged = dsu.union(a, b).unwrap();
                    if merged == model.same(a, b) {
                        mismatches += 1;
                    }
                    model.union(a, b);
                } else if dsu.same_set(a, b).unwrap() != model.same(a, b) {
                    mismatches += 1;
                }
            }
        }
        if dsu.set_count() != model.classes() {
            mismatches += 1;
        }
    }
    let roots: HashSet<SiteId> = present.iter().map(|&id| dsu.find(id).unwrap()).collect();
    if roots.len() != model.classes() {
        mismatches += 1;
    }
    verdict(
        6,
        mismatches == 0,
        &format!(
            "{MODEL_OPS} ops over {} elements, {mismatches} mismatches",
            present.len()
        ),
    );
    assert_eq!(mismatches, 0);
}

#[test]
fn criterion_7_subquadratic_queries() {
    let reports: Vec<BenchReport> = BENCH_SIZES
        .iter()
        .map(|&n| {
            run_benchmark::<ScanAwnn>(&GeneratorConfig::new(Preset::Uniform, n, 42), false).unwrap()
        })
        .collect();
    let mut csv = String::from(
        "n,awnn_queries,naive_quarter,ratio,awnn_updates,sites_moved,height,wall_ms\n",
    );
    for r in &reports {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.n(),
            r.stats.awnn_queries,
            (r.n() as f64).powi(2) / 4.0,
            r.query_ratio(),
            r.awnn_updates(),
            r.stats.sites_moved,
            r.stats.height,
            r.wall_ms
        ));
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("subquadratic.csv");
    fs::write(&path, &csv).unwrap();
    print!("{csv}");

    let ratios: Vec<f64> = reports.iter().map(BenchReport::query_ratio).collect();
    let below = ratios.iter().all(|&r| r < 1.0);
    let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
    verdict(
        7,
        below && decreasing,
        &format!(
            "query/(n^2/4) ratios {ratios:?}; table at {}",
            path.display()
        ),
    );
    assert!(below, "AWNN queries reached n^2/4");
    assert!(decreasing, "ratio did not decrease monotonically");
}

#[test]
fn criterion_8_cli_golden() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut ok = true;
    let mut names = Vec::new();
    for name in ["merge", "tangent_chain", "generated"] {
        let script = fs::read(dir.join(format!("{name}.script"))).unwrap();
        let expected = fs::read(dir.join(format!("{name}.out"))).unwrap();
        let mut out = Vec::new();
        let code = run_script(&script[..], &mut out).unwrap();
        let same = code == 0 && out == expected;
        if !same {
            println!("  {name}: exit {code}, output differs: {}", out != expected);
        }
        ok &= same;
        names.push(name);
    }
    verdict(8, ok, &format!("golden scripts {names:?} byte-identical"));
    assert!(ok);
}
