//! Line-oriented text protocol and benchmark harness.
//!
//! A script is a sequence of commands, one per line, whitespace separated:
//!
//! | command             | output                                   |
//! |---------------------|------------------------------------------|
//! | `ADD x y r`         | `id=<k> merged=<m> moved=<c>`            |
//! | `QUERY i j`         | `connected` or `separate`                |
//! | `COMPONENTS`        | the component count                      |
//! | `STATS`             | `key=value` lines in a fixed order       |
//! | `CHECK`             | `ok`, or one line per problem found      |
//! | `GEN preset n seed` | one `ADD` output line per generated site |
//!
//! Blank lines and lines starting with `#` are skipped. The first malformed
//! or failing line prints `error line <n>: <reason>` and stops the script.

use std::io::{self, BufRead, Write};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::awnn::{Awnn, ScanAwnn};
use crate::connectivity::{DiskConnectivity, Stats};
use crate::error::Result;
use crate::geometry::{Point, SiteId};
use crate::oracle::{canonical_labels, generate, GeneratorConfig, OracleState, Preset};

/// CHECK compares every pair up to this many sites and samples above it.
pub const CHECK_FULL_LIMIT: usize = 2000;
pub const CHECK_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Add { x: f64, y: f64, r: f64 },
    Query(SiteId, SiteId),
    Components,
    Stats,
    Check,
    Gen { preset: Preset, n: usize, seed: u64 },
}

fn arg<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T, String> {
    let tok = tok.ok_or_else(|| format!("missing {what}"))?;
    tok.parse().map_err(|_| format!("invalid {what} `{tok}`"))
}

impl Command {
    /// Parses one line. `Ok(None)` for blank and comment lines.
    pub fn parse(line: &str) -> Result<Option<Command>, String> {
        let mut toks = line.split_whitespace();
        let Some(head) = toks.next() else {
            return Ok(None);
        };
        if head.starts_with('#') {
            return Ok(None);
        }
        let cmd = match head {
            "ADD" => Command::Add {
                x: arg(toks.next(), "x coordinate")?,
                y: arg(toks.next(), "y coordinate")?,
                r: arg(toks.next(), "radius")?,
            },
            "QUERY" => Command::Query(
                SiteId(arg(toks.next(), "site id")?),
                SiteId(arg(toks.next(), "site id")?),
            ),
            "COMPONENTS" => Command::Components,
            "STATS" => Command::Stats,
            "CHECK" => Command::Check,
            "GEN" => {
                let name: String = arg(toks.next(), "preset")?;
                Command::Gen {
                    preset: name.parse().map_err(|e: crate::Error| e.to_string())?,
                    n: arg(toks.next(), "site count")?,
                    seed: arg(toks.next(), "seed")?,
                }
            }
            other => return Err(format!("unknown command `{other}`")),
        };
        if let Some(extra) = toks.next() {
            return Err(format!("unexpected argument `{extra}`"));
        }
        Ok(Some(cmd))
    }
}

/// Executes scripts against a [`DiskConnectivity`], keeping an oracle in
/// step for `CHECK`.
#[derive(Debug)]
pub struct ScriptRunner<A: Awnn = ScanAwnn> {
    dc: DiskConnectivity<A>,
    oracle: OracleState,
    checks_failed: usize,
}

impl Default for ScriptRunner<ScanAwnn> {
    fn default() -> Self {
        Self::new()
    }
}

impl ScriptRunner<ScanAwnn> {
    pub fn new() -> Self {
        Self::with_backend()
    }
}

impl<A: Awnn> ScriptRunner<A> {
    pub fn with_backend() -> Self {
        ScriptRunner {
            dc: DiskConnectivity::with_backend(),
            oracle: OracleState::new(),
            checks_failed: 0,
        }
    }

    pub fn structure(&self) -> &DiskConnectivity<A> {
        &self.dc
    }

    pub fn checks_failed(&self) -> usize {
        self.checks_failed
    }

    fn add<W: Write>(&mut self, p: Point, r: f64, out: &mut W) -> io::Result<Result<(), String>> {
        match self.dc.insert(p, r) {
            Ok((id, report)) => {
                writeln!(
                    out,
                    "id={id} merged={} moved={}",
                    report.merged(),
                    report.sites_moved
                )?;
                Ok(Ok(()))
            }
            Err(e) => Ok(Err(e.to_string())),
        }
    }

    /// Runs one command. The inner `Err` is a command failure to be reported
    /// with its line number.
    pub fn execute<W: Write>(
        &mut self,
        cmd: &Command,
        out: &mut W,
    ) -> io::Result<Result<(), String>> {
        match *cmd {
            Command::Add { x, y, r } => return self.add(Point::new(x, y), r, out),
            Command::Query(a, b) => match self.dc.connected(a, b) {
                Ok(true) => writeln!(out, "connected")?,
                Ok(false) => writeln!(out, "separate")?,
                Err(e) => return Ok(Err(e.to_string())),
            },
            Command::Components => writeln!(out, "{}", self.dc.component_count())?,
            Command::Stats => {
                for (key, value) in self.dc.stats().fields() {
                    writeln!(out, "{key}={value}")?;
                }
            }
            Command::Check => {
                let problems = self.check(out)?;
                if problems == 0 {
                    writeln!(out, "ok")?;
                } else {
                    self.checks_failed += 1;
                }
            }
            Command::Gen { preset, n, seed } => {
                let sites = match generate(&GeneratorConfig::new(preset, n, seed)) {
                    Ok(s) => s,
                    Err(e) => return Ok(Err(e.to_string())),
                };
                for s in sites {
                    if let Err(e) = self.add(s.center, s.radius, out)? {
                        return Ok(Err(e));
                    }
                }
            }
        }
        Ok(Ok(()))
    }

    /// Audit plus oracle comparison. Prints one line per problem and returns
    /// how many were found.
    fn check<W: Write>(&mut self, out: &mut W) -> io::Result<usize> {
        let mut problems = 0;
        for v in self.dc.audit() {
            writeln!(out, "violation: {v}")?;
            problems += 1;
        }
        for &s in &self.dc.sites()[self.oracle.len()..] {
            self.oracle
                .insert(s)
                .expect("structure ids are fresh and sequential");
        }
        let n = self.dc.len();
        if self.oracle.component_count() != self.dc.component_count() {
            writeln!(
                out,
                "mismatch: components structure={} oracle={}",
                self.dc.component_count(),
                self.oracle.component_count()
            )?;
            problems += 1;
        }
        let ours = self.labels();
        let theirs = self.oracle.labels();
        let describe = |same: bool| if same { "connected" } else { "separate" };
        let mut report_pair = |i: usize, j: usize, out: &mut W| -> io::Result<()> {
            let a = ours[i] == ours[j];
            let b = theirs[i] == theirs[j];
            if a != b {
                writeln!(
                    out,
                    "mismatch: {i} {j} structure={} oracle={}",
                    describe(a),
                    describe(b)
                )?;
                problems += 1;
            }
            Ok(())
        };
        if n <= CHECK_FULL_LIMIT {
            // Equal canonical labelings mean every pair agrees.
            if ours != theirs {
                for i in 0..n {
                    for j in i + 1..n {
                        report_pair(i, j, out)?;
                    }
                }
            }
        } else {
            writeln!(
                out,
                "# sampled {CHECK_SAMPLES} of {} pairs",
                n * (n - 1) / 2
            )?;
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..CHECK_SAMPLES {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                report_pair(i, j, out)?;
            }
        }
        Ok(problems)
    }

    fn labels(&mut self) -> Vec<usize> {
        let tree = self.dc.tree();
        let leaves: Vec<_> = self
            .dc
            .sites()
            .iter()
            .map(|s| tree.leaf_of(s.id).expect("every inserted site has a leaf"))
            .collect();
        canonical_labels(&leaves)
    }

    /// Runs a whole script. Returns the exit code: 0 if every line succeeded
    /// and every `CHECK` passed, 1 otherwise.
    pub fn run<R: BufRead, W: Write>(&mut self, input: R, out: &mut W) -> io::Result<i32> {
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            let outcome = match Command::parse(&line) {
                Ok(None) => continue,
                Ok(Some(cmd)) => self.execute(&cmd, out)?,
                Err(reason) => Err(reason),
            };
            if let Err(reason) = outcome {
                writeln!(out, "error line {}: {reason}", idx + 1)?;
                return Ok(1);
            }
        }
        Ok(if self.checks_failed == 0 { 0 } else { 1 })
    }
}

/// Runs `input` on a fresh structure with the default backend.
pub fn run_script<R: BufRead, W: Write>(input: R, out: &mut W) -> io::Result<i32> {
    ScriptRunner::new().run(input, out)
}

pub fn floor_log2(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::from(n.ilog2())
    }
}

pub fn ceil_log2(n: usize) -> u64 {
    if n <= 1 {
        0
    } else {
        u64::from((n - 1).ilog2()) + 1
    }
}

/// Upper bound on total site moves for an `n`-insertion run.
pub fn move_bound(n: usize) -> u64 {
    n as u64 * floor_log2(n)
}

/// Upper bound on total AWNN inserts plus deletes for an `n`-insertion run.
pub fn awnn_update_envelope(n: usize) -> u64 {
    let k = 1 + ceil_log2(n);
    4 * n as u64 * k * k
}

/// Counters after one insertion, one CSV row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsertionRow {
    pub step: usize,
    pub id: SiteId,
    pub merged: usize,
    pub moved: usize,
    pub stats: Stats,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub config: GeneratorConfig,
    pub backend: &'static str,
    pub stats: Stats,
    pub wall_ms: f64,
    /// Pairwise tests and wall time of the all-pairs baseline, if it ran.
    pub naive: Option<(u64, f64)>,
    pub rows: Vec<InsertionRow>,
}

impl BenchReport {
    pub fn n(&self) -> usize {
        self.config.n
    }

    pub fn move_bound(&self) -> u64 {
        move_bound(self.n())
    }

    pub fn awnn_updates(&self) -> u64 {
        self.stats.awnn_inserts + self.stats.awnn_deletes
    }

    pub fn awnn_update_envelope(&self) -> u64 {
        awnn_update_envelope(self.n())
    }

    /// Measured leading constant: updates / (n (1 + ⌈log₂ n⌉)²).
    pub fn awnn_update_constant(&self) -> f64 {
        let k = (1 + ceil_log2(self.n())) as f64;
        let denom = self.n() as f64 * k * k;
        if denom == 0.0 {
            0.0
        } else {
            self.awnn_updates() as f64 / denom
        }
    }

    /// AWNN queries relative to `n²/4`.
    pub fn query_ratio(&self) -> f64 {
        let quarter = (self.n() as f64).powi(2) / 4.0;
        if quarter == 0.0 {
            0.0
        } else {
            self.stats.awnn_queries as f64 / quarter
        }
    }

    pub fn bounds_hold(&self) -> bool {
        self.stats.sites_moved <= self.move_bound()
            && u64::from(self.stats.max_site_moves) <= floor_log2(self.n())
            && self.awnn_updates() <= self.awnn_update_envelope()
    }

    /// `key=value` lines. Counters come first; timings last.
    pub fn write_report<W: Write>(&self, out: &mut W) -> io::Result<()> {
        let s = &self.stats;
        writeln!(out, "preset={}", self.config.preset)?;
        writeln!(out, "n={}", self.n())?;
        writeln!(out, "seed={}", self.config.seed)?;
        writeln!(out, "backend={}", self.backend)?;
        for (key, value) in s.fields() {
            writeln!(out, "{key}={value}")?;
        }
        writeln!(out, "move_bound={}", self.move_bound())?;
        writeln!(out, "site_move_bound={}", floor_log2(self.n()))?;
        writeln!(out, "awnn_update_envelope={}", self.awnn_update_envelope())?;
        writeln!(out, "awnn_update_constant={}", self.awnn_update_constant())?;
        writeln!(out, "awnn_query_ratio={}", self.query_ratio())?;
        writeln!(out, "bounds_ok={}", self.bounds_hold())?;
        if let Some((tests, _)) = self.naive {
            writeln!(out, "naive_pair_tests={tests}")?;
        }
        writeln!(out, "wall_ms={}", self.wall_ms)?;
        if let Some((_, ms)) = self.naive {
            writeln!(out, "naive_wall_ms={ms}")?;
        }
        Ok(())
    }

    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(
            out,
            "step,id,merged,moved,components,height,sites_moved,awnn_inserts,awnn_deletes,awnn_queries"
        )?;
        for r in &self.rows {
            let s = &r.stats;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                r.step,
                r.id,
                r.merged,
                r.moved,
                s.components,
                s.height,
                s.sites_moved,
                s.awnn_inserts,
                s.awnn_deletes,
                s.awnn_queries
            )?;
        }
        Ok(())
    }
}

/// Builds the structure over the generated instance and records counters
/// after every insertion. With `compare_naive`, also times the all-pairs
/// incremental baseline on the same sites.
pub fn run_benchmark<A: Awnn>(cfg: &GeneratorConfig, compare_naive: bool) -> Result<BenchReport> {
    let sites = generate(cfg)?;
    let mut dc: DiskConnectivity<A> = DiskConnectivity::with_backend();
    let mut rows = Vec::with_capacity(sites.len());
    let start = Instant::now();
    for (step, s) in sites.iter().enumerate() {
        let (id, report) = dc.insert(s.center, s.radius)?;
        rows.push(InsertionRow {
            step,
            id,
            merged: report.merged(),
            moved: report.sites_moved,
            stats: dc.stats(),
        });
    }
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;

    let naive = if compare_naive {
        let mut oracle = OracleState::new();
        let start = Instant::now();
        for &s in &sites {
            oracle.insert(s)?;
        }
        Some((oracle.pair_tests(), start.elapsed().as_secs_f64() * 1e3))
    } else {
        None
    };

    Ok(BenchReport {
        config: *cfg,
        backend: A::NAME,
        stats: dc.stats(),
        wall_ms,
        naive,
        rows,
    })
}
