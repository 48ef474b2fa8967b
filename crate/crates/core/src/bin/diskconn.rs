use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use disk_connectivity::cli::{run_benchmark, BenchReport, ScriptRunner};
use disk_connectivity::oracle::{GeneratorConfig, Preset};
use disk_connectivity::{Awnn, ScanAwnn, TieredAwnn};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Backend {
    Scan,
    Tiered,
}

/// Incremental disk-graph connectivity: run a command script (stdin by
/// default) or benchmark a generated instance.
#[derive(Debug, Parser)]
#[command(name = "diskconn", version)]
struct Args {
    /// Read commands from this file instead of stdin.
    #[arg(long, conflicts_with = "bench")]
    script: Option<PathBuf>,
    /// Benchmark a generated instance: uniform, heavy_tail, clustered or tangent_chain.
    #[arg(long, value_name = "PRESET")]
    bench: Option<String>,
    #[arg(long, default_value_t = 1000, requires = "bench")]
    n: usize,
    #[arg(long, default_value_t = 42, requires = "bench")]
    seed: u64,
    /// Also time the all-pairs incremental baseline.
    #[arg(long, requires = "bench")]
    compare_naive: bool,
    /// Write per-insertion counters to this CSV file.
    #[arg(long, requires = "bench")]
    csv: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Backend::Scan)]
    awnn: Backend,
}

fn script<A: Awnn>(path: Option<&PathBuf>) -> io::Result<i32> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut runner = ScriptRunner::<A>::with_backend();
    let code = match path {
        Some(p) => runner.run(BufReader::new(File::open(p)?), &mut out)?,
        None => runner.run(io::stdin().lock(), &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn bench<A: Awnn>(args: &Args, cfg: &GeneratorConfig) -> io::Result<Option<BenchReport>> {
    let Ok(report) = run_benchmark::<A>(cfg, args.compare_naive) else {
        return Ok(None);
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    report.write_report(&mut out)?;
    if let Some(path) = &args.csv {
        let mut csv = BufWriter::new(File::create(path)?);
        report.write_csv(&mut csv)?;
        csv.flush()?;
    }
    Ok(Some(report))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match &args.bench {
        None => match args.awnn {
            Backend::Scan => script::<ScanAwnn>(args.script.as_ref()),
            Backend::Tiered => script::<TieredAwnn>(args.script.as_ref()),
        },
        Some(name) => {
            let cfg = match name.parse::<Preset>() {
                Ok(preset) => GeneratorConfig::new(preset, args.n, args.seed),
                Err(e) => {
                    eprintln!("error: {e}");
                    eprintln!("usage: diskconn --bench <uniform|heavy_tail|clustered|tangent_chain> --n <k> --seed <s> [--compare-naive] [--csv <file>]");
                    return ExitCode::from(2);
                }
            };
            let report = match args.awnn {
                Backend::Scan => bench::<ScanAwnn>(&args, &cfg),
                Backend::Tiered => bench::<TieredAwnn>(&args, &cfg),
            };
            match report {
                Ok(None) => {
                    eprintln!("error: invalid benchmark configuration");
                    return ExitCode::from(2);
                }
                Ok(Some(r)) => Ok(if r.bounds_hold() { 0 } else { 1 }),
                Err(e) => Err(e),
            }
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
