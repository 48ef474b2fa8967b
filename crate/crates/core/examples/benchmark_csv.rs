//! Run the benchmark harness and dump per-insertion counters as CSV.
//!
//! `cargo run --release --example benchmark_csv -- heavy_tail 5000 out.csv`

use std::fs::File;
use std::io::{self, BufWriter};

use disk_connectivity::cli::run_benchmark;
use disk_connectivity::oracle::{GeneratorConfig, Preset};
use disk_connectivity::TieredAwnn;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let preset: Preset = args.next().as_deref().unwrap_or("uniform").parse()?;
    let n: usize = args.next().map_or(Ok(2000), |s| s.parse())?;
    let csv = args.next();

    let report = run_benchmark::<TieredAwnn>(&GeneratorConfig::new(preset, n, 42), true)?;
    report.write_report(&mut io::stdout().lock())?;

    if let Some(path) = csv {
        report.write_csv(&mut BufWriter::new(File::create(&path)?))?;
        eprintln!("wrote {} rows to {path}", report.rows.len());
    }
    Ok(())
}
