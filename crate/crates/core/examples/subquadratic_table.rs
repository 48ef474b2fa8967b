//! Compare the structure's work against the all-pairs baseline as n grows.
//!
//! The query ratio is AWNN queries divided by pairwise tests of the naive
//! method. It should shrink steadily as n doubles.
//!
//! `cargo run --release --example subquadratic_table`

use disk_connectivity::cli::run_benchmark;
use disk_connectivity::oracle::{GeneratorConfig, Preset};
use disk_connectivity::TieredAwnn;

fn main() -> disk_connectivity::Result<()> {
    println!(
        "{:>6} {:>12} {:>12} {:>8} {:>10} {:>10} {:>10}",
        "n", "awnn_queries", "pair_tests", "ratio", "update_c", "ms", "naive_ms"
    );
    for n in [1000, 2000, 4000, 8000] {
        let r = run_benchmark::<TieredAwnn>(&GeneratorConfig::new(Preset::Uniform, n, 42), true)?;
        let (pairs, naive_ms) = r.naive.unwrap_or_default();
        println!(
            "{:>6} {:>12} {:>12} {:>8.4} {:>10.4} {:>10.1} {:>10.1}",
            n,
            r.stats.awnn_queries,
            pairs,
            r.query_ratio(),
            r.awnn_update_constant(),
            r.wall_ms,
            naive_ms
        );
    }
    Ok(())
}
