//! The additively weighted nearest neighbour structures on their own.
//!
//! A query at `q` returns the entry minimising `|q - center| + weight`. With
//! weight set to the negated radius this is the signed distance from `q` to
//! the disk boundary, which is how the component tree finds touching disks.

use disk_connectivity::{Awnn, AwnnEntry, Point, ScanAwnn, SiteId, TieredAwnn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn fill<A: Awnn>(entries: &[AwnnEntry]) -> A {
    let mut a = A::default();
    for &e in entries {
        a.insert(e).expect("ids are distinct");
    }
    a
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let entries: Vec<AwnnEntry> = (0..20_000)
        .map(|i| AwnnEntry {
            site_id: SiteId(i),
            center: Point::new(rng.gen_range(0.0..1000.0), rng.gen_range(0.0..1000.0)),
            weight: -rng.gen_range(0.1..5.0),
        })
        .collect();
    let queries: Vec<Point> = (0..2_000)
        .map(|_| Point::new(rng.gen_range(0.0..1000.0), rng.gen_range(0.0..1000.0)))
        .collect();

    let mut scan: ScanAwnn = fill(&entries);
    let mut tiered: TieredAwnn = fill(&entries);

    for i in (0..entries.len()).step_by(3) {
        scan.delete(SiteId(i)).unwrap();
        tiered.delete(SiteId(i)).unwrap();
    }
    println!(
        "{} live entries, tiered backend holds {} tombstones after {} rebuilds",
        tiered.len(),
        tiered.tombstones(),
        tiered.rebuilds()
    );

    let t = Instant::now();
    let a: Vec<_> = queries.iter().map(|&q| scan.nearest(q)).collect();
    let scan_ms = t.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let b: Vec<_> = queries.iter().map(|&q| tiered.nearest(q)).collect();
    let tiered_ms = t.elapsed().as_secs_f64() * 1e3;

    assert_eq!(a, b, "both backends agree bit for bit");
    println!(
        "{} queries: {} {scan_ms:.1} ms, {} {tiered_ms:.1} ms",
        queries.len(),
        ScanAwnn::NAME,
        TieredAwnn::NAME
    );

    let best = b[0].unwrap();
    println!(
        "nearest to {:?}: {} at signed boundary distance {:.4}",
        queries[0], best.site_id, best.value
    );
}
