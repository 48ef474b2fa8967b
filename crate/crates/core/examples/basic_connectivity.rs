//! Insert a handful of disks and ask connectivity questions.
//!
//! Run with `cargo run --example basic_connectivity`.

use disk_connectivity::{DiskConnectivity, Point};

fn main() -> disk_connectivity::Result<()> {
    let mut dc = DiskConnectivity::new();

    let (left, _) = dc.insert(Point::new(0.0, 0.0), 1.0)?;
    let (right, _) = dc.insert(Point::new(10.0, 0.0), 1.0)?;
    let (far, _) = dc.insert(Point::new(0.0, 50.0), 0.5)?;
    println!("three isolated disks: {} components", dc.component_count());
    println!("left ~ right? {}", dc.connected(left, right)?);

    // A large disk in the middle touches both neighbours.
    let (bridge, report) = dc.insert(Point::new(5.0, 0.0), 4.2)?;
    println!(
        "bridge {bridge} merged {} components, {} components remain",
        report.merged(),
        dc.component_count()
    );
    println!("left ~ right? {}", dc.connected(left, right)?);
    println!("left ~ far?   {}", dc.connected(left, far)?);

    // Tangent disks count as intersecting.
    let (touch, _) = dc.insert(Point::new(0.0, 51.5), 1.0)?;
    println!("far ~ tangent disk? {}", dc.connected(far, touch)?);

    match dc.insert(Point::new(1.0, 1.0), -2.0) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
