//! Inspect what a single insertion did to the component tree.
//!
//! Every insertion returns a `MergeReport`: which leaves (components) the
//! new disk touched, where the merged component now lives, how many sites
//! were relocated and whether the tree had to grow.

use disk_connectivity::{DiskConnectivity, Point};

fn main() -> disk_connectivity::Result<()> {
    let mut dc = DiskConnectivity::new();

    // Four small clusters along a line, sizes 1, 3, 2, 1.
    let layout: [(f64, usize); 4] = [(0.0, 1), (20.0, 3), (40.0, 2), (60.0, 1)];
    for (x, size) in layout {
        for k in 0..size {
            let (id, r) = dc.insert(Point::new(x + k as f64, 0.0), 0.6)?;
            println!(
                "site {id}: touched {:?}, now in {}, moved {}, expanded {}",
                r.intersected_components, r.target_leaf, r.sites_moved, r.expanded
            );
        }
    }
    println!(
        "tree height {}, {} components",
        dc.tree().height(),
        dc.component_count()
    );

    // One wide disk swallows everything. The largest cluster stays put and
    // the others move into its leaf.
    let (id, r) = dc.insert(Point::new(30.0, 0.0), 31.0)?;
    println!("\nwide site {id}:");
    println!("  intersected  {:?}", r.intersected_components);
    println!("  representatives {:?}", r.representatives);
    println!("  target       {}", r.target_leaf);
    println!("  sites moved  {}", r.sites_moved);
    println!("  components   {}", dc.component_count());

    for (key, value) in dc.stats().fields() {
        println!("{key}={value}");
    }
    Ok(())
}
