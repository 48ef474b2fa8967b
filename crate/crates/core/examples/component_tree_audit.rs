//! Drive the component tree directly and audit its invariants.
//!
//! `audit` recomputes everything the tree maintains incrementally (leaf
//! contents, connectivity inside each leaf, separation between leaves, the
//! per-node AWNN contents and the empty-leaf queue) and lists what disagrees.

use disk_connectivity::component_tree::NodeId;
use disk_connectivity::oracle::{generate, GeneratorConfig, Preset};
use disk_connectivity::{Awnn, ComponentTree, Site, TieredAwnn};

fn main() -> disk_connectivity::Result<()> {
    let sites: Vec<Site> = generate(&GeneratorConfig::new(Preset::Clustered, 500, 3))?;
    let mut tree: ComponentTree<TieredAwnn> = ComponentTree::with_backend();

    for (i, &s) in sites.iter().enumerate() {
        tree.insert_site(s)?;
        if (i + 1) % 100 == 0 {
            let problems = tree.audit(&sites[..=i]);
            println!(
                "after {:>3} sites: height {}, {:>3} components, {} problems",
                i + 1,
                tree.height(),
                tree.component_count(),
                problems.len()
            );
        }
    }

    let stats = tree.stats();
    println!("{stats:?}");
    println!("max moves of any site: {}", tree.max_site_moves());

    let mut sizes: Vec<usize> = tree.components().map(|(_, ids)| ids.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    println!(
        "five largest components: {:?}",
        &sizes[..sizes.len().min(5)]
    );
    println!(
        "root AWNN holds {} entries",
        tree.awnn(NodeId::ROOT).map_or(0, |a| a.len())
    );
    Ok(())
}
