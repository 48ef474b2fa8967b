//! The instance generators and a cross-check against the brute-force oracle.

use disk_connectivity::oracle::{
    canonical_labels, generate, radius_ratio, GeneratorConfig, OracleState, Preset,
};
use disk_connectivity::DiskConnectivity;

fn main() -> disk_connectivity::Result<()> {
    let n = 1500;
    for preset in Preset::ALL {
        let cfg = GeneratorConfig::new(preset, n, 2024);
        let sites = generate(&cfg)?;

        let mut dc = DiskConnectivity::new();
        let mut oracle = OracleState::new();
        for s in &sites {
            let (id, _) = dc.insert(s.center, s.radius)?;
            oracle.insert(*dc.site(id).unwrap())?;
        }
        let ours: Vec<_> = dc
            .sites()
            .iter()
            .map(|s| dc.tree().leaf_of(s.id).unwrap())
            .collect();
        let agree = canonical_labels(&ours) == oracle.labels();

        println!(
            "{:<14} box {:>5.1}  radius ratio {:>9.1}  components {:>4}  oracle pair tests {:>7}  agree {}",
            preset.name(),
            cfg.box_side,
            radius_ratio(&sites),
            dc.component_count(),
            oracle.pair_tests(),
            agree
        );
    }
    Ok(())
}
