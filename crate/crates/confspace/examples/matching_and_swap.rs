//! The two homology families beyond q_n: the matching family (pairs in
//! disjoint medium disks) and the four-disk swap family at radius 1/3.
//!
//! ```bash
//! cargo run --example matching_and_swap
//! ```

use confspace::forests::enumerate_forests;
use confspace::geometry::{build_hhat, build_matching_family, tau};
use confspace::pairing::pairing_hhat;
use confspace::svg::disk_config_svg;

fn main() {
    let cfg = build_matching_family(4, 0.15, &[0.0, 0.25, 0.5, 0.75]).unwrap();
    println!(
        "matching family: 4 pairs at r = 0.15, tau = {:.6}, valid: {}",
        tau(&cfg.centers).unwrap(),
        cfg.is_valid(1e-9)
    );
    let path = std::env::temp_dir().join("confspace_matching.svg");
    std::fs::write(&path, disk_config_svg(&cfg)).unwrap();
    println!("wrote {}", path.display());

    let (a, b) = (2, 4);
    let cfg = build_hhat(a, b, 0.12, 0.67);
    println!();
    println!(
        "swap family h^({a}->{b}) at (0.12, 0.67): tau = {:.9}, valid: {}",
        tau(&cfg.centers).unwrap(),
        cfg.is_valid(1e-9)
    );
    println!("pairings of the swap class with every 2-edge forest:");
    for g in enumerate_forests(4, 2).unwrap() {
        println!("  <{g}, hhat_{a}->{b}> = {:+}", pairing_hhat(&g, a, b));
    }
}
