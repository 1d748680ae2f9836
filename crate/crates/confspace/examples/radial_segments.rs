//! Radially placed segments: any tuple of distinct angles is realizable
//! for every length below 1, which is why the angle map stays surjective
//! and subtler obstructions are needed.
//!
//! ```bash
//! cargo run --example radial_segments
//! ```

use confspace::segments::{collinear_obstruction, radial_surjectivity_demo};
use confspace::svg::seg_config_svg;

fn main() {
    let angles: Vec<f64> = (0..8).map(|k| k as f64 / 8.0).collect();
    let cfg = radial_surjectivity_demo(&angles, 0.95).unwrap();
    println!(
        "8 radial segments of length 0.95: valid {}",
        cfg.is_valid(1e-9)
    );
    let path = std::env::temp_dir().join("confspace_radial.svg");
    std::fs::write(&path, seg_config_svg(&cfg)).unwrap();
    println!("wrote {}", path.display());

    println!();
    println!("largest radius for k collinear disks:");
    for k in 1..=6 {
        println!("  k = {k}: r = {:.6}", collinear_obstruction(k));
    }
}
