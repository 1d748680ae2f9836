//! The recursive map that spins n segments independently: lengths follow
//! d_1 = 2, d_n = d_{n-1} + 1/d_{n-1} with l_n = 4/d_n. Renders one
//! configuration as SVG.
//!
//! ```bash
//! cargo run --example spin_segments
//! ```

use confspace::geometry::{build_kn, diameter_sequence, seg_tau, segment_length};
use confspace::svg::seg_config_svg;

fn main() {
    println!("n    d_n          l_n");
    for n in 1..=12 {
        println!(
            "{n:<4} {:<12.8} {:.8}",
            diameter_sequence(n),
            segment_length(n)
        );
    }

    let angles = [0.0, 0.15, 0.42, 0.77];
    let cfg = build_kn(&angles);
    let supremal = seg_tau(&cfg.centers, &cfg.directions);
    println!();
    println!(
        "k_4 at angles {angles:?}: length {:.9}, supremal length {:.9}, valid: {}",
        cfg.length,
        supremal,
        cfg.is_valid(1e-9)
    );

    let path = std::env::temp_dir().join("confspace_k4.svg");
    std::fs::write(&path, seg_config_svg(&cfg)).unwrap();
    println!("wrote {}", path.display());
}
