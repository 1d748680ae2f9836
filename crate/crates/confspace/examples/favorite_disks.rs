//! The recursive disk construction q_n: n disks of radius 1/n from n - 1
//! angles, with the tautological function pinned at exactly 1/n.
//!
//! ```bash
//! cargo run --example favorite_disks
//! ```

use confspace::geometry::{build_qn, recover_qn_angles, tau};
use confspace::svg::disk_config_svg;

fn main() {
    let angles = [0.05, 0.3, 0.62, 0.81, 0.47];
    let cfg = build_qn(&angles);
    let t = tau(&cfg.centers).unwrap();
    println!("q_6 at angles {angles:?}");
    println!("  radius {:.12}", cfg.radius);
    println!("  tau    {:.12}", t);
    for (i, c) in cfg.centers.iter().enumerate() {
        println!("  disk {}: ({:+.6}, {:+.6})", i + 1, c.x, c.y);
    }
    let recovered = recover_qn_angles(&cfg);
    println!("  recovered angles: {recovered:?}");

    let path = std::env::temp_dir().join("confspace_q6.svg");
    std::fs::write(&path, disk_config_svg(&cfg)).unwrap();
    println!("wrote {}", path.display());
}
