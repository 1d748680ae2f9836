//! The three-strip obstacle construction: a length r < 1 and a finite
//! point set that trap vertical unit-scale segments near the center
//! column. The middle strip's obstacle offsets shrink like eps^2, so grid
//! certification at that scale reports its resolution limit honestly.
//!
//! ```bash
//! cargo run --release --example midpoint_box
//! ```

use confspace::segments::{certify_midpoint_box, midpoint_box_sets, PoseGrid};

fn main() {
    let c = midpoint_box_sets(0.1).unwrap();
    println!("midpoint box at eps = 0.1:");
    println!("  eps1 = {:.6}, eps2 = {:.6}", c.eps1, c.eps2);
    println!("  segment length r = {:.9} (< 1)", c.r);
    println!(
        "  total obstacle points in the disk: {}",
        c.all_points().len()
    );
    for (name, s) in ["middle", "upper", "lower"].iter().zip(&c.strips) {
        println!(
            "  {name:<6} strip: y in [{:+.4}, {:+.4}], delta = {:.4}, a = {:.3e}, b = {:.4}",
            s.y_center - s.half_height,
            s.y_center + s.half_height,
            s.delta,
            s.params.a * s.half_height,
            s.params.b * s.half_height,
        );
    }

    println!();
    println!("per-strip certification on a 0.0012 / 0.1-degree grid:");
    let grid = PoseGrid::new(0.0012, 0.1 / 360.0);
    for (name, result) in ["middle", "upper", "lower"]
        .iter()
        .zip(certify_midpoint_box(&c, &grid))
    {
        match result {
            Ok(cert) => println!(
                "  {name:<6}: confirmed {} ({} poses, slack {:.2e})",
                cert.confirms_trap(),
                cert.visited,
                cert.clearance_slack
            ),
            Err(e) => println!("  {name:<6}: {e}"),
        }
    }
}
