//! Sweep the radius and print the per-degree kernel dimensions of the
//! restriction map for four disks. The jumps land at 1/4, 1/3, and
//! 1/(1 + sqrt 2).
//!
//! ```bash
//! cargo run --example kernel_ladder
//! ```

use confspace::forests::kernel_ladder_n4;

fn main() {
    println!("radius   kernel dimensions by degree (0, 1, 2, 3)");
    let thresholds = [0.25, 1.0 / 3.0, 1.0 / (1.0 + std::f64::consts::SQRT_2)];
    for k in 1..=50 {
        let r = k as f64 / 100.0;
        let dims = kernel_ladder_n4(r);
        let marker = thresholds
            .iter()
            .any(|t| (r - t).abs() < 0.005)
            .then_some("  <- near a critical radius")
            .unwrap_or("");
        println!(
            "{r:.2}     ({}, {}, {}, {}){marker}",
            dims[0], dims[1], dims[2], dims[3]
        );
    }
    println!();
    println!("exact values at the band representatives:");
    for r in [0.2, 0.3, 0.4, 0.5] {
        println!("  r = {r}: {:?}", kernel_ladder_n4(r));
    }
}
