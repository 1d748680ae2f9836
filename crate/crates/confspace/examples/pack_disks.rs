//! Greedy incremental packing with the doubling fallback and the
//! R^2 <= 36 sum r_i^2 guarantee.
//!
//! ```bash
//! cargo run --example pack_disks
//! ```

use confspace::geometry::pack_disks;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut radii: Vec<f64> = (0..14).map(|_| rng.gen_range(0.1..0.9)).collect();
    radii.sort_by(|a, b| b.total_cmp(a));

    let layout = pack_disks(&radii);
    layout.validate(1e-9).unwrap();

    let sum_sq: f64 = radii.iter().map(|r| r * r).sum();
    println!("packed {} disks", radii.len());
    println!("enclosing radius  {:.6}", layout.enclosing_radius);
    println!("sqrt(36 sum r^2)  {:.6}", (36.0 * sum_sq).sqrt());
    println!(
        "area fill         {:.1}%",
        100.0 * sum_sq / (layout.enclosing_radius * layout.enclosing_radius)
    );
    for (r, c) in layout.radii.iter().zip(&layout.centers) {
        println!("  r = {r:.4} at ({:+.4}, {:+.4})", c.x, c.y);
    }
}
