//! Bisect for the maximum length at which two segments fit at right
//! angles in the unit disk; the threshold is 1.6.
//!
//! ```bash
//! cargo run --release --example perpendicular_length
//! ```

use confspace::segments::{max_perpendicular_length, perpendicular_best_clearance};

fn main() {
    println!("best placement clearance by length:");
    for k in 0..=8 {
        let r = 1.2 + 0.1 * k as f64;
        let c = perpendicular_best_clearance(r, 200);
        println!("  r = {r:.1}: clearance {c:+.6}");
    }

    let threshold = max_perpendicular_length(1e-6);
    println!();
    println!("maximum perpendicular length: {threshold:.7}");
}
