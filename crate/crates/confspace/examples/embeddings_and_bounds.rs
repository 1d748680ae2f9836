//! Scaled embeddings between configuration spaces and the radius bounds
//! attached to a component profile.
//!
//! ```bash
//! cargo run --example embeddings_and_bounds
//! ```

use confspace::forests::ComponentProfile;
use confspace::geometry::{
    assemble_config, bound_calculators, diameter_configuration, embed_scaled, tau,
};
use confspace::plane::Point;

fn main() {
    // two half-scale hosts: a moving 2-disk configuration on the left and
    // a fixed disk on the right
    let moving = diameter_configuration(2);
    let fixed = confspace::geometry::DiskConfig::new(vec![Point::new(0.0, 0.0)], 0.5);
    let left = embed_scaled(&moving, Point::new(-0.5, 0.0), 0.5, &[1, 3]).unwrap();
    let right = embed_scaled(&fixed, Point::new(0.5, 0.0), 0.5, &[2]).unwrap();
    let combined = assemble_config(3, &[left, right]).unwrap();
    println!(
        "half-inclusion of 2 moving + 1 fixed disks: radius {:.4}, tau {:.4}, valid {}",
        combined.radius,
        tau(&combined.centers).unwrap(),
        combined.is_valid(1e-9)
    );

    println!();
    println!("radius bounds by component profile (parts = component sizes):");
    for parts in [vec![2, 2], vec![4], vec![3, 3, 2], vec![2; 8]] {
        let profile = ComponentProfile::new(parts.clone());
        let b = bound_calculators(&profile);
        println!(
            "  {parts:?}: j = {}, r_min >~ {:.4} (packing constant {}), r_max <= {:.4}",
            profile.edge_count, b.r_min_lower, b.packing_constant, b.r_max_upper
        );
    }
}
