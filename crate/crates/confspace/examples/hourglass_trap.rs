//! Derive hourglass obstacle parameters for a long segment in a strip and
//! certify the trap with the grid planner, including the negative control
//! with the obstacles removed.
//!
//! ```bash
//! cargo run --release --example hourglass_trap
//! ```

use confspace::segments::{hourglass_params, trap_certify_with, PoseGrid};
use confspace::svg::trap_svg;

fn main() {
    let params = hourglass_params(1.5, 0.2).unwrap();
    println!("trap for a segment of length 1.5 in the strip |y| < 1, delta = 0.2:");
    println!(
        "  a = {:.6}, b = {:.6}, a/b = {:.6}",
        params.a,
        params.b,
        params.ratio()
    );
    params.check_invariants().unwrap();

    let path = std::env::temp_dir().join("confspace_hourglass.svg");
    std::fs::write(&path, trap_svg(&params)).unwrap();
    println!("  wrote {}", path.display());

    let grid = PoseGrid::fine();
    let cert = trap_certify_with(&params, &grid, None).unwrap();
    println!();
    println!("certification at grid 0.005 / 1 degree:");
    println!("  visited poses      {}", cert.visited);
    println!(
        "  segment x extent   [{:+.4}, {:+.4}]",
        cert.x_extent.0, cert.x_extent.1
    );
    println!(
        "  angle extent       ({:.4}, {:.4}) turns",
        cert.theta_extent.0, cert.theta_extent.1
    );
    println!("  clearance slack    {:.4e}", cert.clearance_slack);
    println!("  trap confirmed     {}", cert.confirms_trap());

    let reach = std::env::temp_dir().join("confspace_trap_reachable.svg");
    std::fs::write(&reach, confspace::svg::trap_reachable_svg(&params, &cert)).unwrap();
    println!("  wrote {}", reach.display());

    let control = trap_certify_with(&params, &grid, Some(vec![])).unwrap();
    println!();
    println!("negative control (no obstacles):");
    println!("  visited poses      {}", control.visited);
    println!("  reached horizontal {}", control.reached_horizontal);
}
