//! The constructive enclosing ball of an embedded tree: radius at most
//! half the total edge length, built by merging leaf-edge balls.
//!
//! ```bash
//! cargo run --example enclosing_ball
//! ```

use confspace::balance::enclosing_ball_of_tree;
use confspace::plane::Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 9;
    let points: Vec<Point> = (0..n)
        .map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();

    let total: f64 = edges.iter().map(|&(i, j)| points[i].dist(points[j])).sum();
    let (center, radius) = enclosing_ball_of_tree(&points, &edges).unwrap();

    println!("random tree with {n} vertices, total edge length {total:.4}");
    println!(
        "enclosing ball: center ({:+.4}, {:+.4}), radius {:.4}",
        center.x, center.y, radius
    );
    println!("bound L/2 = {:.4}", total / 2.0);
    let worst = points
        .iter()
        .map(|p| center.dist(*p))
        .fold(0.0f64, f64::max);
    println!(
        "farthest vertex distance {worst:.4} (inside: {})",
        worst <= radius + 1e-12
    );
}
