//! Find balanced configurations by multistart refinement and verify them
//! against the contact-graph feasibility check: the diameter chain at
//! r = 1/3 and the square at r = 1/(1 + sqrt 2).
//!
//! ```bash
//! cargo run --release --example balance_search
//! ```

use confspace::balance::{classify_small_radius, contact_graph, search_balanced, SearchSettings};
use confspace::svg::stress_graph_svg;

fn main() {
    let settings = SearchSettings::default();

    let r = 1.0 / 3.0;
    let hits = search_balanced(3, r, 2000, &settings);
    println!("n = 3 at r = 1/3: {} balanced configuration(s)", hits.len());
    let configs: Vec<_> = hits.iter().map(|h| h.config.clone()).collect();
    for (hit, class) in hits.iter().zip(classify_small_radius(3, &configs)) {
        println!(
            "  trial {}: residual {:.2e}, classified {:?}",
            hit.trial, hit.result.residual, class
        );
    }
    if let Some(hit) = hits.first() {
        let g = contact_graph(&hit.config, 1e-6).unwrap();
        let path = std::env::temp_dir().join("confspace_balanced_diameter.svg");
        std::fs::write(&path, stress_graph_svg(&g)).unwrap();
        println!("  wrote {}", path.display());
    }

    let r = 1.0 / (1.0 + std::f64::consts::SQRT_2);
    let hits = search_balanced(4, r, 2000, &settings);
    println!();
    println!("n = 4 at r = 1/(1+sqrt 2): {} hit(s)", hits.len());
    for hit in &hits {
        let g = contact_graph(&hit.config, 1e-6).unwrap();
        println!(
            "  trial {}: {} contacts + {} boundary, residual {:.2e}",
            hit.trial,
            g.edges.len(),
            g.boundary.len(),
            hit.result.residual
        );
    }

    let below = search_balanced(3, 1.0 / 3.0 - 0.01, 2000, &settings);
    println!();
    println!(
        "n = 3 at r = 1/3 - 0.01: {} hit(s) (none exist below 1/n)",
        below.len()
    );
}
