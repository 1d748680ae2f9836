//! Cross-check the combinatorial pairing against the numeric degree of
//! the composed torus maps, for three disks.
//!
//! ```bash
//! cargo run --release --example degree_oracle
//! ```

use confspace::forests::enumerate_forests;
use confspace::pairing::{
    numeric_degree_oracle, pairing_forest_qn, perms_fixing_first, permuted_family, qn_family,
};

fn main() {
    let n = 3;
    let family = qn_family(n);
    println!("pairings <G, sigma . q_{n}> against the sampled-degree oracle:");
    for g in enumerate_forests(n, n - 1).unwrap() {
        for sigma in perms_fixing_first(n) {
            let combinatorial = pairing_forest_qn(&g, &sigma).unwrap();
            let fam = permuted_family(&sigma, &family);
            let numeric = numeric_degree_oracle(&fam, &g, 24).unwrap();
            let tag = if combinatorial == numeric {
                "ok"
            } else {
                "MISMATCH"
            };
            println!("  <{g}, {sigma}.q_{n}> = {combinatorial}, oracle {numeric}  {tag}");
        }
    }
}
