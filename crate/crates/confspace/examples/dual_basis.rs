//! Build the dual-basis pairing matrix, verify it is unimodular, and
//! expand a dual basis element through the recursion.
//!
//! ```bash
//! cargo run --example dual_basis
//! ```

use confspace::forests::{enumerate_forests, OrderedForest};
use confspace::io::matrix_to_csv;
use confspace::pairing::{dual_basis_matrix, dual_expansion, expansion_pairs_with};

fn main() {
    for n in 2..=5 {
        let m = dual_basis_matrix(n).unwrap();
        println!(
            "n = {n}: {}x{} matrix, det = {}",
            m.size(),
            m.size(),
            m.det()
        );
    }

    println!();
    println!("n = 4 pairing matrix:");
    print!("{}", matrix_to_csv(&dual_basis_matrix(4).unwrap()));

    // expand the dual of a path tree and confirm the indicator property
    let path = OrderedForest::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
    let expansion = dual_expansion(&path).unwrap();
    println!();
    println!("dual expansion of {path} in the signed basis:");
    for (sigma, coeff) in &expansion {
        println!("  {coeff:+} at sigma = {sigma}");
    }
    for f in enumerate_forests(4, 3).unwrap() {
        let v = expansion_pairs_with(&f, &expansion);
        println!("  <{f}, expansion> = {v}");
    }
}
