//! Cross-module checks tying the geometric constructions to the
//! combinatorial pairing rules through the numeric degree oracle.

use confspace::forests::enumerate_forests;
use confspace::geometry::build_hhat;
use confspace::pairing::{numeric_degree_oracle, pairing_hhat};

/// The degree of the angle map composed with the swap family equals the
/// combinatorial rule: 0 when `a -> b` is not an edge, +1 when it is the
/// second edge, -1 when the first.
#[test]
fn swap_family_degrees_match_pairing_hhat() {
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    for (a, b) in pairs {
        let family = move |angles: &[f64]| build_hhat(a, b, angles[0], angles[1]);
        for forest in enumerate_forests(4, 2).unwrap() {
            let expected = pairing_hhat(&forest, a, b);
            let got = numeric_degree_oracle(&family, &forest, 48)
                .unwrap_or_else(|e| panic!("a={a} b={b} G={forest}: {e}"));
            assert_eq!(got, expected, "a={a} b={b} G={forest}");
        }
    }
}

/// The midpoint-box strips certify where the grid can resolve them: the
/// upper and lower traps confirm, while the middle strip's obstacle
/// offsets scale like eps^2 and sit below any desk-scale grid.
#[test]
fn midpoint_box_strip_certification() {
    use confspace::segments::{certify_midpoint_box, midpoint_box_sets, PoseGrid, SegmentsError};

    let c = midpoint_box_sets(0.1).unwrap();
    assert!(c.r < 1.0);
    let grid = PoseGrid::new(0.0012, 0.1 / 360.0);
    let [middle, upper, lower] = certify_midpoint_box(&c, &grid);
    assert!(matches!(
        middle,
        Err(SegmentsError::ResolutionInsufficient(_))
    ));
    assert!(upper.unwrap().confirms_trap());
    assert!(lower.unwrap().confirms_trap());
}

/// The matching family realizes degree 1 against its matching forest.
#[test]
fn matching_family_detects_the_matching_class() {
    use confspace::forests::OrderedForest;
    use confspace::geometry::build_matching_family;

    let j = 2;
    let r = 0.2;
    let family = move |angles: &[f64]| build_matching_family(j, r, angles).unwrap();
    let matching = OrderedForest::new(4, vec![(1, 2), (3, 4)]).unwrap();
    let got = numeric_degree_oracle(&family, &matching, 24).unwrap();
    assert_eq!(got, 1);

    // a forest crossing the medium disks pairs trivially
    let crossing = OrderedForest::new(4, vec![(1, 3), (2, 4)]).unwrap();
    let got = numeric_degree_oracle(&family, &crossing, 24).unwrap();
    assert_eq!(got, 0);
}
