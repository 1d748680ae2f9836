//! Property tests for the structural invariants.

use confspace::forests::{enumerate_forests, kernel_ladder_n4};
use confspace::geometry::{pack_disks, seg_feasible, seg_tau, tau};
use confspace::plane::Point;
use proptest::prelude::*;

proptest! {
    /// Every enumerated forest satisfies the ordered-forest invariants and
    /// the list is strictly sorted in canonical order.
    #[test]
    fn enumerated_forests_are_canonical(n in 1usize..7, j in 0usize..6) {
        prop_assume!(j < n);
        let forests = enumerate_forests(n, j).unwrap();
        for f in &forests {
            prop_assert_eq!(f.edge_count(), j);
            for &(a, b) in f.edges() {
                prop_assert!(1 <= a && a < b && b <= n);
            }
            for w in f.edges().windows(2) {
                prop_assert!(w[0].1 < w[1].1);
            }
        }
        for w in forests.windows(2) {
            prop_assert!(w[0].edges() < w[1].edges());
        }
    }

    /// The tautological function is invariant under rotation.
    #[test]
    fn tau_rotation_invariant(
        pts in prop::collection::vec((-0.7f64..0.7, -0.7f64..0.7), 2..6),
        turns in 0.0f64..1.0,
    ) {
        let centers: Vec<Point> = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        let Ok(t0) = tau(&centers) else { return Ok(()); };
        let rotated: Vec<Point> = centers.iter().map(|c| c.rotate(turns)).collect();
        let t1 = tau(&rotated).unwrap();
        prop_assert!((t0 - t1).abs() < 1e-12);
    }

    /// Segment feasibility is monotone below the supremal length.
    #[test]
    fn seg_tau_is_a_threshold(
        pts in prop::collection::vec((-0.6f64..0.6, -0.6f64..0.6), 1..4),
        dirs in prop::collection::vec(0.0f64..1.0, 1..4),
        frac in 0.05f64..0.95,
    ) {
        prop_assume!(pts.len() == dirs.len());
        let centers: Vec<Point> = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        let sup = seg_tau(&centers, &dirs);
        prop_assume!(sup > 1e-6);
        prop_assert!(seg_feasible(&centers, &dirs, frac * sup));
        if sup < 2.0 {
            prop_assert!(!seg_feasible(&centers, &dirs, sup + 1e-6));
        }
    }

    /// Greedy packing always satisfies the enclosing-radius bound.
    #[test]
    fn packing_invariants(raw in prop::collection::vec(0.05f64..1.0, 1..12)) {
        let mut radii = raw;
        radii.sort_by(|a, b| b.total_cmp(a));
        let layout = pack_disks(&radii);
        prop_assert!(layout.validate(1e-9).is_ok());
    }

    /// The kernel ladder never loses dimensions as the radius grows.
    #[test]
    fn kernel_ladder_monotone(r1 in 0.01f64..0.6, r2 in 0.01f64..0.6) {
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        let a = kernel_ladder_n4(lo);
        let b = kernel_ladder_n4(hi);
        for d in 0..4 {
            prop_assert!(a[d] <= b[d]);
        }
    }
}
