//! Disk and segment configurations in the closed unit disk, tautological
//! functions, scaled embeddings, and radius bound calculators.

mod packing;
mod recursive;

pub use packing::{pack_disks, PackedLayout};
pub use recursive::{
    build_hhat, build_kn, build_matching_family, build_qn, diameter_sequence, diameters,
    recover_qn_angles, segment_length,
};

use crate::forests::ComponentProfile;
use crate::plane::{unit, Point, Segment};
use thiserror::Error;

/// Default geometric tolerance; all comparisons are tolerance-explicit.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("coincident centers at indices {0} and {1}")]
    CoincidentCenters(usize, usize),
    #[error("host disk (|center| {0} + scale {1}) not contained in the unit disk")]
    HostNotContained(f64, f64),
    #[error("labels must be injective and match the inner configuration size")]
    BadLabels,
    #[error("configuration infeasible: {0}")]
    Infeasible(String),
    #[error("duplicate angles are not allowed")]
    DuplicateAngles,
    #[error("{0}")]
    Invalid(String),
}

/// `n` labeled centers with a common radius, all disks inside the closed
/// unit disk.
#[derive(Clone, Debug, PartialEq)]
pub struct DiskConfig {
    pub centers: Vec<Point>,
    pub radius: f64,
}

impl DiskConfig {
    pub fn new(centers: Vec<Point>, radius: f64) -> Self {
        DiskConfig { centers, radius }
    }

    pub fn n(&self) -> usize {
        self.centers.len()
    }

    /// Containment and disjointness within `tol`.
    pub fn is_valid(&self, tol: f64) -> bool {
        self.validate(tol).is_ok()
    }

    pub fn validate(&self, tol: f64) -> Result<(), GeomError> {
        let r = self.radius;
        for (i, c) in self.centers.iter().enumerate() {
            if c.norm() > 1.0 - r + tol {
                return Err(GeomError::Invalid(format!(
                    "disk {} escapes the unit disk (|c| = {})",
                    i + 1,
                    c.norm()
                )));
            }
        }
        for i in 0..self.centers.len() {
            for j in i + 1..self.centers.len() {
                if self.centers[i].dist(self.centers[j]) < 2.0 * r - tol {
                    return Err(GeomError::Invalid(format!(
                        "disks {} and {} overlap",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `n` labeled oriented segments of a common length, specified by centers
/// and directions (angles in turns).
#[derive(Clone, Debug, PartialEq)]
pub struct SegConfig {
    pub centers: Vec<Point>,
    pub directions: Vec<f64>,
    pub length: f64,
}

impl SegConfig {
    pub fn new(centers: Vec<Point>, directions: Vec<f64>, length: f64) -> Self {
        assert_eq!(centers.len(), directions.len());
        SegConfig {
            centers,
            directions,
            length,
        }
    }

    pub fn n(&self) -> usize {
        self.centers.len()
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.segments_at(self.length)
    }

    fn segments_at(&self, len: f64) -> Vec<Segment> {
        self.centers
            .iter()
            .zip(&self.directions)
            .map(|(&c, &t)| Segment::centered(c, t, len))
            .collect()
    }

    /// Validity within `tol`: segments of length `length - tol` must be
    /// pairwise non-intersecting and endpoints must lie within `1 + tol` of
    /// the origin. The shrink makes exact-tangency constructions valid.
    pub fn is_valid(&self, tol: f64) -> bool {
        let segs = self.segments_at((self.length - tol).max(0.0));
        for s in &segs {
            if s.a.norm() > 1.0 + tol || s.b.norm() > 1.0 + tol {
                return false;
            }
        }
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                if crate::plane::segments_intersect(segs[i], segs[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Supremal radius for which disks at the given centers are disjoint and
/// contained in the unit disk:
/// `min( min_{i<j} |x_i - x_j| / 2, min_i (1 - |x_i|) )`.
pub fn tau(centers: &[Point]) -> Result<f64, GeomError> {
    let mut best = f64::INFINITY;
    for (i, c) in centers.iter().enumerate() {
        best = best.min(1.0 - c.norm());
        for (jj, d) in centers.iter().enumerate().skip(i + 1) {
            let dist = c.dist(*d);
            if dist == 0.0 {
                return Err(GeomError::CoincidentCenters(i + 1, jj + 1));
            }
            best = best.min(dist / 2.0);
        }
    }
    Ok(best)
}

/// Feasibility predicate behind [`seg_tau`]: segments of length `len` at
/// the given poses are pairwise disjoint (closed) and inside the closed
/// unit disk.
pub fn seg_feasible(centers: &[Point], directions: &[f64], len: f64) -> bool {
    let segs: Vec<Segment> = centers
        .iter()
        .zip(directions)
        .map(|(&c, &t)| Segment::centered(c, t, len))
        .collect();
    for s in &segs {
        if s.a.norm2() > 1.0 || s.b.norm2() > 1.0 {
            return false;
        }
    }
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if crate::plane::segments_intersect(segs[i], segs[j]) {
                return false;
            }
        }
    }
    true
}

/// Supremal length for which the segments are pairwise disjoint and inside
/// the closed unit disk, by bisection over the monotone feasibility
/// predicate, to absolute tolerance 1e-9.
pub fn seg_tau(centers: &[Point], directions: &[f64]) -> f64 {
    assert_eq!(centers.len(), directions.len());
    if centers.is_empty() {
        return 2.0;
    }
    if seg_feasible(centers, directions, 2.0) {
        return 2.0;
    }
    if !seg_feasible(centers, directions, 0.0) {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0f64, 2.0f64);
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if seg_feasible(centers, directions, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// A relabeled, scaled piece of a larger disk configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialDiskConfig {
    /// `(label, center)` pairs; labels are 1-based in the ambient config.
    pub items: Vec<(usize, Point)>,
    pub radius: f64,
}

/// Map a configuration into a host disk `(host_center, scale)` inside the
/// unit disk: centers map by `x -> host_center + scale * x`, the radius
/// scales by `scale`, and disks are relabeled by the injection `labels`.
pub fn embed_scaled(
    inner: &DiskConfig,
    host_center: Point,
    scale: f64,
    labels: &[usize],
) -> Result<PartialDiskConfig, GeomError> {
    if !(0.0 < scale && scale <= 1.0) || host_center.norm() + scale > 1.0 + DEFAULT_TOL {
        return Err(GeomError::HostNotContained(host_center.norm(), scale));
    }
    if labels.len() != inner.n() {
        return Err(GeomError::BadLabels);
    }
    let mut seen = labels.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != labels.len() {
        return Err(GeomError::BadLabels);
    }
    Ok(PartialDiskConfig {
        items: labels
            .iter()
            .zip(&inner.centers)
            .map(|(&l, &c)| (l, host_center + c * scale))
            .collect(),
        radius: inner.radius * scale,
    })
}

/// Assemble labeled pieces into one configuration on `{1..n}`. All pieces
/// must share a radius and the labels must cover `1..=n` exactly once.
pub fn assemble_config(n: usize, parts: &[PartialDiskConfig]) -> Result<DiskConfig, GeomError> {
    let mut centers = vec![None; n];
    let mut radius = None;
    for p in parts {
        match radius {
            None => radius = Some(p.radius),
            Some(r) if (r - p.radius).abs() <= DEFAULT_TOL => {}
            _ => return Err(GeomError::Invalid("mismatched radii".into())),
        }
        for &(label, c) in &p.items {
            if label == 0 || label > n || centers[label - 1].is_some() {
                return Err(GeomError::BadLabels);
            }
            centers[label - 1] = Some(c);
        }
    }
    let centers: Option<Vec<Point>> = centers.into_iter().collect();
    match (centers, radius) {
        (Some(centers), Some(radius)) => Ok(DiskConfig::new(centers, radius)),
        _ => Err(GeomError::BadLabels),
    }
}

/// Radius bounds attached to a component profile.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusBounds {
    /// Lower bound shape `1/sqrt(sum m_i^2)`; the greedy packing constant
    /// is reported separately.
    pub r_min_lower: f64,
    /// Constant from the `R^2 <= 36 sum r_i^2` packing bound: medium disks
    /// of radii `r * m_i` certainly fit once `r <= r_min_lower / 6`.
    pub packing_constant: f64,
    /// Upper bound `min(1/max_i m_i, 1/sqrt(sum m_i))`.
    pub r_max_upper: f64,
}

pub fn bound_calculators(profile: &ComponentProfile) -> RadiusBounds {
    if profile.parts.is_empty() {
        return RadiusBounds {
            r_min_lower: f64::INFINITY,
            packing_constant: 6.0,
            r_max_upper: f64::INFINITY,
        };
    }
    let sum_sq: f64 = profile.parts.iter().map(|&m| (m * m) as f64).sum();
    let sum: f64 = profile.parts.iter().map(|&m| m as f64).sum();
    let max = *profile.parts.iter().max().unwrap() as f64;
    RadiusBounds {
        r_min_lower: 1.0 / sum_sq.sqrt(),
        packing_constant: 6.0,
        r_max_upper: (1.0 / max).min(1.0 / sum.sqrt()),
    }
}

/// Centers of the diameter configuration: `n` disks of radius `1/n` lined
/// up along the x-axis, tangent to each other and to the boundary.
pub fn diameter_configuration(n: usize) -> DiskConfig {
    let r = 1.0 / n as f64;
    let centers = (1..=n)
        .map(|i| Point::new(-1.0 + (2 * i - 1) as f64 * r, 0.0))
        .collect();
    DiskConfig::new(centers, r)
}

/// Centers of the square configuration for n = 4 at `r = 1/(1 + sqrt 2)`:
/// four disks tangent to each other and to the boundary circle.
pub fn square_configuration() -> DiskConfig {
    let r = 1.0 / (1.0 + std::f64::consts::SQRT_2);
    let d = 1.0 - r;
    let centers = (0..4).map(|k| unit(0.125 + 0.25 * k as f64) * d).collect();
    DiskConfig::new(centers, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::{wrap_signed, ORIGIN};

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&[ORIGIN]).unwrap(), 1.0);

        // centers evenly spaced on a diameter realize tau = 1/n
        for n in 2..=8 {
            let config = diameter_configuration(n);
            let t = tau(&config.centers).unwrap();
            assert!((t - 1.0 / n as f64).abs() < 1e-12, "n={n} tau={t}");
        }

        let t = tau(&[Point::new(0.25, 0.0), Point::new(-0.25, 0.0)]).unwrap();
        assert!((t - 0.25).abs() < 1e-15);

        assert_eq!(
            tau(&[ORIGIN, ORIGIN]).unwrap_err(),
            GeomError::CoincidentCenters(1, 2)
        );
    }

    #[test]
    fn tau_rotation_invariant() {
        let centers = vec![
            Point::new(0.1, 0.2),
            Point::new(-0.4, 0.3),
            Point::new(0.5, -0.35),
        ];
        let t0 = tau(&centers).unwrap();
        for k in 1..16 {
            let rot: Vec<Point> = centers.iter().map(|c| c.rotate(k as f64 / 16.0)).collect();
            assert!((tau(&rot).unwrap() - t0).abs() < 1e-12);
        }
    }

    #[test]
    fn seg_tau_single_diameter() {
        let t = seg_tau(&[ORIGIN], &[0.37]);
        assert!((t - 2.0).abs() < 1e-9);
    }

    #[test]
    fn seg_tau_collinear_matches_1d_oracle() {
        // both segments on the x-axis: the supremum has the closed form
        // min(|c1 - c2|, 2(1 - |c1|), 2(1 - |c2|))
        let cases = [(-0.5, 0.2), (-0.3, 0.6), (0.0, 0.8), (-0.9, -0.1)];
        for &(c1, c2) in &cases {
            let centers = vec![Point::new(c1, 0.0), Point::new(c2, 0.0)];
            let got = seg_tau(&centers, &[0.0, 0.0]);
            let oracle = (c1 - c2)
                .abs()
                .min(2.0 * (1.0 - c1.abs()))
                .min(2.0 * (1.0 - c2.abs()));
            assert!((got - oracle).abs() < 1e-8, "c1={c1} c2={c2} got={got}");
        }
    }

    #[test]
    fn seg_tau_perpendicular_matches_grid_search() {
        let centers = vec![Point::new(-0.5, 0.0), Point::new(0.5, 0.0)];
        let dirs = vec![0.0, 0.25];
        let got = seg_tau(&centers, &dirs);
        // independent dense scan of the same monotone predicate
        let mut oracle = 0.0;
        let mut r = 0.0;
        while r <= 2.0 {
            if seg_feasible(&centers, &dirs, r) {
                oracle = r;
            }
            r += 1e-4;
        }
        assert!((got - oracle).abs() < 1e-3, "got={got} oracle={oracle}");
        // geometry: the left horizontal segment hits the boundary at r = 1
        assert!((got - 1.0).abs() < 1e-8);
    }

    #[test]
    fn seg_tau_coincident_centers_zero() {
        let t = seg_tau(&[ORIGIN, ORIGIN], &[0.0, 0.25]);
        assert_eq!(t, 0.0);
    }

    #[test]
    fn embed_identity_and_errors() {
        let inner = DiskConfig::new(vec![Point::new(0.3, 0.0)], 0.2);
        let part = embed_scaled(&inner, ORIGIN, 1.0, &[1]).unwrap();
        assert_eq!(part.items[0].1, Point::new(0.3, 0.0));
        assert_eq!(part.radius, 0.2);

        assert!(embed_scaled(&inner, Point::new(0.9, 0.0), 0.5, &[1]).is_err());
        assert!(embed_scaled(&inner, ORIGIN, 0.5, &[1, 2]).is_err());
    }

    #[test]
    fn half_inclusion_construction() {
        // f_{S,r}: two half-scale hosts at (+-1/2, 0), m disks in one and
        // n - m fixed in the other, giving a valid configuration.
        let x = diameter_configuration(2); // m = 2 moving disks
        let y = DiskConfig::new(vec![ORIGIN], 0.5); // n - m = 1 fixed disk
        let r = x.radius / 2.0;
        let left = embed_scaled(&x, Point::new(-0.5, 0.0), 0.5, &[1, 3]).unwrap();
        let right = embed_scaled(&y, Point::new(0.5, 0.0), 0.5, &[2]).unwrap();
        assert!((left.radius - r).abs() < 1e-15);
        let full = assemble_config(3, &[left, right]).unwrap();
        assert!(full.is_valid(DEFAULT_TOL));
        assert!(crate::geometry::tau(&full.centers).unwrap() >= r - DEFAULT_TOL);
    }

    #[test]
    fn scaled_partition_construction() {
        // f_{S_,r}: hosts of radius r * m_i hold scaled diameter configs.
        let profile = ComponentProfile::new(vec![2, 2]);
        let r = 0.2;
        let hosts = [Point::new(-0.45, 0.0), Point::new(0.45, 0.0)];
        let mut parts = Vec::new();
        for (i, &h) in hosts.iter().enumerate() {
            let inner = diameter_configuration(2);
            let labels = [[1usize, 2], [3, 4]][i];
            parts.push(embed_scaled(&inner, h, r * 2.0, &labels).unwrap());
        }
        let full = assemble_config(4, &parts).unwrap();
        assert!((full.radius - r).abs() < 1e-12);
        assert!(full.is_valid(DEFAULT_TOL));
        let _ = profile;
    }

    #[test]
    fn bounds_from_profiles() {
        let b = bound_calculators(&ComponentProfile::new(vec![2, 2]));
        assert!((b.r_max_upper - 0.5).abs() < 1e-15);
        assert!((b.r_min_lower - 1.0 / 8.0f64.sqrt()).abs() < 1e-15);

        for n in 2..=6 {
            let b = bound_calculators(&ComponentProfile::new(vec![n]));
            assert!((b.r_max_upper - 1.0 / n as f64).abs() < 1e-15);
        }

        let b = bound_calculators(&ComponentProfile::new(vec![]));
        assert!(b.r_max_upper.is_infinite() && b.r_min_lower.is_infinite());
    }

    #[test]
    fn square_config_is_tight() {
        let sq = square_configuration();
        assert!(sq.is_valid(DEFAULT_TOL));
        let t = tau(&sq.centers).unwrap();
        assert!((t - sq.radius).abs() < 1e-12);
    }

    #[test]
    fn angle_extraction_roundtrip() {
        let angles = [0.13, 0.47, 0.81];
        for &t in &angles {
            assert!(wrap_signed(unit(t).angle_turns() - t).abs() < 1e-12);
        }
    }
}
