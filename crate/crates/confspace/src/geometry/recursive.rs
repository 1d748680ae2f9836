//! Recursive spinning constructions: the segment maps `k_n`, the disk maps
//! `q_n`, the matching family, and the four-disk swap family.
//!
//! All input angles are in turns (one full turn = 1.0) and reappear exactly
//! in the output configurations.

use super::{pack_disks, DiskConfig, GeomError, SegConfig, DEFAULT_TOL};
use crate::plane::{unit, wrap_unit, Point, ORIGIN};

/// Diameter sequence `d_1 = 2`, `d_n = d_{n-1} + 1/d_{n-1}`.
pub fn diameter_sequence(n: usize) -> f64 {
    assert!(n >= 1);
    let mut d = 2.0f64;
    for _ in 1..n {
        d += 1.0 / d;
    }
    d
}

/// Iterator over `d_1, d_2, ...`.
pub fn diameters() -> impl Iterator<Item = f64> {
    let mut d = 2.0f64;
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
        } else {
            d += 1.0 / d;
        }
        Some(d)
    })
}

/// Segment length `l_n = 4 / d_n`; `l_1 = 2`, `l_2 = 1.6`.
pub fn segment_length(n: usize) -> f64 {
    4.0 / diameter_sequence(n)
}

/// The map `k_n`: spin `n` segments of length `l_n` independently.
///
/// Stage `n` draws a medium disk of radius `rho = l_n / l_{n-1}` internally
/// tangent to the ambient disk, the `n`th segment as the chord of length
/// `l_n` tangent to it (pointing counterclockwise along its boundary, with
/// the medium disk on the segment's left), and a `rho`-scaled copy of
/// `k_{n-1}` inside the medium disk. In the frame where the chord points
/// along +x, the chord lies on the line `y = 1 - 2 rho`.
pub fn build_kn(angles: &[f64]) -> SegConfig {
    let n = angles.len();
    assert!(n >= 1, "k_n needs at least one angle");
    if n == 1 {
        return SegConfig::new(vec![ORIGIN], vec![angles[0]], 2.0);
    }
    let inner = build_kn(&angles[..n - 1]);
    let d_prev = diameter_sequence(n - 1);
    let d_cur = d_prev + 1.0 / d_prev;
    let rho = d_prev / d_cur;
    let theta = angles[n - 1];
    let medium = Point::new(0.0, 1.0 - rho).rotate(theta);
    let chord_mid = Point::new(0.0, 1.0 - 2.0 * rho).rotate(theta);

    let mut centers: Vec<Point> = inner.centers.iter().map(|&c| medium + c * rho).collect();
    centers.push(chord_mid);
    let mut directions = inner.directions;
    directions.push(theta);
    SegConfig::new(centers, directions, 4.0 / d_cur)
}

fn qn_centers(angles: &[f64]) -> Vec<Point> {
    let n = angles.len() + 1;
    if n == 1 {
        return vec![ORIGIN];
    }
    let theta = angles[n - 2];
    let u = unit(theta);
    let scale = (n - 1) as f64 / n as f64;
    let medium = -u * (1.0 / n as f64);
    let mut centers: Vec<Point> = qn_centers(&angles[..n - 2])
        .into_iter()
        .map(|c| medium + c * scale)
        .collect();
    centers.push(u * scale);
    centers
}

/// The map `q_n`: `n` disks of radius `1/n` from `n - 1` angles.
///
/// Stage `n` places a medium disk of radius `(n-1)/n` centered at
/// `-(1/n) u` and the `n`th disk at `((n-1)/n) u`, where `u` is the unit
/// vector at the last angle, so the two are tangent to each other and each
/// internally tangent to the ambient disk; the scaled copy of `q_{n-1}`
/// goes inside the medium disk.
pub fn build_qn(angles: &[f64]) -> DiskConfig {
    let n = angles.len() + 1;
    DiskConfig::new(qn_centers(angles), 1.0 / n as f64)
}

/// Recover the input angles of a `q_n` configuration from its centers by
/// unwinding the recursion level by level.
pub fn recover_qn_angles(config: &DiskConfig) -> Vec<f64> {
    let mut centers = config.centers.clone();
    let n = centers.len();
    let mut out = vec![0.0; n.saturating_sub(1)];
    for level in (2..=n).rev() {
        let theta = centers[level - 1].angle_turns();
        out[level - 2] = theta;
        let medium = -unit(theta) * (1.0 / level as f64);
        let scale = level as f64 / (level - 1) as f64;
        for c in centers.iter_mut().take(level - 1) {
            *c = (*c - medium) * scale;
        }
    }
    out
}

/// The matching family: `j` pairs of radius-`r` disks turning inside `j`
/// disjoint medium disks of radius `2r` (packed greedily). Disk `2i-1` and
/// disk `2i` are tangent and the vector between them has angle `angles[i]`.
pub fn build_matching_family(j: usize, r: f64, angles: &[f64]) -> Result<DiskConfig, GeomError> {
    assert_eq!(angles.len(), j);
    assert!(r > 0.0);
    let layout = pack_disks(&vec![2.0 * r; j]);
    if layout.enclosing_radius > 1.0 + DEFAULT_TOL {
        return Err(GeomError::Infeasible(format!(
            "{j} medium disks of radius {} pack only into radius {}",
            2.0 * r,
            layout.enclosing_radius
        )));
    }
    let mut centers = Vec::with_capacity(2 * j);
    for (m, &t) in layout.centers.iter().zip(angles) {
        let u = unit(t) * r;
        centers.push(*m - u);
        centers.push(*m + u);
    }
    Ok(DiskConfig::new(centers, r))
}

/// Obstacle positions for the swap family: the two fixed disks sit tangent
/// to each other and to the boundary, at angles +-1/12 of a turn.
fn hhat_fixed_positions() -> (Point, Point) {
    let d = 2.0 / 3.0;
    (unit(1.0 / 12.0) * d, unit(-1.0 / 12.0) * d)
}

/// One-angle swap loop `h(phi)`: the moving tangent pair at direction
/// `phi` with the two fixed disks untouched, everything at radius 1/3.
///
/// The moving pair keeps one disk parked against the pinch at the origin
/// while the other sweeps the far boundary; near the vertical directions
/// the pair hands the parked role from one disk to the other by riding the
/// circle of exact tangency around a fixed disk.
fn hhat_moving_pair(phi: f64) -> (Point, Point) {
    let (c_pos, d_pos) = hhat_fixed_positions();
    let t = wrap_unit(phi);
    let r23 = 2.0 / 3.0;
    if !(0.25..0.75).contains(&t) {
        // right-pointing: second disk parked at the origin
        (-unit(t) * r23, ORIGIN)
    } else if t < 5.0 / 12.0 {
        // upswing: ride the tangency circle around the lower fixed disk
        let a = d_pos + unit(5.0 / 6.0 - t) * r23;
        (a, a + unit(t) * r23)
    } else if t <= 7.0 / 12.0 {
        // left-pointing: first disk parked at the origin
        (ORIGIN, unit(t) * r23)
    } else {
        // downswing: ride the tangency circle around the upper fixed disk
        let a = c_pos + unit(1.0 / 6.0 - t) * r23;
        (a, a + unit(t) * r23)
    }
}

/// The swap family for n = 4 at radius 1/3: disks `a` and `b` turn around
/// each other while the other two stay fixed relative to the global
/// rotation. The output is the counterclockwise rotation by `theta1` of
/// `h(theta2 - theta1)`, so the vector from disk `a` to disk `b` has angle
/// `theta2`.
pub fn build_hhat(a: usize, b: usize, theta1: f64, theta2: f64) -> DiskConfig {
    assert!(
        (1..=4).contains(&a) && (1..=4).contains(&b) && a < b,
        "need 1 <= a < b <= 4"
    );
    let phi = theta2 - theta1;
    let (a_pos, b_pos) = hhat_moving_pair(phi);
    let (c_pos, d_pos) = hhat_fixed_positions();
    let fixed: Vec<usize> = (1..=4).filter(|&v| v != a && v != b).collect();

    let mut centers = vec![ORIGIN; 4];
    centers[a - 1] = a_pos;
    centers[b - 1] = b_pos;
    centers[fixed[0] - 1] = c_pos;
    centers[fixed[1] - 1] = d_pos;
    let centers = centers.into_iter().map(|p| p.rotate(theta1)).collect();
    DiskConfig::new(centers, 1.0 / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{seg_tau, tau};
    use crate::plane::wrap_signed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn length_recursion_anchors() {
        assert_eq!(diameter_sequence(1), 2.0);
        assert_eq!(segment_length(1), 2.0);
        assert_eq!(diameter_sequence(2), 2.5);
        assert_eq!(segment_length(2), 1.6);
        assert!((diameter_sequence(3) - 2.9).abs() < 1e-15);
        assert!((segment_length(3) - 4.0 / 2.9).abs() < 1e-15);
    }

    #[test]
    fn length_times_diameter_is_four() {
        for n in 1..=1000 {
            let prod = segment_length(n) * diameter_sequence(n);
            assert!((prod - 4.0).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn diameter_squared_bounds() {
        for (i, d) in diameters().take(10_000).enumerate() {
            let n = (i + 1) as f64;
            let d2 = d * d;
            assert!(2.0 * (n + 1.0) <= d2 + 1e-9, "n={n}");
            assert!(d2 <= 3.0 * (n + 1.0) + 1e-9, "n={n}");
        }
    }

    #[test]
    fn tangent_chord_closure() {
        // l_n = 4 sqrt(rho (1 - rho)) with rho = l_n / l_{n-1}
        for n in 2..=1000 {
            let l_prev = segment_length(n - 1);
            let l = segment_length(n);
            let rho = l / l_prev;
            let closure = 4.0 * (rho * (1.0 - rho)).sqrt();
            assert!((l - closure).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn k1_is_a_diameter() {
        let cfg = build_kn(&[0.0]);
        assert_eq!(cfg.length, 2.0);
        assert_eq!(cfg.centers, vec![ORIGIN]);
        let seg = cfg.segments()[0];
        assert!((seg.a.norm() - 1.0).abs() < 1e-15);
        assert!((seg.b.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn k2_supports_length_16() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let angles = [rng.gen::<f64>(), rng.gen::<f64>()];
            let cfg = build_kn(&angles);
            assert!((cfg.length - 1.6).abs() < 1e-15);
            assert!(cfg.is_valid(DEFAULT_TOL), "angles {angles:?}");
            let t = seg_tau(&cfg.centers, &cfg.directions);
            assert!(t >= 1.6 - 1e-9, "angles {angles:?} tau {t}");
        }
    }

    #[test]
    fn kn_valid_on_random_angles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 3..=5 {
            for _ in 0..300 {
                let angles: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
                let cfg = build_kn(&angles);
                assert!(cfg.is_valid(DEFAULT_TOL), "n={n} angles {angles:?}");
                assert_eq!(cfg.directions, angles);
            }
        }
    }

    #[test]
    fn qn_base_cases() {
        let q1 = build_qn(&[]);
        assert_eq!(q1.centers, vec![ORIGIN]);
        assert_eq!(q1.radius, 1.0);

        let q2 = build_qn(&[0.0]);
        assert_eq!(q2.radius, 0.5);
        assert!(q2.centers[0].dist(Point::new(-0.5, 0.0)) < 1e-15);
        assert!(q2.centers[1].dist(Point::new(0.5, 0.0)) < 1e-15);
        assert!((tau(&q2.centers).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn qn_tau_and_angle_recovery() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in 2..=8usize {
            for _ in 0..200 {
                let angles: Vec<f64> = (0..n - 1).map(|_| rng.gen::<f64>()).collect();
                let cfg = build_qn(&angles);
                assert!(cfg.is_valid(DEFAULT_TOL));
                let t = tau(&cfg.centers).unwrap();
                assert!(
                    (t - 1.0 / n as f64).abs() < 1e-12,
                    "n={n} tau={t} angles {angles:?}"
                );
                // the vector from the medium-disk center to the last disk
                // has the last input angle
                let medium = -unit(angles[n - 2]) * (1.0 / n as f64);
                let got = (cfg.centers[n - 1] - medium).angle_turns();
                assert!(wrap_signed(got - angles[n - 2]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn matching_family_single_pair() {
        let cfg = build_matching_family(1, 0.5, &[0.0]).unwrap();
        assert!(cfg.centers[0].dist(Point::new(-0.5, 0.0)) < 1e-12);
        assert!(cfg.centers[1].dist(Point::new(0.5, 0.0)) < 1e-12);
        assert!(cfg.is_valid(DEFAULT_TOL));
    }

    #[test]
    fn matching_family_four_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..200 {
            let angles: Vec<f64> = (0..4).map(|_| rng.gen::<f64>()).collect();
            let cfg = build_matching_family(4, 0.15, &angles).unwrap();
            assert!(cfg.is_valid(DEFAULT_TOL), "angles {angles:?}");
            // exact angle recovery from the pair vector
            for (i, &t) in angles.iter().enumerate() {
                let v = cfg.centers[2 * i + 1] - cfg.centers[2 * i];
                assert!(wrap_signed(v.angle_turns() - t).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn matching_family_rejects_infeasible() {
        assert!(build_matching_family(4, 0.45, &[0.0; 4]).is_err());
    }

    #[test]
    fn hhat_examples() {
        let cfg = build_hhat(1, 2, 0.0, 0.0);
        let t = tau(&cfg.centers).unwrap();
        assert!(t >= 1.0 / 3.0 - 1e-9);

        // sweeping theta2 with theta1 = 0 gives the pair vector exactly
        for k in 0..97 {
            let theta2 = k as f64 / 97.0;
            let cfg = build_hhat(1, 2, 0.0, theta2);
            let v = cfg.centers[1] - cfg.centers[0];
            assert!(
                wrap_signed(v.angle_turns() - theta2).abs() < 1e-12,
                "theta2={theta2}"
            );
        }
    }

    #[test]
    fn hhat_valid_on_full_grid() {
        for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            for i in 0..64 {
                for j in 0..64 {
                    let t1 = i as f64 / 64.0;
                    let t2 = j as f64 / 64.0;
                    let cfg = build_hhat(a, b, t1, t2);
                    assert!(cfg.is_valid(DEFAULT_TOL), "a={a} b={b} t1={t1} t2={t2}");
                }
            }
        }
    }

    #[test]
    fn hhat_moving_pair_is_continuous() {
        // step through the loop finely; consecutive configurations must be
        // close (the construction is piecewise but glued)
        let steps = 4096;
        let mut prev = hhat_moving_pair(0.0);
        for k in 1..=steps {
            let phi = k as f64 / steps as f64;
            let cur = hhat_moving_pair(phi);
            let jump = prev.0.dist(cur.0).max(prev.1.dist(cur.1));
            assert!(jump < 0.02, "jump {jump} at phi={phi}");
            prev = cur;
        }
    }
}
