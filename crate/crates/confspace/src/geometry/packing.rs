//! Greedy incremental disk packing with the doubling fallback.
//!
//! Disks are placed in descending radius order. Each disk goes to the
//! candidate position (tangency intersections, radial slots, boundary
//! contacts, or a fallback grid) that minimizes the new enclosing radius;
//! when nothing fits better, the enclosing radius doubles, the existing
//! layout shifts into one half, and the disk takes the freed half. The
//! doubling step caps growth, which keeps `R^2 <= 36 sum r_i^2`.

use crate::plane::{circle_circle_intersections, Point, ORIGIN};

/// A placed layout: input radii, centers, and the enclosing radius about
/// the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct PackedLayout {
    pub radii: Vec<f64>,
    pub centers: Vec<Point>,
    pub enclosing_radius: f64,
}

impl PackedLayout {
    /// Check all layout invariants within `tol`.
    pub fn validate(&self, tol: f64) -> Result<(), String> {
        let k = self.radii.len();
        for i in 0..k {
            if self.centers[i].norm() + self.radii[i] > self.enclosing_radius + tol {
                return Err(format!("disk {i} escapes the enclosing circle"));
            }
            for j in i + 1..k {
                let need = self.radii[i] + self.radii[j];
                if self.centers[i].dist(self.centers[j]) < need - tol {
                    return Err(format!("disks {i} and {j} overlap"));
                }
            }
        }
        let sum_sq: f64 = self.radii.iter().map(|r| r * r).sum();
        let bound = 36.0 * sum_sq;
        if self.enclosing_radius * self.enclosing_radius > bound + tol {
            return Err(format!(
                "enclosing radius bound violated: R^2 = {} > 36 sum r^2 = {}",
                self.enclosing_radius * self.enclosing_radius,
                bound
            ));
        }
        Ok(())
    }
}

const PLACE_TOL: f64 = 1e-12;

fn is_free(c: Point, r: f64, placed: &[(Point, f64)]) -> bool {
    placed
        .iter()
        .all(|&(p, pr)| c.dist(p) >= pr + r - PLACE_TOL)
}

fn candidates(r: f64, placed: &[(Point, f64)], enclosing: f64) -> Vec<Point> {
    let mut cands = vec![ORIGIN];
    for &(c, pr) in placed {
        let d = pr + r;
        let dir = if c.norm() > 1e-12 {
            c * (1.0 / c.norm())
        } else {
            Point::new(1.0, 0.0)
        };
        cands.push(c + dir * d);
        cands.push(c - dir * d);
        let n = Point::new(-dir.y, dir.x);
        cands.push(c + n * d);
        cands.push(c - n * d);
        if enclosing - r > 1e-12 {
            cands.extend(circle_circle_intersections(ORIGIN, enclosing - r, c, d));
        }
    }
    for i in 0..placed.len() {
        for j in i + 1..placed.len() {
            let (ci, ri) = placed[i];
            let (cj, rj) = placed[j];
            cands.extend(circle_circle_intersections(ci, ri + r, cj, rj + r));
        }
    }
    cands
}

fn grid_candidates(r: f64, min_radius: f64, enclosing: f64) -> Vec<Point> {
    let reach = enclosing - r;
    if reach <= 0.0 {
        return Vec::new();
    }
    // resolution min(r_i)/4, capped so the fallback stays bounded
    let mut h = min_radius / 4.0;
    let min_h = 2.0 * reach / 256.0;
    if h < min_h {
        h = min_h;
    }
    let steps = (2.0 * reach / h).ceil() as i64;
    let mut out = Vec::new();
    for ix in 0..=steps {
        for iy in 0..=steps {
            let p = Point::new(-reach + ix as f64 * h, -reach + iy as f64 * h);
            if p.norm() <= reach {
                out.push(p);
            }
        }
    }
    out
}

/// Greedy placement of disks with radii sorted descending.
pub fn pack_disks(radii: &[f64]) -> PackedLayout {
    assert!(!radii.is_empty(), "need at least one radius");
    assert!(
        radii.windows(2).all(|w| w[0] >= w[1]) && radii.iter().all(|&r| r > 0.0),
        "radii must be positive and sorted descending"
    );
    let min_radius = *radii.last().unwrap();
    let mut placed: Vec<(Point, f64)> = vec![(ORIGIN, radii[0])];
    let mut enclosing = radii[0];

    for &r in &radii[1..] {
        let mut cands = candidates(r, &placed, enclosing);
        cands.extend(grid_candidates(r, min_radius, enclosing));

        let mut best: Option<(f64, f64, Point)> = None;
        for c in cands {
            if !is_free(c, r, &placed) {
                continue;
            }
            let new_r = enclosing.max(c.norm() + r);
            let key = (new_r, c.norm(), c);
            let better = match &best {
                None => true,
                Some((br, bn, bc)) => (key.0, key.1, key.2.x, key.2.y) < (*br, *bn, bc.x, bc.y),
            };
            if better {
                best = Some(key);
            }
        }

        match best {
            Some((new_r, _, c)) if new_r <= 2.0 * enclosing => {
                placed.push((c, r));
                enclosing = new_r;
            }
            _ => {
                // doubling step: shift everything into one half, put the
                // new disk in the freed half
                let shift = Point::new(-enclosing, 0.0);
                for (c, _) in placed.iter_mut() {
                    *c = *c + shift;
                }
                placed.push((Point::new(enclosing, 0.0), r));
                enclosing *= 2.0;
            }
        }
    }

    PackedLayout {
        radii: radii.to_vec(),
        centers: placed.into_iter().map(|(c, _)| c).collect(),
        enclosing_radius: enclosing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_disk_at_origin() {
        let layout = pack_disks(&[0.7]);
        assert_eq!(layout.centers, vec![ORIGIN]);
        assert_eq!(layout.enclosing_radius, 0.7);
        layout.validate(1e-9).unwrap();
    }

    #[test]
    fn two_unit_disks() {
        let layout = pack_disks(&[1.0, 1.0]);
        layout.validate(1e-9).unwrap();
        assert!(layout.enclosing_radius <= (36.0f64 * 2.0).sqrt());
        assert!(layout.centers[0].dist(layout.centers[1]) >= 2.0 - 1e-9);
    }

    #[test]
    fn four_equal_mediums_fit_the_unit_disk() {
        // medium disks for the j = 4 matching family at r = 0.15
        let layout = pack_disks(&[0.3, 0.3, 0.3, 0.3]);
        layout.validate(1e-9).unwrap();
        assert!(
            layout.enclosing_radius <= 1.0,
            "R = {}",
            layout.enclosing_radius
        );
    }

    #[test]
    fn random_multisets_keep_all_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for trial in 0..100 {
            let k = rng.gen_range(1..=30);
            let mut radii: Vec<f64> = (0..k).map(|_| rng.gen_range(0.05..1.0)).collect();
            radii.sort_by(|a, b| b.total_cmp(a));
            let layout = pack_disks(&radii);
            layout
                .validate(1e-9)
                .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        }
    }
}
