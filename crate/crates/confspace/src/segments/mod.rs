//! Segment-specific obstructions: the perpendicular-fit threshold for two
//! segments, hourglass trap parameters, the three-strip midpoint-box
//! construction, and a grid motion planner that certifies trapping.

mod trap;

pub use trap::{trap_certify, trap_certify_with, PoseGrid, TrapCertificate};

#[cfg(test)]
use crate::geometry::DEFAULT_TOL;
use crate::geometry::{GeomError, SegConfig};
use crate::plane::{point_segment_dist, seg_seg_dist, segments_intersect, unit, Point, Segment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SegmentsError {
    #[error("segment length {0} must exceed half the strip height {1}")]
    LengthTooShort(f64, f64),
    #[error("epsilon {0} out of range (0, 1/4)")]
    EpsOutOfRange(f64),
    #[error("trap parameter invariant violated: {0}")]
    BadParams(String),
    #[error("resolution insufficient: {0}")]
    ResolutionInsufficient(String),
    #[error("pose grid too large: {0} cells")]
    DomainTooLarge(usize),
}

/// Obstacle parameters for the hourglass trap in the strip `|y| < 1`:
/// points at `((2k+1) a, +-b)` trap a vertical segment of length `r`
/// inside a vertical strip of width `delta`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrapParams {
    pub a: f64,
    pub b: f64,
    pub r: f64,
    pub delta: f64,
}

impl TrapParams {
    pub fn ratio(&self) -> f64 {
        self.a / self.b
    }

    /// The three strict inequalities behind the trap:
    /// hourglass width `2 a/b < delta/2`, hourglass diagonal
    /// `2 sqrt((a/b)^2 + 1) < 2r`, and trapping length
    /// `sqrt((a + a/b)^2 + (b+1)^2) < r`.
    pub fn check_invariants(&self) -> Result<(), SegmentsError> {
        let t = self.ratio();
        if !(2.0 * t < self.delta / 2.0) {
            return Err(SegmentsError::BadParams(format!(
                "hourglass width 2a/b = {} is not below delta/2 = {}",
                2.0 * t,
                self.delta / 2.0
            )));
        }
        if !(2.0 * (t * t + 1.0).sqrt() < 2.0 * self.r) {
            return Err(SegmentsError::BadParams(format!(
                "hourglass diagonal {} is not below 2r = {}",
                2.0 * (t * t + 1.0).sqrt(),
                2.0 * self.r
            )));
        }
        let len = ((self.a + t).powi(2) + (self.b + 1.0).powi(2)).sqrt();
        if !(len < self.r) {
            return Err(SegmentsError::BadParams(format!(
                "trapping length {len} is not below r = {}",
                self.r
            )));
        }
        Ok(())
    }

    /// Obstacle points `((2k+1) a, +-b)` with `|x| <= x_max`.
    pub fn points(&self, x_max: f64) -> Vec<Point> {
        let mut out = Vec::new();
        let mut k = 0i64;
        loop {
            let x = (2 * k + 1) as f64 * self.a;
            if x > x_max {
                break;
            }
            for sx in [x, -x] {
                for sy in [self.b, -self.b] {
                    out.push(Point::new(sx, sy));
                }
            }
            k += 1;
        }
        out.sort_by(|p, q| (p.x, p.y).partial_cmp(&(q.x, q.y)).unwrap());
        out.dedup_by(|p, q| p.x == q.x && p.y == q.y);
        out
    }
}

/// Choose hourglass parameters for the strip `|y| < 1`: first the ratio
/// `a/b`, then the scale, each strict inequality taken with a 10% safety
/// margin.
pub fn hourglass_params(r: f64, delta: f64) -> Result<TrapParams, SegmentsError> {
    if r <= 1.0 {
        return Err(SegmentsError::LengthTooShort(r, 1.0));
    }
    assert!(delta > 0.0);
    let ratio_cap = (delta / 4.0).min((r * r - 1.0).sqrt());
    let t = 0.9 * ratio_cap;
    let b = 0.9 * (r / (t * t + 1.0).sqrt() - 1.0);
    let a = t * b;
    let params = TrapParams { a, b, r, delta };
    params.check_invariants()?;
    Ok(params)
}

/// Clearance of a perpendicular two-segment placement: the minimum of the
/// segment separation and the boundary margins; negative when invalid. A
/// crossing pair scores the negated smallest endpoint-to-other-segment
/// distance, which keeps the objective continuous across the crossing.
fn perpendicular_clearance(r: f64, params: &[f64; 4]) -> f64 {
    let s1 = Segment::centered(Point::new(params[0], params[1]), 0.0, r);
    let s2 = Segment::centered(Point::new(params[2], params[3]), 0.25, r);
    let sep = if segments_intersect(s1, s2) {
        -(point_segment_dist(s1.a, s2)
            .min(point_segment_dist(s1.b, s2))
            .min(point_segment_dist(s2.a, s1))
            .min(point_segment_dist(s2.b, s1)))
    } else {
        seg_seg_dist(s1, s2)
    };
    let margin = [s1.a, s1.b, s2.a, s2.b]
        .iter()
        .map(|p| 1.0 - p.norm())
        .fold(f64::INFINITY, f64::min);
    sep.min(margin)
}

fn nelder_mead(
    f: &dyn Fn(&[f64; 4]) -> f64,
    start: [f64; 4],
    scale: f64,
    iters: usize,
) -> ([f64; 4], f64) {
    let mut simplex: Vec<([f64; 4], f64)> = Vec::with_capacity(5);
    simplex.push((start, f(&start)));
    for d in 0..4 {
        let mut p = start;
        p[d] += scale;
        simplex.push((p, f(&p)));
    }
    for _ in 0..iters {
        // maximize f: sort descending
        simplex.sort_by(|a, b| b.1.total_cmp(&a.1));
        let spread = simplex[0]
            .0
            .iter()
            .zip(&simplex[4].0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        if spread < 1e-10 {
            break;
        }
        let mut centroid = [0.0f64; 4];
        for entry in &simplex[..4] {
            for d in 0..4 {
                centroid[d] += entry.0[d] / 4.0;
            }
        }
        let worst = simplex[4];
        let mut refl = [0.0f64; 4];
        for d in 0..4 {
            refl[d] = centroid[d] + (centroid[d] - worst.0[d]);
        }
        let fr = f(&refl);
        if fr > simplex[0].1 {
            let mut exp = [0.0f64; 4];
            for d in 0..4 {
                exp[d] = centroid[d] + 2.0 * (centroid[d] - worst.0[d]);
            }
            let fe = f(&exp);
            simplex[4] = if fe > fr { (exp, fe) } else { (refl, fr) };
        } else if fr > simplex[3].1 {
            simplex[4] = (refl, fr);
        } else {
            let mut con = [0.0f64; 4];
            for d in 0..4 {
                con[d] = centroid[d] + 0.5 * (worst.0[d] - centroid[d]);
            }
            let fc = f(&con);
            if fc > worst.1 {
                simplex[4] = (con, fc);
            } else {
                let best = simplex[0].0;
                for entry in simplex.iter_mut().skip(1) {
                    for d in 0..4 {
                        entry.0[d] = best[d] + 0.5 * (entry.0[d] - best[d]);
                    }
                    entry.1 = f(&entry.0);
                }
            }
        }
    }
    simplex.sort_by(|a, b| b.1.total_cmp(&a.1));
    simplex[0]
}

/// Best clearance over placements of two perpendicular segments of length
/// `r` in the unit disk: multistart local optimization seeded with the
/// chord-plus-tangent-disk configuration.
pub fn perpendicular_best_clearance(r: f64, random_starts: usize) -> f64 {
    let f = |p: &[f64; 4]| perpendicular_clearance(r, p);
    // seed: horizontal chord at the bottom, vertical segment in the
    // tangent disk above it
    let h = (1.0 - (r * r / 4.0).min(1.0)).max(0.0).sqrt();
    let seed = [0.0, -h, 0.0, -h + r / 2.0];
    let (_, mut best) = nelder_mead(&f, seed, 0.05, 400);

    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    for _ in 0..random_starts {
        let start = [
            rng.gen_range(-0.8..0.8),
            rng.gen_range(-0.8..0.8),
            rng.gen_range(-0.8..0.8),
            rng.gen_range(-0.8..0.8),
        ];
        let (_, v) = nelder_mead(&f, start, 0.15, 250);
        if v > best {
            best = v;
        }
    }
    best
}

/// Whether two disjoint perpendicular segments of length `r` fit in the
/// closed unit disk, within `tol`.
pub fn perpendicular_fits(r: f64, tol: f64) -> bool {
    perpendicular_best_clearance(r, 1000) >= -tol
}

/// Maximum length at which two segments fit at right angles in the unit
/// disk, by bisection over the monotone fit predicate.
pub fn max_perpendicular_length(tolerance: f64) -> f64 {
    assert!(tolerance > 0.0);
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if perpendicular_fits(mid, tolerance) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// One strip of the midpoint-box construction, with its trap parameters in
/// normalized strip coordinates (half-height scaled to 1).
#[derive(Clone, Debug)]
pub struct StripTrap {
    pub y_center: f64,
    pub half_height: f64,
    pub delta: f64,
    /// Parameters for the normalized strip `|y| < 1` with segment length
    /// `r / half_height`.
    pub params: TrapParams,
    /// Obstacle points in disk coordinates, clipped to the closed disk.
    pub points: Vec<Point>,
}

/// The three-strip construction: a length `r < 1` and a finite obstacle
/// set `S` in the unit disk such that vertical segments of length `r` are
/// trapped by the middle, upper, or lower strip.
#[derive(Clone, Debug)]
pub struct MidpointBoxConstruction {
    pub eps: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub r: f64,
    pub strips: [StripTrap; 3],
}

impl MidpointBoxConstruction {
    pub fn all_points(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self
            .strips
            .iter()
            .flat_map(|s| s.points.iter().cloned())
            .collect();
        out.sort_by(|p, q| (p.x, p.y).partial_cmp(&(q.x, q.y)).unwrap());
        out.dedup_by(|p, q| p.x == q.x && p.y == q.y);
        out
    }
}

fn strip_trap(
    y_center: f64,
    half_height: f64,
    r: f64,
    delta: f64,
) -> Result<StripTrap, SegmentsError> {
    if r <= half_height {
        return Err(SegmentsError::LengthTooShort(r, half_height));
    }
    let params = hourglass_params(r / half_height, delta / half_height)?;
    // points in disk coordinates, clipped to the closed unit disk
    let mut points = Vec::new();
    let mut k = 0i64;
    loop {
        let x = (2 * k + 1) as f64 * params.a * half_height;
        if x > 1.0 {
            break;
        }
        for sx in [x, -x] {
            for sy in [
                y_center + params.b * half_height,
                y_center - params.b * half_height,
            ] {
                let p = Point::new(sx, sy);
                if p.norm() <= 1.0 {
                    points.push(p);
                }
            }
        }
        k += 1;
    }
    points.sort_by(|p, q| (p.x, p.y).partial_cmp(&(q.x, q.y)).unwrap());
    points.dedup_by(|p, q| p.x == q.x && p.y == q.y);
    Ok(StripTrap {
        y_center,
        half_height,
        delta,
        params,
        points,
    })
}

/// Apply the hourglass construction three times: a middle strip keeping
/// vertical segments away from the center column, and upper/lower strips
/// (boundaries `y = -1/2 + eps, y = 1` and mirrored) pinning those inside
/// it. Internal choices: `eps1 = eps/3`, `eps2 = 2 eps/3`.
pub fn midpoint_box_sets(eps: f64) -> Result<MidpointBoxConstruction, SegmentsError> {
    if !(0.0 < eps && eps < 0.25) {
        return Err(SegmentsError::EpsOutOfRange(eps));
    }
    let eps1 = eps / 3.0;
    let eps2 = 2.0 * eps / 3.0;

    // smallest horizontal strip containing the disk minus the eps1 column
    let h_mid = (1.0 - eps1 * eps1).sqrt();
    let h_up = 0.75 - eps / 2.0;
    let y_up = 0.25 + eps / 2.0;

    let r = (h_mid + 1.0) / 2.0;
    debug_assert!(r < 1.0);

    let middle = strip_trap(0.0, h_mid, r, eps2 - eps1)?;
    let upper = strip_trap(y_up, h_up, r, eps - eps2)?;
    let lower = strip_trap(-y_up, h_up, r, eps - eps2)?;

    Ok(MidpointBoxConstruction {
        eps,
        eps1,
        eps2,
        r,
        strips: [middle, upper, lower],
    })
}

/// Certify each strip of the midpoint-box construction with the grid
/// planner (run in normalized strip coordinates). Strips whose obstacle
/// offsets fall below the grid's soundness margin report
/// `ResolutionInsufficient`.
pub fn certify_midpoint_box(
    construction: &MidpointBoxConstruction,
    grid: &PoseGrid,
) -> [Result<TrapCertificate, SegmentsError>; 3] {
    let run = |s: &StripTrap| trap_certify(&s.params, grid);
    [
        run(&construction.strips[0]),
        run(&construction.strips[1]),
        run(&construction.strips[2]),
    ]
}

/// Segments placed radially at distinct angles, outer endpoints near the
/// boundary; pairwise disjoint for any `r < 1` because distinct rays only
/// meet at the origin.
pub fn radial_surjectivity_demo(angles: &[f64], r: f64) -> Result<SegConfig, GeomError> {
    if !(r < 1.0) {
        return Err(GeomError::Infeasible(format!("length {r} must be < 1")));
    }
    let mut wrapped: Vec<f64> = angles.iter().map(|&a| crate::plane::wrap_unit(a)).collect();
    wrapped.sort_by(f64::total_cmp);
    for w in wrapped.windows(2) {
        if w[0] == w[1] {
            return Err(GeomError::DuplicateAngles);
        }
    }
    let margin = (1.0 - r) / 2.0;
    let centers: Vec<Point> = angles
        .iter()
        .map(|&t| unit(t) * (1.0 - margin - r / 2.0))
        .collect();
    Ok(SegConfig::new(centers, angles.to_vec(), r))
}

/// Largest radius at which `k` disks can be collinear in the unit disk:
/// `k` tangent disks of radius `1/k` exactly fill a diameter.
pub fn collinear_obstruction(k: usize) -> f64 {
    assert!(k >= 1);
    1.0 / k as f64
}
