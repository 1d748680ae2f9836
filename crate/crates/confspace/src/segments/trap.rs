//! Grid certification of the hourglass trap: breadth-first exploration of
//! segment poses `(x, y, theta)` in the strip `|y| < 1` among the obstacle
//! points.
//!
//! Point obstacles need a blocking shell, or grid steps would hop straight
//! across them: a pose is explored only when its obstacle clearance
//! exceeds half the per-step movement bound. Any continuous motion keeping
//! clearance above the recorded `clearance_slack` (one full step bound)
//! snaps to a path of 26-connected explored poses, so a run whose
//! reachable set stays inside the width-delta strip and away from
//! horizontal certifies that no such motion escapes.

use super::{SegmentsError, TrapParams};
use crate::plane::{point_segment_dist, Point, Segment};
use std::collections::VecDeque;

/// Discretization of the pose space.
#[derive(Clone, Copy, Debug)]
pub struct PoseGrid {
    /// Spatial step for both x and y.
    pub xy_step: f64,
    /// Angular step in turns.
    pub theta_step: f64,
}

impl PoseGrid {
    pub fn new(xy_step: f64, theta_step: f64) -> Self {
        assert!(xy_step > 0.0 && theta_step > 0.0);
        PoseGrid {
            xy_step,
            theta_step,
        }
    }

    /// The acceptance grid: 0.005 spatial, one degree angular.
    pub fn fine() -> Self {
        PoseGrid::new(0.005, 1.0 / 360.0)
    }

    /// Segment-point movement bound for one 26-connected grid step.
    fn step_movement(&self, r: f64) -> f64 {
        self.xy_step * std::f64::consts::SQRT_2 + r * std::f64::consts::PI * self.theta_step
    }
}

/// Outcome of the reachability exploration.
#[derive(Clone, Debug)]
pub struct TrapCertificate {
    pub visited: usize,
    /// Extent of segment points (not just centers) in x.
    pub x_extent: (f64, f64),
    /// Extent of segment centers in y.
    pub y_extent: (f64, f64),
    /// Reached angles in turns.
    pub theta_extent: (f64, f64),
    /// The segment stayed within the width-delta vertical strip centered
    /// on its start and never touched the x domain boundary.
    pub stays_in_delta_strip: bool,
    /// A horizontal pose (theta = 0 or 1/2) was reached.
    pub reached_horizontal: bool,
    pub hit_domain_boundary: bool,
    /// Certified clearance margin: motions keeping more than this distance
    /// from every obstacle are covered by the exploration.
    pub clearance_slack: f64,
    pub start_clearance: f64,
    /// Deterministically thinned sample of visited poses `(x, y, theta)`,
    /// for rendering the reachable-set projection.
    pub sample_poses: Vec<(f64, f64, f64)>,
}

impl TrapCertificate {
    /// The trap holds: confined to the delta strip and never horizontal.
    pub fn confirms_trap(&self) -> bool {
        self.stays_in_delta_strip && !self.reached_horizontal
    }
}

/// Explore collision-free poses of a vertical-start segment among the trap
/// obstacles, in the normalized strip `|y| < 1`.
///
/// Pass `TrapParams` with an empty obstacle set by setting `obstacles` to
/// `Some(vec![])` for the negative control.
pub fn trap_certify_with(
    params: &TrapParams,
    grid: &PoseGrid,
    obstacles: Option<Vec<Point>>,
) -> Result<TrapCertificate, SegmentsError> {
    let r = params.r;
    let delta = params.delta;
    // poses are blocked within `shell` of an obstacle so single grid steps
    // cannot sweep across a point; motions keeping clearance above
    // `2 * shell` (snap error plus shell) are covered by the exploration
    let shell = 0.5 * grid.step_movement(r);
    let slack = 2.0 * shell;

    // the start pose sits between the first obstacle columns; its
    // clearance is at most `a`, so the grid must resolve below that
    let custom = obstacles.is_some();
    if !custom && params.a <= slack {
        return Err(SegmentsError::ResolutionInsufficient(format!(
            "obstacle offset a = {:.3e} is below the grid slack {:.3e}",
            params.a, slack
        )));
    }

    let points = match obstacles {
        Some(p) => p,
        None => params.points(delta + r / 2.0 + 4.0 * params.a),
    };

    let nx = 2 * (delta / grid.xy_step).round() as usize + 1;
    let ny = 2 * (1.0 / grid.xy_step).round() as usize + 1;
    let ntheta = (0.5 / grid.theta_step).round() as usize + 1;
    let total = nx
        .checked_mul(ny)
        .and_then(|v| v.checked_mul(ntheta))
        .ok_or(SegmentsError::DomainTooLarge(usize::MAX))?;
    if total > 512_000_000 {
        return Err(SegmentsError::DomainTooLarge(total));
    }

    let x_of = |ix: usize| -delta + ix as f64 * grid.xy_step;
    let y_of = |iy: usize| -1.0 + iy as f64 * grid.xy_step;
    let t_of = |it: usize| it as f64 * grid.theta_step;

    let half_dirs: Vec<Point> = (0..ntheta)
        .map(|it| crate::plane::unit(t_of(it)) * (r / 2.0))
        .collect();
    let pose_segment = |ix: usize, iy: usize, it: usize| -> Segment {
        let c = Point::new(x_of(ix), y_of(iy));
        Segment::new(c - half_dirs[it], c + half_dirs[it])
    };

    let free = |seg: &Segment| -> bool {
        if seg.a.y.abs() > 1.0 || seg.b.y.abs() > 1.0 {
            return false;
        }
        // points outside the inflated x range cannot be within the shell
        let lo = seg.a.x.min(seg.b.x) - shell - 1e-9;
        let hi = seg.a.x.max(seg.b.x) + shell + 1e-9;
        points
            .iter()
            .all(|p| p.x < lo || p.x > hi || point_segment_dist(*p, *seg) > shell)
    };

    let start = (
        (delta / grid.xy_step).round() as usize,
        (1.0 / grid.xy_step).round() as usize,
        (0.25 / grid.theta_step).round() as usize,
    );
    let start_seg = pose_segment(start.0, start.1, start.2);
    let start_clearance = points
        .iter()
        .map(|p| point_segment_dist(*p, start_seg))
        .fold(f64::INFINITY, f64::min);
    if start_clearance <= slack {
        return Err(SegmentsError::ResolutionInsufficient(format!(
            "start clearance {start_clearance:.3e} is below the grid slack {slack:.3e}"
        )));
    }
    if !free(&start_seg) {
        return Err(SegmentsError::BadParams(
            "start pose is not collision-free".into(),
        ));
    }

    let idx = |ix: usize, iy: usize, it: usize| (it * ny + iy) * nx + ix;
    let mut seen = BitSet::new(total);
    let mut queue = VecDeque::new();
    seen.set(idx(start.0, start.1, start.2));
    queue.push_back(start);

    let mut cert = TrapCertificate {
        visited: 0,
        x_extent: (f64::INFINITY, f64::NEG_INFINITY),
        y_extent: (f64::INFINITY, f64::NEG_INFINITY),
        theta_extent: (f64::INFINITY, f64::NEG_INFINITY),
        stays_in_delta_strip: true,
        reached_horizontal: false,
        hit_domain_boundary: false,
        clearance_slack: slack,
        start_clearance,
        sample_poses: Vec::new(),
    };
    let mut stride = 1usize;

    while let Some((ix, iy, it)) = queue.pop_front() {
        if cert.visited % stride == 0 {
            cert.sample_poses.push((x_of(ix), y_of(iy), t_of(it)));
            if cert.sample_poses.len() >= 8192 {
                cert.sample_poses = cert.sample_poses.iter().step_by(2).cloned().collect();
                stride *= 2;
            }
        }
        cert.visited += 1;
        let seg = pose_segment(ix, iy, it);
        let (sx_lo, sx_hi) = (seg.a.x.min(seg.b.x), seg.a.x.max(seg.b.x));
        cert.x_extent.0 = cert.x_extent.0.min(sx_lo);
        cert.x_extent.1 = cert.x_extent.1.max(sx_hi);
        cert.y_extent.0 = cert.y_extent.0.min(y_of(iy));
        cert.y_extent.1 = cert.y_extent.1.max(y_of(iy));
        cert.theta_extent.0 = cert.theta_extent.0.min(t_of(it));
        cert.theta_extent.1 = cert.theta_extent.1.max(t_of(it));
        if it == 0 || it == ntheta - 1 {
            cert.reached_horizontal = true;
        }
        if ix == 0 || ix == nx - 1 {
            cert.hit_domain_boundary = true;
        }

        for dx in -1i64..=1 {
            for dy in -1i64..=1 {
                for dt in -1i64..=1 {
                    if dx == 0 && dy == 0 && dt == 0 {
                        continue;
                    }
                    let jx = ix as i64 + dx;
                    let jy = iy as i64 + dy;
                    let jt = it as i64 + dt;
                    if jx < 0
                        || jy < 0
                        || jt < 0
                        || jx >= nx as i64
                        || jy >= ny as i64
                        || jt >= ntheta as i64
                    {
                        continue;
                    }
                    let (jx, jy, jt) = (jx as usize, jy as usize, jt as usize);
                    let flat = idx(jx, jy, jt);
                    if seen.get(flat) {
                        continue;
                    }
                    let nseg = pose_segment(jx, jy, jt);
                    if free(&nseg) {
                        seen.set(flat);
                        queue.push_back((jx, jy, jt));
                    }
                }
            }
        }
    }

    cert.stays_in_delta_strip = !cert.hit_domain_boundary
        && cert.x_extent.0 >= -delta / 2.0 - 1e-9
        && cert.x_extent.1 <= delta / 2.0 + 1e-9;
    Ok(cert)
}

/// Certify the trap for the given parameters on the given grid.
pub fn trap_certify(
    params: &TrapParams,
    grid: &PoseGrid,
) -> Result<TrapCertificate, SegmentsError> {
    trap_certify_with(params, grid, None)
}

struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segments::hourglass_params;

    #[test]
    fn trap_confirmed_on_coarse_grid() {
        // a wider delta gives obstacle offsets the coarse grid can resolve
        let params = hourglass_params(1.5, 0.3).unwrap();
        let grid = PoseGrid::new(0.008, 1.0 / 360.0);
        let cert = trap_certify(&params, &grid).unwrap();
        assert!(cert.confirms_trap(), "{cert:?}");
        assert!(cert.visited > 0);
        assert!(cert.x_extent.1 - cert.x_extent.0 < params.delta);
        assert!(cert.theta_extent.0 > 0.0 && cert.theta_extent.1 < 0.5);
    }

    #[test]
    fn negative_control_reaches_horizontal() {
        let params = hourglass_params(1.5, 0.2).unwrap();
        let grid = PoseGrid::new(0.02, 1.0 / 120.0);
        let cert = trap_certify_with(&params, &grid, Some(vec![])).unwrap();
        assert!(cert.reached_horizontal, "{cert:?}");
    }

    #[test]
    fn too_coarse_grid_is_rejected() {
        let params = hourglass_params(1.5, 0.2).unwrap();
        // slack far above the obstacle offset
        let grid = PoseGrid::new(0.05, 1.0 / 20.0);
        assert!(matches!(
            trap_certify(&params, &grid),
            Err(SegmentsError::ResolutionInsufficient(_))
        ));
    }

    #[test]
    fn adding_obstacles_shrinks_reachability() {
        let params = hourglass_params(1.5, 0.25).unwrap();
        let grid = PoseGrid::new(0.008, 1.0 / 720.0);
        let with = trap_certify(&params, &grid).unwrap();
        let without = trap_certify_with(&params, &grid, Some(vec![])).unwrap();
        assert!(with.visited < without.visited);
    }
}
