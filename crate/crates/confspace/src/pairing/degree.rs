//! Numeric topological degree of sampled torus self-maps, used as an
//! independent oracle for the combinatorial pairings.
//!
//! A map from the j-torus to itself is sampled on a uniform grid. Each
//! grid cell is lifted to a continuous patch (neighboring samples must
//! move less than a quarter turn per coordinate), split into Kuhn
//! simplices, and interpolated affinely; the degree is the signed count of
//! preimages of a generic target across all simplices. The target is
//! retried deterministically if a preimage lands too close to a simplex
//! boundary.

use crate::forests::OrderedForest;
use crate::geometry::{build_qn, DiskConfig};
use crate::pairing::Permutation;
use crate::plane::{wrap_signed, wrap_unit};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DegreeError {
    #[error("resolution insufficient: {0}")]
    ResolutionInsufficient(String),
    #[error("dimension {0} not supported (max 4)")]
    DimensionTooLarge(usize),
    #[error("could not find a regular target value")]
    NoRegularValue,
    #[error("forest has {0} edges but the sampled map has dimension {1}")]
    DimensionMismatch(usize, usize),
}

/// Values of a map `T^j -> T^j` on the uniform `grid^j` lattice; entries
/// live in `[0, 1)^j` and are stored row-major (axis 0 fastest).
pub struct TorusSamples {
    pub j: usize,
    pub grid: usize,
    pub values: Vec<Vec<f64>>,
}

impl TorusSamples {
    pub fn from_fn(j: usize, grid: usize, f: impl Fn(&[f64]) -> Vec<f64>) -> Self {
        assert!(j >= 1 && grid >= 2);
        let total = grid.pow(j as u32);
        let mut values = Vec::with_capacity(total);
        let mut coords = vec![0usize; j];
        for flat in 0..total {
            unrank(flat, grid, &mut coords);
            let theta: Vec<f64> = coords.iter().map(|&c| c as f64 / grid as f64).collect();
            let v = f(&theta);
            assert_eq!(v.len(), j);
            values.push(v.into_iter().map(wrap_unit).collect());
        }
        TorusSamples { j, grid, values }
    }

    fn at(&self, coords: &[usize]) -> &[f64] {
        &self.values[rank(coords, self.grid)]
    }
}

fn rank(coords: &[usize], grid: usize) -> usize {
    let mut flat = 0usize;
    for &c in coords.iter().rev() {
        flat = flat * grid + c;
    }
    flat
}

fn unrank(mut flat: usize, grid: usize, coords: &mut [usize]) {
    for c in coords.iter_mut() {
        *c = flat % grid;
        flat /= grid;
    }
}

/// Degree of the sampled torus self-map by signed simplicial preimage
/// counting. Fails with `ResolutionInsufficient` when neighboring samples
/// differ by a quarter turn or more in some output coordinate.
pub fn torus_map_degree(samples: &TorusSamples) -> Result<i64, DegreeError> {
    let j = samples.j;
    if j > 4 {
        return Err(DegreeError::DimensionTooLarge(j));
    }
    let grid = samples.grid;
    let total = grid.pow(j as u32);

    // continuity at the grid scale
    let mut coords = vec![0usize; j];
    let mut nb = vec![0usize; j];
    for flat in 0..total {
        unrank(flat, grid, &mut coords);
        for axis in 0..j {
            nb.copy_from_slice(&coords);
            nb[axis] = (nb[axis] + 1) % grid;
            let a = samples.at(&coords);
            let b = samples.at(&nb);
            for c in 0..j {
                if wrap_signed(b[c] - a[c]).abs() >= 0.25 {
                    return Err(DegreeError::ResolutionInsufficient(format!(
                        "output coordinate {c} jumps {:.3} turns across one grid step",
                        wrap_signed(b[c] - a[c]).abs()
                    )));
                }
            }
        }
    }

    let axis_perms = permutations(j);
    const BASE: [f64; 4] = [0.317_281, 0.596_103, 0.841_347, 0.127_911];
    for attempt in 0..16 {
        let target: Vec<f64> = (0..j)
            .map(|axis| wrap_unit(BASE[axis] + attempt as f64 * 0.073_012_9))
            .collect();
        match count_signed_preimages(samples, &axis_perms, &target) {
            Ok(deg) => return Ok(deg),
            Err(CountFailure::NearBoundary) => continue,
        }
    }
    Err(DegreeError::NoRegularValue)
}

enum CountFailure {
    NearBoundary,
}

fn permutations(j: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..j).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == items.len() {
            let mut inv = 0;
            for i in 0..items.len() {
                for l in i + 1..items.len() {
                    if items[i] > items[l] {
                        inv += 1;
                    }
                }
            }
            out.push((items.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out
}

fn count_signed_preimages(
    samples: &TorusSamples,
    axis_perms: &[(Vec<usize>, i64)],
    target: &[f64],
) -> Result<i64, CountFailure> {
    let j = samples.j;
    let grid = samples.grid;
    let total = grid.pow(j as u32);
    let ncorners = 1usize << j;

    let mut total_deg = 0i64;
    let mut coords = vec![0usize; j];
    let mut corner = vec![0usize; j];
    let mut lifted = vec![vec![0.0f64; j]; ncorners];

    for flat in 0..total {
        unrank(flat, grid, &mut coords);
        // lift the cell corners continuously, adding axes one at a time
        for mask in 0..ncorners {
            if mask == 0 {
                lifted[0].copy_from_slice(samples.at(&coords));
                continue;
            }
            let axis = mask.trailing_zeros() as usize;
            let prev = mask ^ (1 << axis);
            for (c, v) in corner.iter_mut().enumerate() {
                *v = (coords[c] + ((mask >> c) & 1)) % grid;
            }
            let raw = samples.at(&corner).to_vec();
            for c in 0..j {
                let base = lifted[prev][c];
                lifted[mask][c] = base + wrap_signed(raw[c] - base);
            }
        }

        for (perm, perm_sign) in axis_perms {
            // simplex vertices: cumulative corner masks along the axis path
            let mut masks = Vec::with_capacity(j + 1);
            let mut m = 0usize;
            masks.push(0usize);
            for &axis in perm {
                m |= 1 << axis;
                masks.push(m);
            }
            let w0 = &lifted[masks[0]];
            // columns of the affine map
            let mut w = vec![vec![0.0f64; j]; j];
            for t in 1..=j {
                for c in 0..j {
                    w[t - 1][c] = lifted[masks[t]][c] - w0[c];
                }
            }
            // bounding box over the simplex vertices
            let mut lo = w0.clone();
            let mut hi = w0.clone();
            for t in 1..=j {
                for c in 0..j {
                    lo[c] = lo[c].min(lifted[masks[t]][c]);
                    hi[c] = hi[c].max(lifted[masks[t]][c]);
                }
            }
            // integer translates of the target inside the inflated box;
            // empty ranges skip the simplex entirely
            let ranges: Vec<(i64, i64)> = (0..j)
                .map(|c| {
                    let lo_m = (lo[c] - target[c] - 1e-7).ceil() as i64;
                    let hi_m = (hi[c] - target[c] + 1e-7).floor() as i64;
                    (lo_m, hi_m)
                })
                .collect();
            if ranges.iter().any(|&(l, h)| l > h) {
                continue;
            }
            let mut translate = vec![0i64; j];
            enumerate_translates(&ranges, &mut translate, 0, &mut |m| {
                let y: Vec<f64> = (0..j).map(|c| target[c] + m[c] as f64 - w0[c]).collect();
                match solve_barycentric(&w, &y) {
                    BaryResult::Inside(sign) => {
                        total_deg += sign * perm_sign;
                        Ok(())
                    }
                    BaryResult::Outside => Ok(()),
                    BaryResult::NearBoundary => Err(CountFailure::NearBoundary),
                }
            })?;
        }
    }
    Ok(total_deg)
}

fn enumerate_translates(
    ranges: &[(i64, i64)],
    translate: &mut Vec<i64>,
    axis: usize,
    f: &mut impl FnMut(&[i64]) -> Result<(), CountFailure>,
) -> Result<(), CountFailure> {
    if axis == ranges.len() {
        return f(translate);
    }
    for m in ranges[axis].0..=ranges[axis].1 {
        translate[axis] = m;
        enumerate_translates(ranges, translate, axis + 1, f)?;
    }
    Ok(())
}

enum BaryResult {
    Inside(i64),
    Outside,
    NearBoundary,
}

/// Solve `W lambda = y` for the barycentric coordinates of the target in
/// the simplex spanned by the columns of `W`, and classify the location.
fn solve_barycentric(w: &[Vec<f64>], y: &[f64]) -> BaryResult {
    let j = y.len();
    let tol = 1e-9;
    // Gaussian elimination with partial pivoting on the augmented system
    let mut a: Vec<Vec<f64>> = (0..j)
        .map(|r| {
            let mut row: Vec<f64> = (0..j).map(|c| w[c][r]).collect();
            row.push(y[r]);
            row
        })
        .collect();
    let mut sign = 1i64;
    let mut det = 1.0f64;
    for k in 0..j {
        let (p, pv) = (k..j)
            .map(|r| (r, a[r][k].abs()))
            .max_by(|x, z| x.1.total_cmp(&z.1))
            .unwrap();
        if pv < 1e-12 {
            // flat simplex: treat a target inside the box as ambiguous
            return BaryResult::NearBoundary;
        }
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        det *= a[k][k];
        for r in k + 1..j {
            let f = a[r][k] / a[k][k];
            for c in k..=j {
                a[r][c] -= f * a[k][c];
            }
        }
    }
    let mut lambda = vec![0.0f64; j];
    for k in (0..j).rev() {
        let mut v = a[k][j];
        for c in k + 1..j {
            v -= a[k][c] * lambda[c];
        }
        lambda[k] = v / a[k][k];
    }
    let sum: f64 = lambda.iter().sum();
    let min = lambda.iter().fold(f64::INFINITY, |m, &v| m.min(v));
    if min > tol && sum < 1.0 - tol {
        let s = if det > 0.0 { 1 } else { -1 };
        return BaryResult::Inside(s * sign.signum());
    }
    if min < -tol || sum > 1.0 + tol {
        return BaryResult::Outside;
    }
    BaryResult::NearBoundary
}

/// The `q_n` family as a map from `n - 1` angles to configurations.
pub fn qn_family(n: usize) -> impl Fn(&[f64]) -> DiskConfig {
    move |angles: &[f64]| {
        assert_eq!(angles.len(), n - 1);
        build_qn(angles)
    }
}

/// Relabel a configuration family by a permutation: disk `v` of the output
/// is disk `sigma^{-1}(v)` of the input.
pub fn permuted_family(
    sigma: &Permutation,
    family: impl Fn(&[f64]) -> DiskConfig,
) -> impl Fn(&[f64]) -> DiskConfig {
    let inv = sigma.inverse();
    move |angles: &[f64]| {
        let base = family(angles);
        let centers = (1..=base.n())
            .map(|v| base.centers[inv.apply(v) - 1])
            .collect();
        DiskConfig::new(centers, base.radius)
    }
}

/// Degree of the composition `alpha_G . config_map` on the j-torus, where
/// `j` is the edge count of `G`.
///
/// The configuration map must be continuous at the grid scale: adjacent
/// samples may move each center by less than half the minimum pairwise
/// center gap, which keeps every edge direction within a quarter turn per
/// step and makes the lift unambiguous.
pub fn numeric_degree_oracle(
    config_map: &dyn Fn(&[f64]) -> DiskConfig,
    forest: &OrderedForest,
    grid: usize,
) -> Result<i64, DegreeError> {
    let j = forest.edge_count();
    if j == 0 || j > 4 {
        return Err(DegreeError::DimensionTooLarge(j));
    }
    let total = grid.pow(j as u32);
    let mut configs: Vec<DiskConfig> = Vec::with_capacity(total);
    let mut coords = vec![0usize; j];
    for flat in 0..total {
        unrank(flat, grid, &mut coords);
        let theta: Vec<f64> = coords.iter().map(|&c| c as f64 / grid as f64).collect();
        let cfg = config_map(&theta);
        if forest.n() != cfg.n() {
            return Err(DegreeError::DimensionMismatch(forest.n(), cfg.n()));
        }
        configs.push(cfg);
    }

    let min_gap = |cfg: &DiskConfig| -> f64 {
        let mut g = f64::INFINITY;
        for i in 0..cfg.n() {
            for l in i + 1..cfg.n() {
                g = g.min(cfg.centers[i].dist(cfg.centers[l]));
            }
        }
        g
    };

    let mut nb = vec![0usize; j];
    for flat in 0..total {
        unrank(flat, grid, &mut coords);
        let a = &configs[flat];
        for axis in 0..j {
            nb.copy_from_slice(&coords);
            nb[axis] = (nb[axis] + 1) % grid;
            let b = &configs[rank(&nb, grid)];
            let movement = a
                .centers
                .iter()
                .zip(&b.centers)
                .map(|(p, q)| p.dist(*q))
                .fold(0.0f64, f64::max);
            let gap = min_gap(a).min(min_gap(b));
            if movement >= 0.5 * gap {
                return Err(DegreeError::ResolutionInsufficient(format!(
                    "centers move {movement:.4} but half the minimum gap is {:.4}",
                    0.5 * gap
                )));
            }
        }
    }

    let values: Vec<Vec<f64>> = configs
        .iter()
        .map(|cfg| {
            forest
                .edges()
                .iter()
                .map(|&(i, l)| (cfg.centers[l - 1] - cfg.centers[i - 1]).angle_turns())
                .collect()
        })
        .collect();
    let samples = TorusSamples { j, grid, values };
    torus_map_degree(&samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forests::enumerate_forests;
    use crate::pairing::{pairing_forest_qn, perms_fixing_first};

    #[test]
    fn identity_map_has_degree_one() {
        for j in 1..=3 {
            let samples = TorusSamples::from_fn(j, 8, |theta| theta.to_vec());
            assert_eq!(torus_map_degree(&samples).unwrap(), 1, "j={j}");
        }
    }

    #[test]
    fn linear_maps_have_determinant_degree() {
        // theta -> 2 theta on the circle
        let samples = TorusSamples::from_fn(1, 32, |t| vec![wrap_unit(2.0 * t[0])]);
        assert_eq!(torus_map_degree(&samples).unwrap(), 2);

        // coordinate swap on T^2: degree -1
        let samples = TorusSamples::from_fn(2, 16, |t| vec![t[1], t[0]]);
        assert_eq!(torus_map_degree(&samples).unwrap(), -1);

        // integer matrix [[1,1],[0,1]] has determinant 1
        let samples = TorusSamples::from_fn(2, 16, |t| vec![wrap_unit(t[0] + t[1]), t[1]]);
        assert_eq!(torus_map_degree(&samples).unwrap(), 1);

        // reflection in one coordinate of T^3: degree -1
        let samples = TorusSamples::from_fn(3, 8, |t| vec![wrap_unit(-t[0]), t[1], t[2]]);
        assert_eq!(torus_map_degree(&samples).unwrap(), -1);
    }

    #[test]
    fn constant_map_has_degree_zero() {
        let samples = TorusSamples::from_fn(2, 8, |_| vec![0.123, 0.456]);
        assert_eq!(torus_map_degree(&samples).unwrap(), 0);
    }

    #[test]
    fn insufficient_resolution_is_reported() {
        // theta -> 5 theta moves more than a quarter turn per step on an
        // 8-point grid
        let samples = TorusSamples::from_fn(1, 8, |t| vec![wrap_unit(5.0 * t[0])]);
        assert!(matches!(
            torus_map_degree(&samples),
            Err(DegreeError::ResolutionInsufficient(_))
        ));
    }

    #[test]
    fn oracle_on_q3_identity() {
        let forest = OrderedForest::new(3, vec![(1, 2), (1, 3)]).unwrap();
        let family = qn_family(3);
        let deg = numeric_degree_oracle(&family, &forest, 24).unwrap();
        assert_eq!(deg, 1);
    }

    #[test]
    fn oracle_constant_family_zero() {
        let forest = OrderedForest::new(3, vec![(1, 2), (1, 3)]).unwrap();
        let cfg = build_qn(&[0.1, 0.7]);
        let family = move |_angles: &[f64]| cfg.clone();
        assert_eq!(numeric_degree_oracle(&family, &forest, 12).unwrap(), 0);
    }

    #[test]
    fn oracle_agrees_with_pairing_n3() {
        let family = qn_family(3);
        for g in enumerate_forests(3, 2).unwrap() {
            for s in perms_fixing_first(3) {
                let expected = pairing_forest_qn(&g, &s).unwrap();
                let permuted = permuted_family(&s, &family);
                let got = numeric_degree_oracle(&permuted, &g, 24).unwrap();
                assert_eq!(got, expected, "G={g} sigma={s}");
            }
        }
    }
}
