//! Multistart search for balanced configurations at a fixed radius.
//!
//! Each trial resolves overlaps from a random start, greedily acquires
//! contacts (projecting onto the exact contact equations), then runs a
//! damped Gauss-Newton solve on the joint system {contacts hold,
//! equilibrium with free weights holds}. Converged candidates are passed
//! through the independent `contact_graph` + `is_balanced` verification;
//! absence of hits is evidence, not proof.

use super::{contact_graph, is_balanced, BalanceResult, StressGraph};
use crate::geometry::DiskConfig;
use crate::plane::Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Clone, Debug)]
pub struct SearchSettings {
    pub seed: u64,
    /// Contact tolerance used by the final verification.
    pub contact_tol: f64,
    /// Slack below which a constraint is a candidate for acquisition,
    /// as a multiple of the radius.
    pub capture_fraction: f64,
}

impl Default for SearchSettings {
    fn default() -> Self {
        SearchSettings {
            seed: 0,
            contact_tol: 1e-6,
            capture_fraction: 0.6,
        }
    }
}

/// A verified balanced configuration.
#[derive(Clone, Debug)]
pub struct BalancedHit {
    pub config: DiskConfig,
    pub result: BalanceResult,
    pub trial: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Constraint {
    /// `|x_i - x_j| = 2r`
    Pair(usize, usize),
    /// `|x_i| = 1 - r`
    Boundary(usize),
}

fn constraint_value(c: Constraint, x: &[Point], r: f64) -> f64 {
    match c {
        Constraint::Pair(i, j) => x[i].dist(x[j]) - 2.0 * r,
        Constraint::Boundary(i) => x[i].norm() - (1.0 - r),
    }
}

fn constraint_grad(c: Constraint, x: &[Point], grad: &mut [Point]) {
    for g in grad.iter_mut() {
        *g = Point::new(0.0, 0.0);
    }
    match c {
        Constraint::Pair(i, j) => {
            let d = x[i] - x[j];
            let n = d.norm().max(1e-12);
            grad[i] = d * (1.0 / n);
            grad[j] = d * (-1.0 / n);
        }
        Constraint::Boundary(i) => {
            let n = x[i].norm().max(1e-12);
            grad[i] = x[i] * (1.0 / n);
        }
    }
}

/// Least-norm Newton projection onto `{g_c(x) = 0 for c in active}`.
fn project_onto_contacts(x: &mut Vec<Point>, active: &[Constraint], r: f64, iters: usize) -> bool {
    let n = x.len();
    let m = active.len();
    if m == 0 {
        return true;
    }
    let mut grad = vec![Point::new(0.0, 0.0); n];
    for _ in 0..iters {
        let g: Vec<f64> = active.iter().map(|&c| constraint_value(c, x, r)).collect();
        if g.iter().all(|v| v.abs() < 1e-12) {
            return true;
        }
        // J: m x 2n; solve J J^T lam = -g, step = J^T lam
        let mut jac = vec![vec![0.0f64; 2 * n]; m];
        for (row, &c) in active.iter().enumerate() {
            constraint_grad(c, x, &mut grad);
            for v in 0..n {
                jac[row][2 * v] = grad[v].x;
                jac[row][2 * v + 1] = grad[v].y;
            }
        }
        let mut jjt = vec![vec![0.0f64; m]; m];
        for a in 0..m {
            for b in 0..m {
                jjt[a][b] = (0..2 * n).map(|k| jac[a][k] * jac[b][k]).sum();
            }
            jjt[a][a] += 1e-12;
        }
        let Some(lam) = solve_dense(&jjt, &g.iter().map(|v| -v).collect::<Vec<_>>()) else {
            return false;
        };
        for v in 0..n {
            let dx: f64 = (0..m).map(|a| jac[a][2 * v] * lam[a]).sum();
            let dy: f64 = (0..m).map(|a| jac[a][2 * v + 1] * lam[a]).sum();
            x[v] = x[v] + Point::new(dx, dy);
        }
    }
    active
        .iter()
        .all(|&c| constraint_value(c, x, r).abs() < 1e-10)
}

fn solve_dense(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for k in 0..n {
        let (p, pv) = (k..n)
            .map(|r| (r, m[r][k].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if pv < 1e-14 {
            return None;
        }
        m.swap(p, k);
        for r in k + 1..n {
            let f = m[r][k] / m[k][k];
            for c in k..=n {
                m[r][c] -= f * m[k][c];
            }
        }
    }
    let mut x = vec![0.0f64; n];
    for k in (0..n).rev() {
        let mut v = m[k][n];
        for c in k + 1..n {
            v -= m[k][c] * x[c];
        }
        x[k] = v / m[k][k];
    }
    Some(x)
}

fn min_slack(x: &[Point], r: f64, skip: &HashSet<Constraint>) -> f64 {
    let mut worst = f64::INFINITY;
    for i in 0..x.len() {
        if !skip.contains(&Constraint::Boundary(i)) {
            worst = worst.min((1.0 - r) - x[i].norm());
        }
        for j in i + 1..x.len() {
            if !skip.contains(&Constraint::Pair(i, j)) {
                worst = worst.min(x[i].dist(x[j]) - 2.0 * r);
            }
        }
    }
    worst
}

/// Push-apart overlap resolution with graduated inflation: resolve at a
/// growing radius so tight packings settle instead of jamming. Returns
/// true when a valid configuration at the full radius was reached.
fn resolve_overlaps(x: &mut [Point], r: f64, rng: &mut ChaCha8Rng) -> bool {
    for stage in [0.7, 0.85, 0.95, 0.99, 1.0] {
        let rs = stage * r;
        for _ in 0..150 {
            let mut moved = false;
            for i in 0..x.len() {
                let norm = x[i].norm();
                if norm > 1.0 - rs {
                    let scale = (1.0 - rs) / norm.max(1e-12);
                    x[i] = x[i] * scale;
                    moved = true;
                }
            }
            for i in 0..x.len() {
                for j in i + 1..x.len() {
                    let mut d = x[j] - x[i];
                    let mut dist = d.norm();
                    if dist < 1e-9 {
                        d = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                        dist = d.norm();
                    }
                    if dist < 2.0 * rs {
                        let push = d * ((2.0 * rs - dist) / dist * 0.5 + 1e-12);
                        x[i] = x[i] - push;
                        x[j] = x[j] + push;
                        moved = true;
                    }
                }
            }
            if !moved {
                break;
            }
        }
    }
    let skip = HashSet::new();
    min_slack(x, r, &skip) > -1e-9
}

/// Acquire contacts greedily: repeatedly project the closest remaining
/// constraint to equality while keeping the configuration valid.
fn acquire_contacts(x: &mut Vec<Point>, r: f64, capture: f64) -> Vec<Constraint> {
    let n = x.len();
    let mut active: Vec<Constraint> = Vec::new();
    let mut failed: HashSet<Constraint> = HashSet::new();
    for _round in 0..3 * n {
        // candidate constraints sorted by slack
        let mut cands: Vec<(f64, Constraint)> = Vec::new();
        for i in 0..n {
            let c = Constraint::Boundary(i);
            if !active.contains(&c) && !failed.contains(&c) {
                let s = (1.0 - r) - x[i].norm();
                if s <= capture {
                    cands.push((s, c));
                }
            }
            for j in i + 1..n {
                let c = Constraint::Pair(i, j);
                if !active.contains(&c) && !failed.contains(&c) {
                    let s = x[i].dist(x[j]) - 2.0 * r;
                    if s <= capture {
                        cands.push((s, c));
                    }
                }
            }
        }
        cands.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut committed = false;
        for (_, cand) in cands {
            let mut trial = x.clone();
            let mut attempt = active.clone();
            attempt.push(cand);
            let inactive: HashSet<Constraint> = attempt.iter().cloned().collect();
            if project_onto_contacts(&mut trial, &attempt, r, 40)
                && min_slack(&trial, r, &inactive) > -1e-8
            {
                *x = trial;
                active = attempt;
                committed = true;
                failed.clear();
                break;
            }
            failed.insert(cand);
        }
        if !committed {
            break;
        }
    }
    active
}

/// Joint residual: contacts plus equilibrium of the active-set stress
/// graph with free weights; variables are the centers and the weights.
fn joint_residual(x: &[Point], w: &[f64], active: &[Constraint], r: f64) -> Vec<f64> {
    let n = x.len();
    let mut res: Vec<f64> = active.iter().map(|&c| constraint_value(c, x, r)).collect();

    // forces at each touched vertex
    let mut force = vec![Point::new(0.0, 0.0); n];
    let mut touched = vec![false; n];
    for (e, &c) in active.iter().enumerate() {
        match c {
            Constraint::Pair(i, j) => {
                let d = x[i] - x[j];
                let u = d * (1.0 / d.norm().max(1e-12));
                force[i] = force[i] + u * w[e];
                force[j] = force[j] - u * w[e];
                touched[i] = true;
                touched[j] = true;
            }
            Constraint::Boundary(i) => {
                let u = x[i] * (-1.0 / x[i].norm().max(1e-12));
                force[i] = force[i] + u * w[e];
                touched[i] = true;
            }
        }
    }
    for v in 0..n {
        if touched[v] {
            res.push(force[v].x);
            res.push(force[v].y);
        }
    }

    // per-component boundary sums
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        if p[v] != v {
            let r = find(p, p[v]);
            p[v] = r;
        }
        p[v]
    }
    for &c in active {
        if let Constraint::Pair(i, j) = c {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut comp_force: std::collections::BTreeMap<usize, Point> = Default::default();
    for (e, &c) in active.iter().enumerate() {
        if let Constraint::Boundary(i) = c {
            let root = find(&mut parent, i);
            let y = x[i] * (1.0 / x[i].norm().max(1e-12));
            let entry = comp_force.entry(root).or_insert(Point::new(0.0, 0.0));
            *entry = *entry + y * w[e];
        }
    }
    for (_, f) in comp_force {
        res.push(f.x);
        res.push(f.y);
    }

    // soft floor keeping weights near or above 1
    for &wi in w {
        res.push(0.05 * (wi - 1.0).min(0.0));
    }
    res
}

/// Damped Gauss-Newton on the joint contact + equilibrium system.
fn polish_balance(x: &mut Vec<Point>, active: &[Constraint], r: f64) -> bool {
    let n = x.len();
    let ne = active.len();
    if ne == 0 {
        return false;
    }
    let mut w = vec![1.0f64; ne];
    let dims = 2 * n + ne;
    let h = 1e-7;

    for _ in 0..60 {
        let base = joint_residual(x, &w, active, r);
        let m = base.len();
        let err = base.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if err < 1e-11 {
            return true;
        }
        // finite-difference Jacobian
        let mut jac = vec![vec![0.0f64; dims]; m];
        for d in 0..dims {
            let mut x2 = x.clone();
            let mut w2 = w.clone();
            if d < 2 * n {
                let v = d / 2;
                if d % 2 == 0 {
                    x2[v].x += h;
                } else {
                    x2[v].y += h;
                }
            } else {
                w2[d - 2 * n] += h;
            }
            let pert = joint_residual(&x2, &w2, active, r);
            for row in 0..m {
                jac[row][d] = (pert[row] - base[row]) / h;
            }
        }
        // solve (J^T J + lambda I) s = -J^T r
        let mut jtj = vec![vec![0.0f64; dims]; dims];
        let mut jtr = vec![0.0f64; dims];
        for a in 0..dims {
            for b in a..dims {
                let v: f64 = (0..m).map(|row| jac[row][a] * jac[row][b]).sum();
                jtj[a][b] = v;
                jtj[b][a] = v;
            }
            jtr[a] = -(0..m).map(|row| jac[row][a] * base[row]).sum::<f64>();
            jtj[a][a] += 1e-9;
        }
        let Some(step) = solve_dense(&jtj, &jtr) else {
            return false;
        };
        let mut scale = 1.0;
        let base_norm: f64 = base.iter().map(|v| v * v).sum();
        let mut improved = false;
        for _ in 0..8 {
            let mut x2 = x.clone();
            let mut w2 = w.clone();
            for v in 0..n {
                x2[v].x += scale * step[2 * v];
                x2[v].y += scale * step[2 * v + 1];
            }
            for e in 0..ne {
                w2[e] += scale * step[2 * n + e];
            }
            let trial = joint_residual(&x2, &w2, active, r);
            let trial_norm: f64 = trial.iter().map(|v| v * v).sum();
            if trial_norm < base_norm {
                *x = x2;
                w = w2;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        if !improved {
            return false;
        }
    }
    let final_err = joint_residual(x, &w, active, r)
        .iter()
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    final_err < 1e-9
}

/// Random multistart search for balanced configurations of `n` disks at
/// radius `r`. Returns verified hits, deduplicated by their distance
/// profile; an empty list means no balanced configuration was found.
pub fn search_balanced(
    n: usize,
    r: f64,
    trials: usize,
    settings: &SearchSettings,
) -> Vec<BalancedHit> {
    assert!(n >= 2 && r > 0.0);
    let mut hits: Vec<BalancedHit> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();

    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(
            settings
                .seed
                .wrapping_add((trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        );
        let mut x: Vec<Point> = (0..n)
            .map(|_| loop {
                let p = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                if p.norm() <= 1.0 - r {
                    return p;
                }
            })
            .collect();

        // proceed even when resolution jams: the contact projections can
        // still pull a near-miss onto the contact manifold
        let _ = resolve_overlaps(&mut x, r, &mut rng);
        let active = acquire_contacts(&mut x, r, settings.capture_fraction * r);
        if active.is_empty() {
            continue;
        }
        if !polish_balance(&mut x, &active, r) {
            continue;
        }

        // independent verification
        let config = DiskConfig::new(x.clone(), r);
        if !config.is_valid(1e-8) {
            continue;
        }
        let Ok(graph) = contact_graph(&config, settings.contact_tol) else {
            continue;
        };
        if graph.edge_count() == 0 {
            continue;
        }
        let Ok(result) = is_balanced(&graph) else {
            continue;
        };
        if !result.balanced {
            continue;
        }
        if seen.insert(signature(&graph)) {
            hits.push(BalancedHit {
                config,
                result,
                trial,
            });
        }
    }
    hits
}

/// Congruence-invariant signature: quantized sorted pairwise distances
/// plus the contact structure sizes.
fn signature(g: &StressGraph) -> Vec<i64> {
    let mut dists: Vec<f64> = Vec::new();
    for i in 0..g.centers.len() {
        for j in i + 1..g.centers.len() {
            dists.push(g.centers[i].dist(g.centers[j]));
        }
    }
    dists.sort_by(f64::total_cmp);
    let mut sig: Vec<i64> = dists.iter().map(|d| (d / 1e-4).round() as i64).collect();
    sig.push(g.edges.len() as i64);
    sig.push(g.boundary.len() as i64);
    sig
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::{classify_small_radius, Classification};

    #[test]
    fn finds_the_diameter_at_one_third() {
        let hits = search_balanced(3, 1.0 / 3.0, 400, &SearchSettings::default());
        assert!(!hits.is_empty(), "diameter configuration not found");
        let configs: Vec<_> = hits.iter().map(|h| h.config.clone()).collect();
        let classes = classify_small_radius(3, &configs);
        assert!(
            classes
                .iter()
                .any(|c| *c == Classification::Diameter { k: 3 }),
            "no hit classified as the 3-chain diameter: {classes:?}"
        );
    }

    #[test]
    fn finds_the_square_at_critical_radius() {
        let r = 1.0 / (1.0 + std::f64::consts::SQRT_2);
        let hits = search_balanced(4, r, 600, &SearchSettings::default());
        let found_square = hits.iter().any(|h| {
            let g = contact_graph(&h.config, 1e-6).unwrap();
            g.edges.len() == 4 && g.boundary.len() == 4
        });
        assert!(found_square, "square configuration not found");
    }

    #[test]
    fn below_threshold_is_empty() {
        let hits = search_balanced(3, 1.0 / 3.0 - 0.02, 500, &SearchSettings::default());
        assert!(
            hits.is_empty(),
            "phantom balanced configurations below 1/n: {}",
            hits.len()
        );
    }
}
