//! Stress graphs of disk configurations and balancedness as linear
//! feasibility.
//!
//! A configuration's stress graph has the centers as internal vertices,
//! boundary vertices where a disk touches the unit circle, and edges at
//! exact contacts (center pairs at distance `2r`, radial boundary edges of
//! length `r`). It is balanced when positive edge weights exist whose
//! outward forces cancel at every internal vertex and whose boundary
//! forces cancel per connected component; by homogeneity the weights can
//! be normalized to `w >= 1`, which turns the question into a phase-one
//! linear program.

mod search;
mod simplex;

pub use search::{search_balanced, BalancedHit, SearchSettings};

use crate::geometry::DiskConfig;
use crate::plane::Point;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BalanceError {
    #[error("radius must be positive")]
    ZeroRadius,
    #[error("stress graph has no edges")]
    NoEdges,
    #[error("not a tree: {0}")]
    NotATree(String),
}

/// Contact graph of a configuration: internal vertices are the centers;
/// boundary vertices sit on the unit circle where a disk touches it.
#[derive(Clone, Debug)]
pub struct StressGraph {
    pub centers: Vec<Point>,
    pub radius: f64,
    /// Internal-internal contact edges, as center index pairs `(i, j)`,
    /// `i < j`, 0-based.
    pub edges: Vec<(usize, usize)>,
    /// Boundary contacts: `(center index, point on the unit circle)`.
    pub boundary: Vec<(usize, Point)>,
    pub contact_tol: f64,
}

impl StressGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len() + self.boundary.len()
    }

    /// Indices of centers that appear in at least one edge.
    pub fn touched(&self) -> Vec<usize> {
        let mut seen = vec![false; self.centers.len()];
        for &(i, j) in &self.edges {
            seen[i] = true;
            seen[j] = true;
        }
        for &(i, _) in &self.boundary {
            seen[i] = true;
        }
        (0..self.centers.len()).filter(|&i| seen[i]).collect()
    }

    /// Connected components over centers, via contact edges only; each
    /// component is a sorted list of center indices. Centers with no edges
    /// are excluded.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.centers.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(i, j) in &self.edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
        let touched = self.touched();
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &v in &touched {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }
}

/// Result of the balance feasibility check.
#[derive(Clone, Debug)]
pub struct BalanceResult {
    pub balanced: bool,
    /// Witness weights (internal edges first, then boundary edges, in the
    /// stress graph's order); all `>= 1` when balanced.
    pub weights: Option<Vec<f64>>,
    /// Maximum equilibrium violation of the witness; infinite when not
    /// balanced.
    pub residual: f64,
}

/// Extract the stress graph of a configuration: center pairs within `tol`
/// of distance `2r` and centers within `tol` of the boundary circle.
pub fn contact_graph(config: &DiskConfig, tol: f64) -> Result<StressGraph, BalanceError> {
    let r = config.radius;
    if r <= 0.0 {
        return Err(BalanceError::ZeroRadius);
    }
    let mut edges = Vec::new();
    for i in 0..config.n() {
        for j in i + 1..config.n() {
            let d = config.centers[i].dist(config.centers[j]);
            if (d - 2.0 * r).abs() <= tol {
                edges.push((i, j));
            }
        }
    }
    let mut boundary = Vec::new();
    for (i, c) in config.centers.iter().enumerate() {
        let norm = c.norm();
        if (norm - (1.0 - r)).abs() <= tol && norm > 1e-12 {
            boundary.push((i, *c * (1.0 / norm)));
        }
    }
    Ok(StressGraph {
        centers: config.centers.clone(),
        radius: r,
        edges,
        boundary,
        contact_tol: tol,
    })
}

/// Assemble the equilibrium system over all edges (internal first, then
/// boundary): two rows per touched internal vertex and two rows per
/// connected component (sum of outward boundary forces).
fn equilibrium_rows(g: &StressGraph) -> (Vec<Vec<f64>>, Vec<usize>) {
    let ne = g.edges.len();
    let nb = g.boundary.len();
    let vars = ne + nb;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let touched = g.touched();

    for &v in &touched {
        let mut rx = vec![0.0; vars];
        let mut ry = vec![0.0; vars];
        for (e, &(i, j)) in g.edges.iter().enumerate() {
            if i == v || j == v {
                let other = if i == v { j } else { i };
                let d = g.centers[v] - g.centers[other];
                let u = d * (1.0 / d.norm());
                rx[e] = u.x;
                ry[e] = u.y;
            }
        }
        for (e, &(i, y)) in g.boundary.iter().enumerate() {
            if i == v {
                // the boundary vertex pushes the center inward
                let d = g.centers[v] - y;
                let u = d * (1.0 / d.norm());
                rx[ne + e] = u.x;
                ry[ne + e] = u.y;
            }
        }
        rows.push(rx);
        rows.push(ry);
    }

    for comp in g.components() {
        let mut rx = vec![0.0; vars];
        let mut ry = vec![0.0; vars];
        for (e, &(i, y)) in g.boundary.iter().enumerate() {
            if comp.contains(&i) {
                // outward radial force at the boundary vertex
                rx[ne + e] = y.x;
                ry[ne + e] = y.y;
            }
        }
        rows.push(rx);
        rows.push(ry);
    }
    (rows, touched)
}

/// Decide balancedness: feasibility of the equilibrium equations with all
/// edge weights at least 1.
pub fn is_balanced(g: &StressGraph) -> Result<BalanceResult, BalanceError> {
    if g.edge_count() == 0 {
        return Err(BalanceError::NoEdges);
    }
    let (rows, _) = equilibrium_rows(g);
    let vars = g.edge_count();
    // substitute w = 1 + u with u >= 0: rows * u = -(rows * 1)
    let b: Vec<f64> = rows.iter().map(|r| -r.iter().sum::<f64>()).collect();
    match simplex::feasible_point(&rows, &b) {
        None => Ok(BalanceResult {
            balanced: false,
            weights: None,
            residual: f64::INFINITY,
        }),
        Some(u) => {
            let w: Vec<f64> = u.iter().map(|&v| 1.0 + v).collect();
            let residual = rows
                .iter()
                .map(|row| row.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>().abs())
                .fold(0.0f64, f64::max);
            let _ = vars;
            Ok(BalanceResult {
                balanced: residual <= 1e-8,
                weights: Some(w),
                residual,
            })
        }
    }
}

/// Evaluate the equilibrium residual of an explicit weight vector.
pub fn residual_of_weights(g: &StressGraph, weights: &[f64]) -> f64 {
    let (rows, _) = equilibrium_rows(g);
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(weights)
                .map(|(a, b)| a * b)
                .sum::<f64>()
                .abs()
        })
        .fold(0.0f64, f64::max)
}

/// Closed ball containing an embedded tree of total edge length `L`, with
/// radius at most `L / 2`, by the constructive leaf-merge induction.
pub fn enclosing_ball_of_tree(
    points: &[Point],
    edges: &[(usize, usize)],
) -> Result<(Point, f64), BalanceError> {
    let n = points.len();
    if n == 0 {
        return Err(BalanceError::NotATree("no vertices".into()));
    }
    if edges.len() != n - 1 {
        return Err(BalanceError::NotATree(format!(
            "{} edges on {} vertices",
            edges.len(),
            n
        )));
    }
    // peel leaves; record the edges in removal order
    let mut degree = vec![0usize; n];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(i, j)) in edges.iter().enumerate() {
        if i >= n || j >= n || i == j {
            return Err(BalanceError::NotATree(format!("bad edge ({i}, {j})")));
        }
        degree[i] += 1;
        degree[j] += 1;
        adj[i].push((j, e));
        adj[j].push((i, e));
    }
    let mut removed_edge = vec![false; edges.len()];
    let mut removed_vertex = vec![false; n];
    let mut order: Vec<(usize, usize)> = Vec::new(); // (leaf, edge)
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed_vertex[v] || degree[v] != 1 {
            continue;
        }
        let Some(&(u, e)) = adj[v]
            .iter()
            .find(|&&(u, e)| !removed_edge[e] && !removed_vertex[u])
        else {
            continue;
        };
        removed_vertex[v] = true;
        removed_edge[e] = true;
        degree[v] -= 1;
        degree[u] -= 1;
        order.push((v, e));
        if degree[u] == 1 {
            stack.push(u);
        }
    }
    if order.len() != edges.len() {
        return Err(BalanceError::NotATree("graph contains a cycle".into()));
    }
    let root = (0..n)
        .find(|&v| !removed_vertex[v])
        .ok_or_else(|| BalanceError::NotATree("disconnected".into()))?;

    // rebuild in reverse: merge each leaf edge's midpoint ball into the
    // ball of the already-attached part, which shares the inner vertex
    let mut center = points[root];
    let mut radius = 0.0f64;
    for &(_, e) in order.iter().rev() {
        let (i, j) = edges[e];
        let mid = (points[i] + points[j]) * 0.5;
        let half = points[i].dist(points[j]) / 2.0;
        let (c2, r2) = (mid, half);
        let d = center.dist(c2);
        if d + r2 <= radius {
            // already inside
        } else if d + radius <= r2 {
            center = c2;
            radius = r2;
        } else {
            let new_r = (d + radius + r2) / 2.0;
            let dir = (c2 - center) * (1.0 / d);
            center = center + dir * (new_r - radius);
            radius = new_r;
        }
    }
    Ok((center, radius))
}

/// Classification of a balanced configuration found at small radius.
#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    /// `r > 3/(2n+3)`: outside the theorem's band.
    AboveThreshold,
    /// `k` disks lined up along a diameter at `r = 1/k`.
    Diameter { k: usize },
    /// A claimed-balanced configuration at small radius that is not a
    /// diameter chain: would contradict the small-radius theorem.
    Violation { reason: String },
}

/// For each balanced configuration with `r <= 3/(2n+3)`, check that it is
/// `k` collinear disks on a diameter at `r = 1/k`; anything else at small
/// radius is flagged loudly.
pub fn classify_small_radius(n: usize, configs: &[DiskConfig]) -> Vec<Classification> {
    let threshold = 3.0 / (2.0 * n as f64 + 3.0);
    configs
        .iter()
        .map(|cfg| classify_one(n, cfg, threshold))
        .collect()
}

fn classify_one(n: usize, cfg: &DiskConfig, threshold: f64) -> Classification {
    let r = cfg.radius;
    let tol = 1e-6;
    if r > threshold + tol {
        return Classification::AboveThreshold;
    }
    let k = (1.0 / r).round() as usize;
    if k == 0 || k > n || (r - 1.0 / k as f64).abs() > 1e-4 {
        return Classification::Violation {
            reason: format!("radius {r} is not 1/k for any k <= {n}"),
        };
    }
    let Ok(graph) = contact_graph(cfg, tol) else {
        return Classification::Violation {
            reason: "invalid configuration".into(),
        };
    };
    let touched = graph.touched();
    if touched.len() != k {
        return Classification::Violation {
            reason: format!(
                "{} disks carry contacts; a diameter chain at r = 1/{k} needs {k}",
                touched.len()
            ),
        };
    }
    // collinear through the origin, spanning the diameter
    let involved: Vec<Point> = touched.iter().map(|&i| cfg.centers[i]).collect();
    let far = involved
        .iter()
        .cloned()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap();
    if far.norm() < 1e-9 && k > 1 {
        return Classification::Violation {
            reason: "contact disks collapse at the origin".into(),
        };
    }
    let dir = if k == 1 {
        Point::new(1.0, 0.0)
    } else {
        far * (1.0 / far.norm())
    };
    let mut coords = Vec::new();
    for p in &involved {
        if p.cross(dir).abs() > 1e-5 {
            return Classification::Violation {
                reason: "contact disks are not collinear through the origin".into(),
            };
        }
        coords.push(p.dot(dir));
    }
    coords.sort_by(f64::total_cmp);
    let expect_end = 1.0 - r;
    if k > 1 && ((coords[0] + expect_end).abs() > 1e-5 || (coords[k - 1] - expect_end).abs() > 1e-5)
    {
        return Classification::Violation {
            reason: "chain does not span the diameter".into(),
        };
    }
    for w in coords.windows(2) {
        if ((w[1] - w[0]) - 2.0 * r).abs() > 1e-5 {
            return Classification::Violation {
                reason: "consecutive chain disks are not tangent".into(),
            };
        }
    }
    Classification::Diameter { k }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{diameter_configuration, square_configuration, DEFAULT_TOL};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn contact_graph_two_disks() {
        let cfg = diameter_configuration(2);
        let g = contact_graph(&cfg, 1e-9).unwrap();
        assert_eq!(g.edges, vec![(0, 1)]);
        assert_eq!(g.boundary.len(), 2);
    }

    #[test]
    fn contact_graph_generic_config_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            // random configuration strictly slacker than its radius
            let centers = vec![
                Point::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)),
                Point::new(rng.gen_range(0.45..0.6), rng.gen_range(0.45..0.6)),
                Point::new(rng.gen_range(-0.6..-0.45), rng.gen_range(0.45..0.6)),
            ];
            let t = crate::geometry::tau(&centers).unwrap();
            let cfg = DiskConfig::new(centers, t * 0.9);
            let g = contact_graph(&cfg, 1e-9).unwrap();
            assert_eq!(g.edge_count(), 0);
        }
    }

    #[test]
    fn contact_graph_square() {
        let cfg = square_configuration();
        let g = contact_graph(&cfg, 1e-9).unwrap();
        assert_eq!(g.edges.len(), 4, "four side contacts, no diagonals");
        assert_eq!(g.boundary.len(), 4);
    }

    #[test]
    fn contact_graph_monotone_in_tol() {
        let cfg = diameter_configuration(3);
        let tight = contact_graph(&cfg, 1e-12).unwrap();
        let loose = contact_graph(&cfg, 1e-3).unwrap();
        for e in &tight.edges {
            assert!(loose.edges.contains(e));
        }
        assert!(loose.boundary.len() >= tight.boundary.len());
    }

    #[test]
    fn zero_radius_rejected() {
        let cfg = DiskConfig::new(vec![Point::new(0.0, 0.0)], 0.0);
        assert_eq!(
            contact_graph(&cfg, 1e-9).unwrap_err(),
            BalanceError::ZeroRadius
        );
    }

    #[test]
    fn diameter_configs_balanced_with_constant_witness() {
        for n in 2..=8 {
            let cfg = diameter_configuration(n);
            assert!(cfg.is_valid(DEFAULT_TOL));
            let g = contact_graph(&cfg, 1e-9).unwrap();
            assert_eq!(g.edges.len(), n - 1);
            assert_eq!(g.boundary.len(), 2);
            let res = is_balanced(&g).unwrap();
            assert!(res.balanced, "n={n}");
            assert!(res.residual <= 1e-8);
            assert!(res.weights.unwrap().iter().all(|&w| w >= 1.0 - 1e-12));
            // the all-ones vector is itself an exact witness
            let ones = vec![1.0; g.edge_count()];
            assert!(residual_of_weights(&g, &ones) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn square_config_balanced() {
        let cfg = square_configuration();
        let g = contact_graph(&cfg, 1e-9).unwrap();
        let res = is_balanced(&g).unwrap();
        assert!(res.balanced);
        assert!(res.residual <= 1e-8);
    }

    #[test]
    fn single_contact_pair_unbalanced() {
        // one internal edge, no boundary vertices: a single outward force
        // cannot vanish
        let cfg = DiskConfig::new(vec![Point::new(-0.1, 0.0), Point::new(0.1, 0.0)], 0.1);
        let g = contact_graph(&cfg, 1e-9).unwrap();
        assert_eq!(g.edges.len(), 1);
        assert!(g.boundary.is_empty());
        let res = is_balanced(&g).unwrap();
        assert!(!res.balanced);
        assert!(res.weights.is_none());
    }

    #[test]
    fn balance_rotation_invariant() {
        for k in 0..12 {
            let t = k as f64 / 12.0;
            let base = diameter_configuration(4);
            let rotated = DiskConfig::new(
                base.centers.iter().map(|c| c.rotate(t)).collect(),
                base.radius,
            );
            let g = contact_graph(&rotated, 1e-9).unwrap();
            assert!(is_balanced(&g).unwrap().balanced, "t={t}");
        }
    }

    #[test]
    fn witness_scaling_preserves_feasibility() {
        let cfg = diameter_configuration(3);
        let g = contact_graph(&cfg, 1e-9).unwrap();
        let res = is_balanced(&g).unwrap();
        let w = res.weights.unwrap();
        for scale in [2.0, 10.0, 0.5] {
            let scaled: Vec<f64> = w.iter().map(|&v| v * scale).collect();
            assert!(residual_of_weights(&g, &scaled) < 1e-7 * scale);
        }
    }

    #[test]
    fn empty_graph_is_an_error() {
        let cfg = DiskConfig::new(vec![Point::new(0.0, 0.0)], 0.2);
        let g = contact_graph(&cfg, 1e-9).unwrap();
        assert_eq!(is_balanced(&g).unwrap_err(), BalanceError::NoEdges);
    }

    #[test]
    fn enclosing_ball_base_cases() {
        let (c, r) = enclosing_ball_of_tree(&[Point::new(0.3, 0.4)], &[]).unwrap();
        assert_eq!(r, 0.0);
        assert_eq!(c, Point::new(0.3, 0.4));

        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
        let (c, r) = enclosing_ball_of_tree(&pts, &[(0, 1)]).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
        assert!(c.dist(Point::new(0.5, 0.0)) < 1e-12);
    }

    #[test]
    fn enclosing_ball_random_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let n = rng.gen_range(2..=11);
            let pts: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                .collect();
            // random tree: attach each vertex to an earlier one
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let total: f64 = edges.iter().map(|&(i, j)| pts[i].dist(pts[j])).sum();
            let (c, r) = enclosing_ball_of_tree(&pts, &edges).unwrap();
            assert!(r <= total / 2.0 + 1e-9, "radius bound violated");
            for p in &pts {
                assert!(c.dist(*p) <= r + 1e-9, "vertex escapes the ball");
            }
        }
    }

    #[test]
    fn enclosing_ball_rejects_non_trees() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ];
        assert!(enclosing_ball_of_tree(&pts, &[(0, 1)]).is_err());
        assert!(enclosing_ball_of_tree(&pts, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn classification_reports() {
        // genuine diameter chain: classified as such
        let diam = diameter_configuration(4);
        let out = classify_small_radius(4, &[diam]);
        assert_eq!(out, vec![Classification::Diameter { k: 4 }]);

        // the square at r ~ 0.414 > 3/11 is outside the band
        let out = classify_small_radius(4, &[square_configuration()]);
        assert_eq!(out, vec![Classification::AboveThreshold]);

        // negative control: a synthetic non-diameter config injected at
        // r = 0.2 must be flagged
        let fake = DiskConfig::new(
            vec![
                Point::new(-0.4, 0.0),
                Point::new(0.0, 0.0),
                Point::new(0.4, 0.0),
                Point::new(0.0, 0.5),
            ],
            0.2,
        );
        let out = classify_small_radius(4, &[fake]);
        assert!(matches!(out[0], Classification::Violation { .. }));
    }
}
