//! Phase-one simplex for small dense equality systems `A u = b`, `u >= 0`.
//!
//! The equilibrium systems this crate builds have at most a few dozen rows
//! and columns, so a plain dense tableau with Bland's rule is plenty.

const EPS: f64 = 1e-10;

/// Find `u >= 0` with `A u = b`, or `None` when the system is infeasible.
pub fn feasible_point(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    assert!(a.iter().all(|row| row.len() == n));
    assert_eq!(b.len(), m);

    // tableau [A | I | rhs], rows flipped so rhs >= 0; artificial basis
    let cols = n + m;
    let mut t = vec![vec![0.0f64; cols + 1]; m];
    for r in 0..m {
        let flip = if b[r] < 0.0 { -1.0 } else { 1.0 };
        for c in 0..n {
            t[r][c] = flip * a[r][c];
        }
        t[r][n + r] = 1.0;
        t[r][cols] = flip * b[r];
    }
    let mut basis: Vec<usize> = (n..cols).collect();
    let cost = |c: usize| -> f64 {
        if c >= n {
            1.0
        } else {
            0.0
        }
    };

    for _ in 0..20_000 {
        // reduced costs; Bland's rule: smallest eligible column index
        let mut entering = None;
        for c in 0..cols {
            if basis.contains(&c) {
                continue;
            }
            let z: f64 = (0..m).map(|r| cost(basis[r]) * t[r][c]).sum();
            if cost(c) - z < -EPS {
                entering = Some(c);
                break;
            }
        }
        let Some(col) = entering else { break };

        // ratio test; Bland: smallest basis variable among ties
        let mut leave: Option<(usize, f64)> = None;
        for r in 0..m {
            if t[r][col] > EPS {
                let ratio = t[r][cols] / t[r][col];
                let better = match leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < lratio - EPS || (ratio < lratio + EPS && basis[r] < basis[lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            // unbounded in phase one should not happen; treat as failure
            return None;
        };

        // pivot
        let piv = t[row][col];
        for c in 0..=cols {
            t[row][c] /= piv;
        }
        for r in 0..m {
            if r != row && t[r][col].abs() > 0.0 {
                let f = t[r][col];
                for c in 0..=cols {
                    t[r][c] -= f * t[row][c];
                }
            }
        }
        basis[row] = col;
    }

    let objective: f64 = (0..m).map(|r| cost(basis[r]) * t[r][cols]).sum();
    if objective > 1e-8 {
        return None;
    }
    let mut u = vec![0.0f64; n];
    for r in 0..m {
        if basis[r] < n {
            u[basis[r]] = t[r][cols].max(0.0);
        }
    }
    Some(u)
}
