//! Exact integer linear algebra: fraction-free (Bareiss) elimination for
//! ranks and determinants, and an exact rational solver.
//!
//! Rank computations on the small kernel-ladder matrices run over `i128`;
//! determinants of the dual-basis matrices (up to 120 x 120) use `BigInt`
//! so intermediate minors cannot overflow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix via fraction-free Gaussian elimination.
///
/// Entries must stay within `i128` during elimination; intermediate values
/// are minors of the input, which is comfortable for the small +-1 matrices
/// this crate produces.
pub fn rank_i128(rows: &[Vec<i128>]) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut rank = 0;
    let mut prev: i128 = 1;
    let mut col = 0;
    while rank < m && col < n {
        let pivot = (rank..m).find(|&r| a[r][col] != 0);
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..m {
            for c in col + 1..n {
                let v = a[rank][col]
                    .checked_mul(a[r][c])
                    .and_then(|x| a[r][col].checked_mul(a[rank][c]).map(|y| (x, y)))
                    .map(|(x, y)| x - y)
                    .expect("i128 overflow in fraction-free elimination");
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        col += 1;
    }
    rank
}

/// Exact determinant of a square integer matrix (Bareiss elimination).
pub fn det_bigint(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let v = &a[k][k] * &a[r][c] - &a[r][k] * &a[k][c];
                a[r][c] = v / &prev;
            }
            a[r][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Solve `A x = b` exactly over the rationals. Returns `None` when `A` is
/// singular. `A` is square with integer entries.
pub fn solve_rational(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            assert_eq!(row.len(), n);
            row.iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .chain(std::iter::once(BigRational::from(BigInt::from(bi))))
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, p);
        let inv = m[k][k].clone();
        for c in k..=n {
            m[k][c] = &m[k][c] / &inv;
        }
        for r in 0..n {
            if r != k && !m[r][k].is_zero() {
                let f = m[r][k].clone();
                for c in k..=n {
                    m[r][c] = &m[r][c] - &f * &m[k][c];
                }
            }
        }
    }
    Some((0..n).map(|r| m[r][n].clone()).collect())
}

/// Exact rational solution known to be integral; panics if it is not.
pub fn solve_integral(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigInt>> {
    let x = solve_rational(a, b)?;
    Some(
        x.into_iter()
            .map(|v| {
                assert!(v.is_integer(), "solution expected to be integral");
                v.to_integer()
            })
            .collect(),
    )
}

/// Convenience: |det| == 1.
pub fn is_unimodular(rows: &[Vec<i64>]) -> bool {
    det_bigint(rows).abs() == BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_known_matrices() {
        assert_eq!(rank_i128(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_i128(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]), 2);
        assert_eq!(rank_i128(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_i128(&[vec![1, -1], vec![1, 0], vec![0, 1]]), 2);
    }

    #[test]
    fn det_matches_cofactor_expansion_oracle() {
        // Oracle: naive cofactor expansion, independent of Bareiss.
        fn naive_det(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 1 {
                return m[0][0];
            }
            let mut acc = 0i64;
            for j in 0..n {
                let minor: Vec<Vec<i64>> = (1..n)
                    .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                acc += s * m[0][j] * naive_det(&minor);
            }
            acc
        }

        let mats: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![2, 1], vec![7, 4]],
            vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]],
            vec![
                vec![0, 1, 1, -1],
                vec![1, 0, -1, 1],
                vec![1, 1, 0, 0],
                vec![-1, 0, 1, 1],
            ],
        ];
        for m in mats {
            assert_eq!(det_bigint(&m), BigInt::from(naive_det(&m)));
        }
    }

    #[test]
    fn solve_recovers_known_solution() {
        let a = vec![vec![1, -1], vec![1, 0]];
        let b = vec![1, 0];
        let x = solve_integral(&a, &b).unwrap();
        assert_eq!(x, vec![BigInt::from(0), BigInt::from(-1)]);
    }

    #[test]
    fn singular_solve_is_none() {
        let a = vec![vec![1, 1], vec![2, 2]];
        assert!(solve_rational(&a, &[1, 2]).is_none());
    }
}
