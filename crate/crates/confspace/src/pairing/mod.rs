//! Integer pairings between torus homology classes and ordered-forest
//! cohomology classes.
//!
//! The homology classes come from the recursive disk maps `q_n` composed
//! with label permutations fixing 1. The pairing of an `(n-1)`-edge forest
//! `G` with `sigma . q_n` is `sign(sigma)` when the relabeled graph
//! `sigma(G)` is again an ordered forest and `0` otherwise; assembling all
//! pairings gives a unimodular matrix whose inverse encodes the dual basis.

mod degree;

pub use degree::{
    numeric_degree_oracle, permuted_family, qn_family, torus_map_degree, DegreeError, TorusSamples,
};

use crate::exact::{det_bigint, solve_integral};
use crate::forests::{enumerate_forests, OrderedForest};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairingError {
    #[error("permutation images must be a bijection of 1..n")]
    NotBijective,
    #[error("permutation must fix 1")]
    MustFixOne,
    #[error("forest has {got} edges; expected {expected}")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error("mismatched sizes: forest n = {0}, permutation n = {1}")]
    SizeMismatch(usize, usize),
    #[error("n = {0} too large: the matrix has (n-1)! rows")]
    SizeOverflow(usize),
}

/// Permutation of `{1..n}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PairingError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(PairingError::NotBijective);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn fixes_one(&self) -> bool {
        self.images.first() == Some(&1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Parity: +1 for even, -1 for odd.
    pub fn sign(&self) -> i64 {
        let mut inversions = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Permutations of `{1..n}` with `sigma(1) = 1`, in lexicographic order on
/// image lists.
pub fn perms_fixing_first(n: usize) -> Vec<Permutation> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (2..=n).collect();
    permute_sorted(&mut rest, 0, &mut |tail| {
        let mut images = Vec::with_capacity(n);
        images.push(1);
        images.extend_from_slice(tail);
        out.push(Permutation { images });
    });
    out.sort_by(|a, b| a.images.cmp(&b.images));
    out
}

fn permute_sorted(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_sorted(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Relabel a forest through a permutation: the result has edge `i -> j`
/// whenever the forest has edge `sigma(i) -> sigma(j)`. Edges are returned
/// in the forest's terminal order together with a flag telling whether the
/// result is itself an ordered forest.
pub fn sigma_apply(sigma: &Permutation, forest: &OrderedForest) -> (Vec<(usize, usize)>, bool) {
    let inv = sigma.inverse();
    let edges: Vec<(usize, usize)> = forest
        .edges()
        .iter()
        .map(|&(a, b)| (inv.apply(a), inv.apply(b)))
        .collect();
    let increasing = edges.iter().all(|&(i, j)| i < j);
    let mut terminals: Vec<usize> = edges.iter().map(|&(_, j)| j).collect();
    terminals.sort_unstable();
    let distinct = terminals.windows(2).all(|w| w[0] != w[1]);
    (edges, increasing && distinct)
}

/// Pairing of an `(n-1)`-edge forest with the homology class
/// `sigma . q_n`: `sign(sigma)` when `sigma(G)` is an ordered forest,
/// otherwise 0.
pub fn pairing_forest_qn(forest: &OrderedForest, sigma: &Permutation) -> Result<i64, PairingError> {
    let n = forest.n();
    if sigma.n() != n {
        return Err(PairingError::SizeMismatch(n, sigma.n()));
    }
    if forest.edge_count() != n - 1 {
        return Err(PairingError::WrongEdgeCount {
            expected: n - 1,
            got: forest.edge_count(),
        });
    }
    if !sigma.fixes_one() {
        return Err(PairingError::MustFixOne);
    }
    let (_, ordered) = sigma_apply(sigma, forest);
    Ok(if ordered { sigma.sign() } else { 0 })
}

/// The matrix of pairings over all `(n-1)`-edge forests (rows) and all
/// permutations fixing 1 (columns), both in canonical order.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub n: usize,
    pub forests: Vec<OrderedForest>,
    pub perms: Vec<Permutation>,
    pub entries: Vec<Vec<i64>>,
}

impl PairingMatrix {
    pub fn size(&self) -> usize {
        self.forests.len()
    }

    pub fn det(&self) -> BigInt {
        det_bigint(&self.entries)
    }
}

pub fn dual_basis_matrix(n: usize) -> Result<PairingMatrix, PairingError> {
    if n < 2 {
        return Err(PairingError::SizeOverflow(n));
    }
    // (n-1)! columns; n = 9 would need a 40320 x 40320 table
    if n > 8 {
        return Err(PairingError::SizeOverflow(n));
    }
    let forests = enumerate_forests(n, n - 1).expect("valid enumeration");
    let perms = perms_fixing_first(n);
    let entries: Vec<Vec<i64>> = forests
        .iter()
        .map(|g| {
            perms
                .iter()
                .map(|s| pairing_forest_qn(g, s).expect("validated inputs"))
                .collect()
        })
        .collect();
    Ok(PairingMatrix {
        n,
        forests,
        perms,
        entries,
    })
}

/// Extend `sigma` in `S_{n-1}` to `sigma^(l)` in `S_n` for `2 <= l <= n`:
/// images below `l` stay, images at or above `l` shift up by one, and the
/// new element `n` maps to `l`.
pub fn sigma_extend(sigma: &Permutation, l: usize) -> Permutation {
    let n = sigma.n() + 1;
    assert!((2..=n).contains(&l));
    let mut images: Vec<usize> = sigma
        .images
        .iter()
        .map(|&v| if v < l { v } else { v + 1 })
        .collect();
    images.push(l);
    Permutation { images }
}

/// Coefficients of the dual basis element `G*` in the signed basis
/// `{ sign(sigma) . (sigma . q_n) }`, computed by the recursion over the
/// parent edge of the top vertex: adding the edge `k -> n` turns the
/// expansion for the smaller tree into a two-term combination (one term
/// when `k = 1`).
pub fn dual_expansion(forest: &OrderedForest) -> Result<BTreeMap<Permutation, i64>, PairingError> {
    let raw = dual_expansion_rec(forest)?;
    // The recursion builds permutations in the source convention where
    // sigma acts on graphs; composing with q_n uses the inverse action, so
    // the coefficients transfer to the inverse keys (signs are unchanged).
    Ok(raw.into_iter().map(|(s, a)| (s.inverse(), a)).collect())
}

fn dual_expansion_rec(forest: &OrderedForest) -> Result<BTreeMap<Permutation, i64>, PairingError> {
    let n = forest.n();
    if forest.edge_count() != n.saturating_sub(1) {
        return Err(PairingError::WrongEdgeCount {
            expected: n - 1,
            got: forest.edge_count(),
        });
    }
    if n <= 2 {
        let mut out = BTreeMap::new();
        out.insert(Permutation::identity(n), 1);
        return Ok(out);
    }
    // the top vertex n has in-degree exactly 1; its edge is last in
    // terminal order
    let &(k, top) = forest.edges().last().expect("n >= 2 has edges");
    debug_assert_eq!(top, n);
    let rest: Vec<(usize, usize)> = forest.edges()[..n - 2].to_vec();
    let smaller = OrderedForest::new(n - 1, rest).expect("subtree is a forest");
    let prev = dual_expansion_rec(&smaller)?;

    let mut out: BTreeMap<Permutation, i64> = BTreeMap::new();
    for (sigma, a) in prev {
        let sk = sigma.apply(k);
        add_coeff(&mut out, sigma_extend(&sigma, sk + 1), a);
        if k > 1 {
            add_coeff(&mut out, sigma_extend(&sigma, sk), -a);
        }
    }
    Ok(out)
}

fn add_coeff(map: &mut BTreeMap<Permutation, i64>, key: Permutation, v: i64) {
    let e = map.entry(key.clone()).or_insert(0);
    *e += v;
    if *e == 0 {
        map.remove(&key);
    }
}

/// Evaluate the pairing of a forest against an expansion in the signed
/// basis. Since `<F, sign(sigma) sigma.q_n> = [sigma(F) is an ordered
/// forest]`, the expansion of `G*` must send `F` to the indicator of
/// `F = G`.
pub fn expansion_pairs_with(forest: &OrderedForest, expansion: &BTreeMap<Permutation, i64>) -> i64 {
    expansion
        .iter()
        .map(|(sigma, &c)| {
            let (_, ordered) = sigma_apply(sigma, forest);
            if ordered {
                c
            } else {
                0
            }
        })
        .sum()
}

/// Solve for the dual-expansion coefficients by exact linear algebra: the
/// oracle route, independent of the recursion.
pub fn dual_expansion_by_solve(
    forest: &OrderedForest,
) -> Result<BTreeMap<Permutation, i64>, PairingError> {
    let n = forest.n();
    let matrix = dual_basis_matrix(n)?;
    let m = matrix.size();
    // rows indexed by forests F: sum_sigma c_sigma [sigma(F) ordered] = [F == G]
    let a: Vec<Vec<i64>> = matrix
        .forests
        .iter()
        .map(|f| {
            matrix
                .perms
                .iter()
                .map(|s| {
                    let (_, ordered) = sigma_apply(s, f);
                    if ordered {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let b: Vec<i64> = matrix
        .forests
        .iter()
        .map(|f| if f == forest { 1 } else { 0 })
        .collect();
    let x = solve_integral(&a, &b).expect("pairing matrix is unimodular");
    let mut out = BTreeMap::new();
    for i in 0..m {
        let v = i64::try_from(&x[i]).expect("small integer coefficients");
        if v != 0 {
            out.insert(matrix.perms[i].clone(), v);
        }
    }
    Ok(out)
}

/// Pairing of a 2-edge forest against the swap homology class for the pair
/// `a -> b` (n = 4): 0 when `a -> b` is not an edge, +1 when it is the
/// second edge in terminal order, -1 when it is the first.
pub fn pairing_hhat(forest: &OrderedForest, a: usize, b: usize) -> i64 {
    assert!(a < b, "need a < b");
    match forest.edges().iter().position(|&e| e == (a, b)) {
        None => 0,
        Some(0) => -1,
        Some(_) => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(n: usize, edges: Vec<(usize, usize)>) -> OrderedForest {
        OrderedForest::new(n, edges).unwrap()
    }

    fn perm(images: Vec<usize>) -> Permutation {
        Permutation::new(images).unwrap()
    }

    #[test]
    fn permutation_basics() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(perm(vec![1, 3, 2]).sign(), -1);
        assert_eq!(perm(vec![1, 3, 4, 2]).sign(), 1);
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        let p = perm(vec![1, 3, 4, 2]);
        let inv = p.inverse();
        for i in 1..=4 {
            assert_eq!(inv.apply(p.apply(i)), i);
        }
    }

    #[test]
    fn perms_fixing_first_counts_and_order() {
        for n in 2..=6 {
            let ps = perms_fixing_first(n);
            let expected: usize = (1..n).product();
            assert_eq!(ps.len(), expected);
            assert!(ps.iter().all(Permutation::fixes_one));
            for w in ps.windows(2) {
                assert!(w[0].images() < w[1].images());
            }
        }
        assert_eq!(perms_fixing_first(3)[0], Permutation::identity(3));
        assert_eq!(perms_fixing_first(3)[1], perm(vec![1, 3, 2]));
    }

    #[test]
    fn sigma_apply_examples() {
        let swap = perm(vec![1, 3, 2]);
        let g = forest(3, vec![(1, 2), (2, 3)]);
        let (edges, ordered) = sigma_apply(&swap, &g);
        assert_eq!(edges, vec![(1, 3), (3, 2)]);
        assert!(!ordered);

        let g = forest(3, vec![(1, 2), (1, 3)]);
        let (edges, ordered) = sigma_apply(&swap, &g);
        assert_eq!(edges, vec![(1, 3), (1, 2)]);
        assert!(ordered);

        let id = Permutation::identity(3);
        let (edges, ordered) = sigma_apply(&id, &g);
        assert_eq!(edges, g.edges().to_vec());
        assert!(ordered);
    }

    #[test]
    fn pairing_examples() {
        // identity pairs to +1 with every spanning forest
        for n in 2..=5 {
            let id = Permutation::identity(n);
            for g in enumerate_forests(n, n - 1).unwrap() {
                assert_eq!(pairing_forest_qn(&g, &id).unwrap(), 1);
            }
        }
        let swap = perm(vec![1, 3, 2]);
        assert_eq!(
            pairing_forest_qn(&forest(3, vec![(1, 2), (2, 3)]), &swap).unwrap(),
            0
        );
        assert_eq!(
            pairing_forest_qn(&forest(3, vec![(1, 2), (1, 3)]), &swap).unwrap(),
            -1
        );
    }

    #[test]
    fn pairing_rejects_bad_inputs() {
        let g = forest(3, vec![(1, 2), (1, 3)]);
        assert_eq!(
            pairing_forest_qn(&g, &perm(vec![2, 1, 3])).unwrap_err(),
            PairingError::MustFixOne
        );
        assert_eq!(
            pairing_forest_qn(&g, &Permutation::identity(4)).unwrap_err(),
            PairingError::SizeMismatch(3, 4)
        );
        let short = forest(3, vec![(1, 2)]);
        assert!(matches!(
            pairing_forest_qn(&short, &Permutation::identity(3)),
            Err(PairingError::WrongEdgeCount { .. })
        ));
    }

    #[test]
    fn pairing_equals_tree_order_rule() {
        // restatement of the defining rule: value = sign(sigma) iff
        // sigma(G) is an ordered forest, checked exhaustively for n <= 5
        for n in 2..=5 {
            for g in enumerate_forests(n, n - 1).unwrap() {
                for s in perms_fixing_first(n) {
                    let v = pairing_forest_qn(&g, &s).unwrap();
                    let (_, ordered) = sigma_apply(&s, &g);
                    assert_eq!(v, if ordered { s.sign() } else { 0 });
                    assert!(v.abs() <= 1);
                }
            }
        }
    }

    #[test]
    fn matrix_n2_and_n3() {
        let m = dual_basis_matrix(2).unwrap();
        assert_eq!(m.entries, vec![vec![1]]);
        assert_eq!(m.det(), BigInt::from(1));

        let m = dual_basis_matrix(3).unwrap();
        assert_eq!(m.forests[0].edges(), &[(1, 2), (1, 3)]);
        assert_eq!(m.forests[1].edges(), &[(1, 2), (2, 3)]);
        assert_eq!(m.entries, vec![vec![1, -1], vec![1, 0]]);
        assert_eq!(m.det(), BigInt::from(1));
    }

    #[test]
    fn matrix_unimodular_and_identity_column() {
        for n in 2..=5 {
            let m = dual_basis_matrix(n).unwrap();
            let d = m.det();
            assert!(d == BigInt::from(1) || d == BigInt::from(-1), "n={n}");
            // identity column is all ones
            let id_col = m
                .perms
                .iter()
                .position(|p| *p == Permutation::identity(n))
                .unwrap();
            assert!(m.entries.iter().all(|row| row[id_col] == 1));
            // entries bounded
            assert!(m
                .entries
                .iter()
                .flatten()
                .all(|&e| e == -1 || e == 0 || e == 1));
        }
    }

    #[test]
    fn matrix_size_overflow() {
        assert!(dual_basis_matrix(1).is_err());
        assert!(dual_basis_matrix(9).is_err());
    }

    #[test]
    fn expansion_base_case() {
        let g = forest(2, vec![(1, 2)]);
        let e = dual_expansion(&g).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&Permutation::identity(2)], 1);
    }

    #[test]
    fn expansion_yields_indicator() {
        for n in 2..=5 {
            for g in enumerate_forests(n, n - 1).unwrap() {
                let e = dual_expansion(&g).unwrap();
                for f in enumerate_forests(n, n - 1).unwrap() {
                    let expected = if f == g { 1 } else { 0 };
                    assert_eq!(expansion_pairs_with(&f, &e), expected, "n={n} G={g} F={f}");
                }
            }
        }
    }

    #[test]
    fn expansion_matches_exact_solve() {
        for n in 2..=5 {
            for g in enumerate_forests(n, n - 1).unwrap() {
                let rec = dual_expansion(&g).unwrap();
                let solved = dual_expansion_by_solve(&g).unwrap();
                assert_eq!(rec, solved, "n={n} G={g}");
            }
        }
    }

    #[test]
    fn expansion_n3_example() {
        // G = {1->2, 1->3}: pairing against the two forests gives (1, 0)
        let g = forest(3, vec![(1, 2), (1, 3)]);
        let e = dual_expansion(&g).unwrap();
        assert_eq!(expansion_pairs_with(&g, &e), 1);
        assert_eq!(
            expansion_pairs_with(&forest(3, vec![(1, 2), (2, 3)]), &e),
            0
        );
    }

    #[test]
    fn hhat_pairing_rule() {
        let g = forest(4, vec![(1, 2), (3, 4)]);
        assert_eq!(pairing_hhat(&g, 3, 4), 1);
        assert_eq!(pairing_hhat(&g, 1, 2), -1);
        assert_eq!(pairing_hhat(&g, 1, 3), 0);
    }
}
