//! Ordered forests and the free basis they give for the cohomology of the
//! configuration space of n points in the disk.
//!
//! An ordered forest is a directed graph on `{1..n}` whose every edge
//! `i -> j` has `i < j` and whose vertices have in-degree at most 1. Edges
//! are stored sorted by terminal vertex, which pins down a unique signed
//! generator per forest. This module also builds the explicit kernel
//! generators of the restriction map for n = 4 and computes the per-degree
//! kernel dimensions as exact integer ranks.

use crate::exact::rank_i128;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("edge ({0}, {1}) out of range or not increasing")]
    BadEdge(usize, usize),
    #[error("vertex {0} has in-degree greater than 1")]
    RepeatedTerminal(usize),
    #[error("edge count {got} invalid: expected at most {max}")]
    BadEdgeCount { got: usize, max: usize },
    #[error("forest is not a single tree on all {0} vertices")]
    NotSpanningTree(usize),
    #[error("the two edges do not share a vertex")]
    DisjointEdges,
    #[error("expected exactly {expected} edges, got {got}")]
    WrongEdgeCount { expected: usize, got: usize },
}

/// Directed graph on `{1..n}` with increasing edges and in-degree <= 1,
/// edges sorted by terminal vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedForest {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl OrderedForest {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, ForestError> {
        if n == 0 {
            return Err(ForestError::EmptyVertexSet);
        }
        edges.sort_by_key(|&(_, j)| j);
        for &(i, j) in &edges {
            if i == 0 || j > n || i >= j {
                return Err(ForestError::BadEdge(i, j));
            }
        }
        for w in edges.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(ForestError::RepeatedTerminal(w[0].1));
            }
        }
        Ok(OrderedForest { n, edges })
    }

    pub fn edgeless(n: usize) -> Self {
        OrderedForest {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted ascending by terminal vertex.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Connected components of the underlying undirected graph, as sorted
    /// vertex lists (isolated vertices included).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(i, j) in &self.edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Whether the underlying graph is a single tree spanning all vertices.
    pub fn is_spanning_tree(&self) -> bool {
        self.edges.len() == self.n - 1 && self.components().len() == 1
    }

    /// Delete one edge (by position in terminal order).
    pub fn delete_edge(&self, idx: usize) -> OrderedForest {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        OrderedForest { n: self.n, edges }
    }

    /// Multiset of non-isolated component sizes with the edge count.
    pub fn component_profile(&self) -> ComponentProfile {
        let mut parts: Vec<usize> = self
            .components()
            .into_iter()
            .map(|c| c.len())
            .filter(|&s| s >= 2)
            .collect();
        parts.sort_unstable();
        ComponentProfile {
            parts,
            edge_count: self.edges.len(),
        }
    }
}

impl fmt::Display for OrderedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "(edgeless on {})", self.n);
        }
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|&(i, j)| format!("{i}>{j}"))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Multiset of non-isolated component sizes `{m_1, ..., m_k}` and the edge
/// count `j = sum (m_i - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    pub parts: Vec<usize>,
    pub edge_count: usize,
}

impl ComponentProfile {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable();
        assert!(parts.iter().all(|&m| m >= 2), "every part must be >= 2");
        let edge_count = parts.iter().map(|m| m - 1).sum();
        ComponentProfile { parts, edge_count }
    }
}

/// All ordered forests on `n` vertices with exactly `j` edges, in canonical
/// order (lexicographic on the edge list sorted by terminal vertex).
pub fn enumerate_forests(n: usize, j: usize) -> Result<Vec<OrderedForest>, ForestError> {
    if n == 0 {
        return Err(ForestError::EmptyVertexSet);
    }
    if j > n - 1 {
        return Err(ForestError::BadEdgeCount { got: j, max: n - 1 });
    }
    // Choose the set of terminal vertices (all distinct, each >= 2), then
    // every assignment of a smaller parent to each terminal is a forest:
    // increasing edges cannot close a cycle.
    let mut out = Vec::new();
    let mut terminals = Vec::with_capacity(j);
    fn rec(
        n: usize,
        j: usize,
        next: usize,
        terminals: &mut Vec<usize>,
        out: &mut Vec<OrderedForest>,
    ) {
        if terminals.len() == j {
            let mut edges = vec![(0usize, 0usize); j];
            assign(terminals, 0, &mut edges, out, n);
            return;
        }
        if next > n {
            return;
        }
        for t in next..=n {
            terminals.push(t);
            rec(n, j, t + 1, terminals, out);
            terminals.pop();
        }
    }
    fn assign(
        terminals: &[usize],
        k: usize,
        edges: &mut Vec<(usize, usize)>,
        out: &mut Vec<OrderedForest>,
        n: usize,
    ) {
        if k == terminals.len() {
            out.push(OrderedForest {
                n,
                edges: edges.clone(),
            });
            return;
        }
        let t = terminals[k];
        for p in 1..t {
            edges[k] = (p, t);
            assign(terminals, k + 1, edges, out, n);
        }
    }
    rec(n, j, 2, &mut terminals, &mut out);
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(out)
}

/// Integer linear combination of ordered forests of one fixed edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomClass {
    pub n: usize,
    pub degree: usize,
    terms: BTreeMap<OrderedForest, i64>,
}

impl CohomClass {
    pub fn zero(n: usize, degree: usize) -> Self {
        CohomClass {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_forest(f: OrderedForest) -> Self {
        let mut c = CohomClass::zero(f.n(), f.edge_count());
        c.add_term(f, 1);
        c
    }

    pub fn add_term(&mut self, f: OrderedForest, coeff: i64) {
        assert_eq!(f.n(), self.n);
        assert_eq!(f.edge_count(), self.degree, "mixed-degree class");
        let e = self.terms.entry(f.clone()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&f);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrderedForest, i64)> {
        self.terms.iter().map(|(f, &c)| (f, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, f: &OrderedForest) -> i64 {
        self.terms.get(f).copied().unwrap_or(0)
    }

    /// Coefficient vector over a basis list of forests (all of this degree).
    pub fn coeff_vector(&self, basis: &[OrderedForest]) -> Vec<i128> {
        basis.iter().map(|f| self.coeff(f) as i128).collect()
    }
}

/// Degree-2 kernel generator attached to a spanning tree `T` on 4 vertices:
/// the signed sum of its three 2-edge subforests, deleting each edge in
/// terminal order with signs +, -, +.
pub fn top_kernel_element(tree: &OrderedForest) -> Result<CohomClass, ForestError> {
    if tree.edge_count() != 3 || tree.n() != 4 {
        return Err(ForestError::WrongEdgeCount {
            expected: 3,
            got: tree.edge_count(),
        });
    }
    if !tree.is_spanning_tree() {
        return Err(ForestError::NotSpanningTree(tree.n()));
    }
    let mut class = CohomClass::zero(4, 2);
    for k in 0..3 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        class.add_term(tree.delete_edge(k), sign);
    }
    Ok(class)
}

/// Degree-1 kernel generator attached to a 2-edge forest whose edges share
/// a vertex: (first edge) - (second edge), edges in terminal order.
pub fn shared_vertex_difference(forest: &OrderedForest) -> Result<CohomClass, ForestError> {
    if forest.edge_count() != 2 {
        return Err(ForestError::WrongEdgeCount {
            expected: 2,
            got: forest.edge_count(),
        });
    }
    let (e1, e2) = (forest.edges()[0], forest.edges()[1]);
    let shares = e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1;
    if !shares {
        return Err(ForestError::DisjointEdges);
    }
    let n = forest.n();
    let mut class = CohomClass::zero(n, 1);
    class.add_term(OrderedForest::new(n, vec![e1])?, 1);
    class.add_term(OrderedForest::new(n, vec![e2])?, -1);
    Ok(class)
}

/// Kernel generators of the restriction map for n = 4 at radius `r`, per
/// degree. Bands split at 1/4, 1/3, and 1/(1+sqrt 2); each statement holds
/// for `r <=` its threshold on the left and `r >` on the right.
fn kernel_generators_n4(r: f64) -> [Vec<CohomClass>; 4] {
    let band2 = r > 0.25;
    let band3 = r > 1.0 / 3.0;
    let band4 = r > 1.0 / (1.0 + std::f64::consts::SQRT_2);

    let mut gens: [Vec<CohomClass>; 4] = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    if band2 {
        let trees = enumerate_forests(4, 3).unwrap();
        for t in &trees {
            gens[3].push(CohomClass::from_forest(t.clone()));
            gens[2].push(top_kernel_element(t).unwrap());
        }
    }
    if band3 {
        for f in enumerate_forests(4, 2).unwrap() {
            if let Ok(diff) = shared_vertex_difference(&f) {
                gens[2].push(CohomClass::from_forest(f));
                gens[1].push(diff);
            }
        }
    }
    if band4 {
        for degree in 0..4 {
            for f in enumerate_forests(4, degree).unwrap() {
                gens[degree].push(CohomClass::from_forest(f));
            }
        }
    }
    gens
}

/// Per-degree kernel dimensions of the restriction map for n = 4, computed
/// as exact integer ranks of the generator sets over the 24-dimensional
/// forest basis.
pub fn kernel_ladder_n4(r: f64) -> [usize; 4] {
    assert!(r > 0.0, "radius must be positive");
    let gens = kernel_generators_n4(r);
    let mut dims = [0usize; 4];
    for degree in 0..4 {
        let basis = enumerate_forests(4, degree).unwrap();
        let rows: Vec<Vec<i128>> = gens[degree]
            .iter()
            .map(|c| c.coeff_vector(&basis))
            .collect();
        dims[degree] = rank_i128(&rows);
    }
    dims
}
