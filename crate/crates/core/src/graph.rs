//! Simple undirected graphs stored as bit rows, plus the structural
//! statistics and classification predicates every other module consumes.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

const WORD: usize = 64;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Each vertex owns a row of `ceil(n / 64)` words; bit `v` of row `u` is set
/// iff `uv` is an edge. Rows are kept symmetric with an empty diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graphs have at least one vertex");
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a graph from 0-based vertex pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
            self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
            self.m += 1;
        }
    }

    /// Copy of this graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::input(format!("cannot add edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    /// Edges as `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from n"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union, `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + self.n, v + self.n);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![0u64; self.words];
        seen[0] = 1;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                let (w, b) = (v / WORD, 1u64 << (v % WORD));
                if seen[w] & b == 0 {
                    seen[w] |= b;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// `m - n + 1`; only defined for connected graphs.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::precondition(
                "cyclomatic number requires a connected graph",
            ));
        }
        Ok(self.m + 1 - self.n)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats::new(self)
    }

    pub fn classify(&self) -> Classification {
        Classification::new(self)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| self.row(u).iter().zip(self.row(v)).all(|(a, b)| a & b == 0))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Degree sequence and the derived counts used throughout the measures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub n: usize,
    pub degrees: Vec<usize>,
    /// `N_i`: number of vertices of degree `i`, keyed by the degree set.
    pub histogram: BTreeMap<usize, usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub edge_count: usize,
    #[serde(serialize_with = "rational::serialize")]
    pub average_degree: Rational,
    pub degree_set: Vec<usize>,
    /// Number of universal vertices (degree `n - 1`).
    pub universal_count: usize,
}

impl DegreeStats {
    fn new(g: &Graph) -> Self {
        let degrees = g.degrees();
        let mut histogram = BTreeMap::new();
        for &d in &degrees {
            *histogram.entry(d).or_insert(0) += 1;
        }
        let n = g.n();
        DegreeStats {
            n,
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            edge_count: g.edge_count(),
            average_degree: rational::ratio(2 * g.edge_count() as i64, n as i64),
            degree_set: histogram.keys().copied().collect(),
            universal_count: histogram.get(&(n - 1)).copied().unwrap_or(0),
            histogram,
            degrees,
        }
    }

    /// `N_i`, zero for degrees that do not occur.
    pub fn count(&self, degree: usize) -> usize {
        self.histogram.get(&degree).copied().unwrap_or(0)
    }

    pub fn count_max(&self) -> usize {
        self.count(self.max_degree)
    }

    pub fn count_min(&self) -> usize {
        self.count(self.min_degree)
    }

    /// `Δ - δ`.
    pub fn spread(&self) -> usize {
        self.max_degree - self.min_degree
    }

    pub fn is_regular(&self) -> bool {
        self.degree_set.len() <= 1
    }

    /// Degree sequence in non-increasing order.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Compact `(8^2, 7^3, 5^5)` rendering of the degree sequence.
    pub fn sequence_string(&self) -> String {
        let parts: Vec<String> = self
            .histogram
            .iter()
            .rev()
            .map(|(d, c)| {
                if *c == 1 {
                    format!("{d}")
                } else {
                    format!("{d}^{c}")
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Structural flags for a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_connected: bool,
    pub is_regular: bool,
    /// Number of distinct degrees.
    pub degree_class: usize,
    pub is_bidegreed: bool,
    pub is_balanced_bidegreed: bool,
    /// Connected, irregular, with at least one universal vertex.
    pub is_dominating: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub cyclomatic: Option<usize>,
    /// `Some(k)` iff the graph is `CS(n, k)`.
    pub is_complete_split: Option<usize>,
}

impl Classification {
    fn new(g: &Graph) -> Self {
        let stats = g.degree_stats();
        let n = g.n();
        let is_connected = g.is_connected();
        let degree_class = stats.degree_set.len();
        let is_regular = degree_class <= 1;
        let is_bidegreed = degree_class == 2;
        let is_balanced_bidegreed = is_bidegreed
            && n.is_multiple_of(2)
            && stats.count_max() == n / 2
            && stats.count_min() == n / 2;
        let cyclomatic = is_connected.then(|| g.edge_count() + 1 - n);
        Classification {
            is_connected,
            is_regular,
            degree_class,
            is_bidegreed,
            is_balanced_bidegreed,
            is_dominating: is_connected && !is_regular && stats.universal_count >= 1,
            is_tree: cyclomatic == Some(0),
            is_unicyclic: cyclomatic == Some(1),
            cyclomatic,
            is_complete_split: complete_split_parameter(g, &stats),
        }
    }
}

fn complete_split_parameter(g: &Graph, stats: &DegreeStats) -> Option<usize> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let q = stats.universal_count;
    if q == n {
        return Some(n - 1);
    }
    if q == 0 {
        return None;
    }
    // Universal vertices already form a clique; the rest must be independent.
    let rest: Vec<usize> = (0..n).filter(|&v| stats.degrees[v] != n - 1).collect();
    let independent = rest
        .iter()
        .all(|&u| rest.iter().all(|&v| !g.has_edge(u, v)));
    independent.then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let p = path4();
        assert_eq!(p.degrees(), vec![1, 2, 2, 1]);
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
        let diamond = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(diamond.degree_stats().sorted_degrees(), vec![3, 3, 2, 2]);
    }

    #[test]
    fn duplicates_collapse_and_bad_edges_fail() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn connectivity() {
        assert!(path4().is_connected());
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn cyclomatic() {
        assert_eq!(path4().cyclomatic_number(), Ok(0));
        let c6 =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6.cyclomatic_number(), Ok(1));
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            two_edges.cyclomatic_number(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn classify_small_graphs() {
        let c = path4().classify();
        assert!(c.is_bidegreed && c.is_balanced_bidegreed && c.is_tree);
        assert!(!c.is_dominating);

        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap()
            .classify();
        assert!(k4.is_regular && !k4.is_bidegreed && !k4.is_dominating);
        assert_eq!(k4.is_complete_split, Some(3));

        let k1 = Graph::empty(1).classify();
        assert!(k1.is_regular && k1.is_connected);
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap().classify();
        assert!(k2.is_regular && k2.is_tree);
    }

    #[test]
    fn histogram_and_universal_count() {
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = star.degree_stats();
        assert_eq!(s.universal_count, 1);
        assert_eq!(s.count(1), 4);
        assert_eq!(s.average_degree, rational::ratio(8, 5));
        assert_eq!(s.degree_set, vec![1, 4]);
        assert_eq!(s.sequence_string(), "(4, 1^4)");
        assert_eq!(star.classify().is_complete_split, Some(1));
    }

    #[test]
    fn large_rows_span_words() {
        let n = 130;
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        assert_eq!(g.degree(0), n - 1);
        assert_eq!(g.neighbors(0).count(), n - 1);
        assert!(g.has_edge(129, 0));
        assert!(g.is_connected());
    }
}
