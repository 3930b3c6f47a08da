//! Constructors for the named families and edge-subdivision constructions.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn at_least(family: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::input(format!("{family} needs n >= {min}, got {n}")));
    }
    Ok(())
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 1)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    complete_multipartite_unchecked(&vec![1; n])
}

/// Hub 0 joined to the cycle `1..n`.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("wheel", n, 5)?;
    let rim = n - 1;
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    Graph::from_edge_list(n, &edges)
}

/// Clique on `0..k`, every clique vertex joined to the independent set `k..n`.
pub fn complete_split(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::input(format!(
            "complete split graph needs 1 <= k <= n-1, got n={n} k={k}"
        )));
    }
    let mut g = Graph::empty(n);
    for u in 0..k {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    Ok(g)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::input(
            "complete multipartite graph needs at least two non-empty parts",
        ));
    }
    complete_multipartite_unchecked(parts)
}

fn complete_multipartite_unchecked(parts: &[usize]) -> Result<Graph> {
    let part: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let mut g = Graph::empty(part.len());
    for u in 0..part.len() {
        for v in u + 1..part.len() {
            if part[u] != part[v] {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `k` triangles sharing vertex 0.
pub fn friendship(k: usize) -> Result<Graph> {
    at_least("friendship", k, 1)?;
    let mut edges = Vec::with_capacity(3 * k);
    for t in 0..k {
        let (a, b) = (1 + 2 * t, 2 + 2 * t);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::from_edge_list(2 * k + 1, &edges)
}

pub const NAMED: &[&str] = &["diamond", "trigonal_prism", "grotzsch", "petersen"];

pub fn named(name: &str) -> Result<Graph> {
    match name {
        "diamond" => Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        "trigonal_prism" => Graph::from_edge_list(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        // Mycielskian of C5: cycle 0..5, shadows 5..10, apex 10.
        "grotzsch" => {
            let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            for i in 0..5 {
                edges.push((5 + i, (i + 1) % 5));
                edges.push((5 + i, (i + 4) % 5));
                edges.push((5 + i, 10));
            }
            Graph::from_edge_list(11, &edges)
        }
        "petersen" => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edge_list(10, &edges)
        }
        _ => Err(Error::input(format!(
            "unknown graph `{name}` (known: {})",
            NAMED.join(", ")
        ))),
    }
}

/// Replaces each listed edge `uv` by a path `u-w-v` through a new vertex.
/// New vertices are numbered `n, n+1, ...` in list order.
pub fn subdivide_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(Error::input(format!("edge ({u},{v}) is not in the graph")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::input(format!("edge ({u},{v}) listed twice")));
        }
    }
    let n = g.n();
    let mut out: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| !seen.contains(e))
        .collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        out.push((u, n + i));
        out.push((n + i, v));
    }
    Graph::from_edge_list(n + edges.len(), &out)
}

/// Inserts `count` degree-2 vertices, each subdividing the lowest-indexed
/// edge `(u, v)` (`u < v`, lexicographic) of the current graph.
pub fn degree2_inflate(h: &Graph, count: usize) -> Result<Graph> {
    let mut g = h.clone();
    for _ in 0..count {
        let first = *g
            .edges()
            .first()
            .ok_or_else(|| Error::input("cannot subdivide an edgeless graph"))?;
        g = subdivide_edges(&g, &[first])?;
    }
    Ok(g)
}
