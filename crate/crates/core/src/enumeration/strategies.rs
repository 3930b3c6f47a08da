use rayon::prelude::*;

use super::{Enumerator, Population};
use crate::canon::{canonical_code, CanonicalCode};
use crate::error::Result;
use crate::graph::Graph;

/// Canonicalises every child of every parent, then sorts and dedups.
fn next_level<F>(parents: &[CanonicalCode], children: F) -> Result<Vec<CanonicalCode>>
where
    F: Fn(&Graph) -> Vec<Graph> + Sync,
{
    let mut codes = parents
        .par_iter()
        .map(|code| {
            children(&code.to_graph())
                .iter()
                .map(canonical_code)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    codes.par_sort_unstable();
    codes.dedup();
    Ok(codes)
}

fn dedup_codes(mut codes: Vec<CanonicalCode>) -> Vec<CanonicalCode> {
    codes.par_sort_unstable();
    codes.dedup();
    codes
}

fn with_each_non_edge(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) {
                out.push(g.with_edge(u, v).expect("vertices in range"));
            }
        }
    }
    out
}

/// Level-wise edge augmentation: the classes with `m` edges are the
/// classes of every one-edge extension of a class with `m - 1` edges.
pub struct Augment;

impl Enumerator for Augment {
    fn name(&self) -> &'static str {
        "augment"
    }

    fn population(&self) -> Population {
        Population::All
    }

    fn description(&self) -> &'static str {
        "add one edge at a time, dedup each level by canonical code"
    }

    fn max_n(&self) -> usize {
        super::ALL_MAX_N
    }

    fn classes(&self, n: usize, m: Option<usize>) -> Result<Vec<CanonicalCode>> {
        let top = n * (n - 1) / 2;
        let last = m.unwrap_or(top);
        if last > top {
            return Ok(Vec::new());
        }
        let mut level = vec![canonical_code(&Graph::empty(n))?];
        let mut all = level.clone();
        for _ in 0..last {
            level = next_level(&level, with_each_non_edge)?;
            if m.is_none() {
                all.extend(level.iter().cloned());
            }
        }
        Ok(if m.is_some() { level } else { dedup_codes(all) })
    }
}

/// Every labelled edge subset of `K_n`, canonicalised. Exponential in
/// `n(n-1)/2`; kept as an independent check on [`Augment`].
pub struct Subsets;

impl Enumerator for Subsets {
    fn name(&self) -> &'static str {
        "subsets"
    }

    fn population(&self) -> Population {
        Population::All
    }

    fn description(&self) -> &'static str {
        "canonicalise every labelled edge subset (n <= 7)"
    }

    fn max_n(&self) -> usize {
        7
    }

    fn classes(&self, n: usize, m: Option<usize>) -> Result<Vec<CanonicalCode>> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let total = 1u64 << pairs.len();
        // split the subset space into fixed-size blocks of masks
        const BLOCK: u64 = 1 << 12;
        let codes = (0..total.div_ceil(BLOCK))
            .into_par_iter()
            .map(|b| {
                let mut local = Vec::new();
                for mask in b * BLOCK..((b + 1) * BLOCK).min(total) {
                    if m.is_some_and(|m| mask.count_ones() as usize != m) {
                        continue;
                    }
                    let edges: Vec<_> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    local.push(canonical_code(&Graph::from_edge_list(n, &edges)?)?);
                }
                local.sort_unstable();
                local.dedup();
                Ok(local)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(dedup_codes(codes.into_iter().flatten().collect()))
    }
}

fn add_leaf(t: &Graph, v: usize) -> Graph {
    let n = t.n();
    let mut edges = t.edges();
    edges.push((v, n));
    Graph::from_edge_list(n + 1, &edges).expect("leaf edge in range")
}

fn tree_classes(n: usize) -> Result<Vec<CanonicalCode>> {
    let mut level = vec![canonical_code(&Graph::from_edge_list(2, &[(0, 1)])?)?];
    for _ in 2..n {
        level = next_level(&level, |t| (0..t.n()).map(|v| add_leaf(t, v)).collect())?;
    }
    Ok(level)
}

/// Trees on `n` vertices from trees on `n - 1` by attaching a leaf.
pub struct LeafAugment;

impl Enumerator for LeafAugment {
    fn name(&self) -> &'static str {
        "leaf-augment"
    }

    fn population(&self) -> Population {
        Population::Trees
    }

    fn description(&self) -> &'static str {
        "grow trees one leaf at a time, dedup each level"
    }

    fn max_n(&self) -> usize {
        super::TREES_MAX_N
    }

    fn classes(&self, n: usize, m: Option<usize>) -> Result<Vec<CanonicalCode>> {
        if m.is_some_and(|m| m + 1 != n) {
            return Ok(Vec::new());
        }
        tree_classes(n)
    }
}

/// Decodes a Prüfer sequence over `0..n` into its labelled tree.
pub(crate) fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).expect("prufer edges in range")
}

/// All `n^(n-2)` labelled trees via Prüfer sequences.
pub struct Prufer;

impl Enumerator for Prufer {
    fn name(&self) -> &'static str {
        "prufer"
    }

    fn population(&self) -> Population {
        Population::Trees
    }

    fn description(&self) -> &'static str {
        "canonicalise every labelled tree from its Prufer sequence (n <= 8)"
    }

    fn max_n(&self) -> usize {
        8
    }

    fn classes(&self, n: usize, m: Option<usize>) -> Result<Vec<CanonicalCode>> {
        if m.is_some_and(|m| m + 1 != n) {
            return Ok(Vec::new());
        }
        let len = n - 2;
        let total = n.pow(len as u32);
        let codes = (0..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut seq = vec![0; len];
                for s in seq.iter_mut() {
                    *s = idx % n;
                    idx /= n;
                }
                canonical_code(&prufer_tree(n, &seq))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(dedup_codes(codes))
    }
}

/// Connected unicyclic graphs as trees plus one extra edge.
pub struct TreePlusEdge;

impl Enumerator for TreePlusEdge {
    fn name(&self) -> &'static str {
        "tree-plus-edge"
    }

    fn population(&self) -> Population {
        Population::Unicyclic
    }

    fn description(&self) -> &'static str {
        "add each non-edge to each tree class, dedup"
    }

    fn max_n(&self) -> usize {
        super::UNICYCLIC_MAX_N
    }

    fn classes(&self, n: usize, m: Option<usize>) -> Result<Vec<CanonicalCode>> {
        if m.is_some_and(|m| m != n) {
            return Ok(Vec::new());
        }
        next_level(&tree_classes(n)?, with_each_non_edge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_decoding() {
        let t = prufer_tree(5, &[0, 0, 0]);
        assert_eq!(t.degree(0), 4);
        let p = prufer_tree(4, &[1, 2]);
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn strategies_agree() {
        for n in 1..=6 {
            for m in [None, Some(n), Some(n * (n - 1) / 2)] {
                assert_eq!(
                    Augment.classes(n, m).unwrap(),
                    Subsets.classes(n, m).unwrap()
                );
            }
        }
        for n in 2..=8 {
            assert_eq!(
                LeafAugment.classes(n, None).unwrap(),
                Prufer.classes(n, None).unwrap()
            );
        }
    }
}
