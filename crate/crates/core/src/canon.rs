//! Canonical labelling for small graphs.
//!
//! Vertices are first split into cells by colour refinement (degree, then
//! the multiset of neighbour colours, iterated to a fixed point). The
//! canonical form is the relabelling that keeps the cells in order and
//! maximises the upper-triangle adjacency bit string, read column by column
//! as in graph6. A depth-first search over the within-cell orderings prunes
//! on bit-string prefixes and skips a candidate whenever a twin of it
//! (same neighbourhood up to each other) was already tried at that position.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats;
use crate::graph::Graph;

/// Largest vertex count accepted by [`canonical_code`].
pub const CANON_MAX_N: usize = 16;

/// graph6 bytes of the canonical relabelling; equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // graph6 is printable ASCII.
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        formats::parse_graph6(self.as_str()).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let form = canonical_form(g)?;
    Ok(CanonicalCode(formats::to_graph6(&form).into_bytes()))
}

/// Relabelled copy of `g` in canonical order.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let perm = canonical_labeling(g)?;
    g.permuted(&perm)
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::capability(format!(
            "canonical forms are limited to n <= {CANON_MAX_N} (got {n})"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |acc, v| acc | 1 << v))
        .collect();
    let colors = refine_colors(&adj);
    let mut slot_colors: Vec<usize> = colors.clone();
    slot_colors.sort_unstable();

    let twins: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u)
                .filter(|&v| adj[u] & !(1 << v) == adj[v] & !(1 << u))
                .fold(0u32, |acc, v| acc | 1 << v)
        })
        .collect();

    let mut search = Search {
        n,
        adj: &adj,
        colors: &colors,
        slot_colors: &slot_colors,
        twins: &twins,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.descend(0);
    let (_, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// Colour refinement to a stable partition; colours are ranks of sorted
/// signatures, so they depend only on the isomorphism class.
fn refine_colors(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    let mut classes = distinct(&colors);
    colors = rank(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&v| adj[u] >> v & 1 == 1)
                    .map(|v| colors[v])
                    .collect();
                nb.sort_unstable();
                (colors[u], nb)
            })
            .collect();
        let next = rank(&sigs);
        let next_classes = distinct(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

fn distinct<T: Ord + Clone>(keys: &[T]) -> usize {
    let mut v = keys.to_vec();
    v.sort();
    v.dedup();
    v.len()
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    colors: &'a [usize],
    slot_colors: &'a [usize],
    twins: &'a [u32],
    order: Vec<usize>,
    used: u32,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    /// Bits for columns `0..=pos` of the relabelled upper triangle, packed
    /// from the most significant end so integer order is prefix order.
    fn prefix(&self) -> (u128, u32) {
        let mut code = 0u128;
        let mut len = 0u32;
        for j in 1..self.order.len() {
            let vj = self.order[j];
            for &vi in &self.order[..j] {
                if self.adj[vj] >> vi & 1 == 1 {
                    code |= 1u128 << (127 - len);
                }
                len += 1;
            }
        }
        (code, len)
    }

    fn compare_to_best(&self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let Some((best, _)) = &self.best else {
            return Ordering::Greater;
        };
        let (cur, len) = self.prefix();
        if len == 0 {
            return Ordering::Equal;
        }
        let mask = if len >= 128 {
            u128::MAX
        } else {
            !(u128::MAX >> len)
        };
        (cur & mask).cmp(&(best & mask))
    }

    fn descend(&mut self, pos: usize) {
        use std::cmp::Ordering;
        if pos == self.n {
            let (code, _) = self.prefix();
            let better = self.best.as_ref().is_none_or(|(b, _)| code > *b);
            if better {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let want = self.slot_colors[pos];
        let mut tried = 0u32;
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            self.order.push(v);
            self.used |= 1 << v;
            if self.compare_to_best() != Ordering::Less {
                self.descend(pos + 1);
            }
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}
