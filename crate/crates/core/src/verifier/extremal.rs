use std::collections::BTreeMap;

use serde::Serialize;

use super::{Subject, COUNTING};
use crate::enumeration::{enumerate_with, EnumerationOptions, EnumerationSpec};
use crate::error::{Error, Result};
use crate::measures::complete_split_deviation;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Maximizer {
    pub code: String,
    pub degree_sequence: String,
    /// `Some(k)` when the graph is `CS(n, k)`.
    pub complete_split: Option<usize>,
    #[serde(serialize_with = "rational::serialize")]
    pub m1: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub s: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub var: Rational,
}

impl Maximizer {
    fn of(s: &Subject) -> Self {
        let p = &s.profile;
        Maximizer {
            code: s.code.clone(),
            degree_sequence: s.degree_sequence(),
            complete_split: p.class.is_complete_split,
            m1: p.measures.m1.clone(),
            s: p.measures.s.clone(),
            var: p.measures.var.clone(),
        }
    }
}

/// Maximizers of `S` and `Var` over the connected graphs with `n`
/// vertices and `m` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub m: usize,
    pub counting: &'static str,
    pub classes: usize,
    pub irregular_classes: usize,
    /// Irregular classes by number of universal vertices, `q >= 1` only.
    pub universal_census: BTreeMap<usize, usize>,
    #[serde(serialize_with = "rational::serialize")]
    pub max_s: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub max_var: Rational,
    pub max_s_graphs: Vec<Maximizer>,
    pub max_var_graphs: Vec<Maximizer>,
    /// Every maximizer of `S` also maximizes `Var`.
    pub coincide: bool,
}

pub fn extremal_search(n: usize, m: usize) -> Result<ExtremalResult> {
    extremal_search_with(n, m, &EnumerationOptions::default())
}

pub fn extremal_search_with(
    n: usize,
    m: usize,
    opts: &EnumerationOptions,
) -> Result<ExtremalResult> {
    if n == 0 || m + 1 < n || m > n * (n - 1) / 2 {
        return Err(Error::input(format!(
            "no connected graph has n={n} vertices and m={m} edges"
        )));
    }
    let graphs = enumerate_with(&EnumerationSpec::slice(n, m), opts)?;
    let subjects: Vec<Subject> = graphs.into_iter().map(Subject::new).collect();

    let maximizers = |key: fn(&Subject) -> &Rational| -> (Rational, Vec<Maximizer>) {
        let best = subjects
            .iter()
            .map(key)
            .max()
            .expect("non-empty slice")
            .clone();
        let list = subjects
            .iter()
            .filter(|s| *key(s) == best)
            .map(Maximizer::of)
            .collect();
        (best, list)
    };
    let (max_s, max_s_graphs) = maximizers(|s| &s.profile.measures.s);
    let (max_var, max_var_graphs) = maximizers(|s| &s.profile.measures.var);
    let coincide = max_s_graphs
        .iter()
        .all(|g| max_var_graphs.iter().any(|h| h.code == g.code));

    let irregular: Vec<&Subject> = subjects
        .iter()
        .filter(|s| !s.profile.class.is_regular)
        .collect();
    let mut universal_census = BTreeMap::new();
    for s in &irregular {
        let q = s.profile.stats.universal_count;
        if q >= 1 {
            *universal_census.entry(q).or_insert(0) += 1;
        }
    }
    Ok(ExtremalResult {
        n,
        m,
        counting: COUNTING,
        classes: subjects.len(),
        irregular_classes: irregular.len(),
        universal_census,
        max_s,
        max_var,
        max_s_graphs,
        max_var_graphs,
        coincide,
    })
}

/// The divisibility rule for the `k` maximising `S(CS(n, k))`. When
/// `n ≡ 2 (mod 3)` both `(n-2)/3` and `(n+1)/3` attain the maximum.
pub fn split_k_rule(n: usize) -> Vec<usize> {
    match n % 3 {
        0 => vec![n / 3],
        1 => vec![(n - 1) / 3],
        _ => vec![(n - 2) / 3, (n + 1) / 3],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitKCheck {
    pub n: usize,
    pub rule: Vec<usize>,
    /// Every `k` in `1..n` attaining the largest `S(CS(n, k))`.
    pub argmax: Vec<usize>,
    #[serde(serialize_with = "rational::serialize")]
    pub max_s: Rational,
    pub agrees: bool,
}

pub fn max_deviation_split_k(n: usize) -> Result<SplitKCheck> {
    if n < 4 {
        return Err(Error::input(format!(
            "the split-k rule needs n >= 4, got {n}"
        )));
    }
    let values: Vec<(usize, Rational)> = (1..n)
        .map(|k| (k, complete_split_deviation(n, k)))
        .collect();
    let max_s = values.iter().map(|(_, v)| v).max().expect("n >= 4").clone();
    let argmax: Vec<usize> = values
        .iter()
        .filter(|(_, v)| *v == max_s)
        .map(|(k, _)| *k)
        .collect();
    let rule = split_k_rule(n);
    Ok(SplitKCheck {
        n,
        agrees: rule == argmax,
        rule,
        argmax,
        max_s,
    })
}
