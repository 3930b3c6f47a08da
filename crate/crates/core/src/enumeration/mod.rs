//! Exhaustive generation of small graphs, one representative per
//! isomorphism class.
//!
//! Generation strategies implement [`Enumerator`] and are looked up by name
//! in an [`EnumeratorRegistry`]. Each strategy returns sorted canonical
//! codes; filters, worker pools and the on-disk cache are applied here.

mod cache;
mod strategies;

use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use cache::EnumerationCache;
pub use strategies::{Augment, LeafAugment, Prufer, Subsets, TreePlusEdge};

/// Largest `n` for each population.
pub const ALL_MAX_N: usize = 8;
pub const TREES_MAX_N: usize = 12;
pub const UNICYCLIC_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Population {
    All,
    Trees,
    Unicyclic,
}

impl Population {
    pub fn cap(self) -> usize {
        match self {
            Population::All => ALL_MAX_N,
            Population::Trees => TREES_MAX_N,
            Population::Unicyclic => UNICYCLIC_MAX_N,
        }
    }

    fn min_n(self) -> usize {
        match self {
            Population::All => 1,
            Population::Trees => 2,
            Population::Unicyclic => 3,
        }
    }

    pub fn default_strategy(self) -> &'static str {
        match self {
            Population::All => "augment",
            Population::Trees => "leaf-augment",
            Population::Unicyclic => "tree-plus-edge",
        }
    }
}

impl fmt::Display for Population {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Population::All => "all",
            Population::Trees => "trees",
            Population::Unicyclic => "unicyclic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub n: usize,
    pub m: Option<usize>,
    pub connected_only: bool,
    pub irregular_only: bool,
    pub population: Population,
}

impl EnumerationSpec {
    pub fn all(n: usize) -> Self {
        EnumerationSpec {
            n,
            m: None,
            connected_only: false,
            irregular_only: false,
            population: Population::All,
        }
    }

    pub fn connected(n: usize) -> Self {
        EnumerationSpec {
            connected_only: true,
            ..Self::all(n)
        }
    }

    /// Connected graphs with `n` vertices and `m` edges.
    pub fn slice(n: usize, m: usize) -> Self {
        EnumerationSpec {
            m: Some(m),
            ..Self::connected(n)
        }
    }

    pub fn trees(n: usize) -> Self {
        EnumerationSpec {
            population: Population::Trees,
            ..Self::connected(n)
        }
    }

    pub fn unicyclic(n: usize) -> Self {
        EnumerationSpec {
            population: Population::Unicyclic,
            ..Self::connected(n)
        }
    }

    pub fn irregular(self) -> Self {
        EnumerationSpec {
            irregular_only: true,
            ..self
        }
    }

    pub fn check(&self) -> Result<()> {
        let pop = self.population;
        if self.n < pop.min_n() {
            return Err(Error::input(format!(
                "{pop} enumeration needs n >= {}, got {}",
                pop.min_n(),
                self.n
            )));
        }
        if self.n > pop.cap() {
            return Err(Error::capability(format!(
                "{pop} enumeration is capped at n <= {}, got {}",
                pop.cap(),
                self.n
            )));
        }
        Ok(())
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected_only || g.is_connected())
            && (!self.irregular_only || !g.degree_stats().is_regular())
            && self.m.is_none_or(|m| m == g.edge_count())
    }

    /// Edge count forced by the population, if any.
    fn implied_m(&self) -> Option<usize> {
        match self.population {
            Population::All => None,
            Population::Trees => Some(self.n - 1),
            Population::Unicyclic => Some(self.n),
        }
    }

    /// Stable text key, used for cache file names and report headers.
    pub fn key(&self) -> String {
        format!(
            "{}-n{}-m{}{}{}",
            self.population,
            self.n,
            self.m.map_or("any".to_string(), |m| m.to_string()),
            if self.connected_only {
                "-connected"
            } else {
                ""
            },
            if self.irregular_only {
                "-irregular"
            } else {
                ""
            },
        )
    }
}

impl fmt::Display for EnumerationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// A way of producing every isomorphism class of one population.
pub trait Enumerator: Send + Sync {
    fn name(&self) -> &'static str;
    fn population(&self) -> Population;
    fn description(&self) -> &'static str;
    /// Largest `n` the strategy is willing to run at.
    fn max_n(&self) -> usize;
    /// Sorted, duplicate-free canonical codes of the classes on `n`
    /// vertices, restricted to `m` edges when given. Runs on the current
    /// rayon pool.
    fn classes(&self, n: usize, m: Option<usize>) -> Result<Vec<CanonicalCode>>;
}

pub struct EnumeratorRegistry {
    entries: Vec<Box<dyn Enumerator>>,
}

impl EnumeratorRegistry {
    pub fn new() -> Self {
        EnumeratorRegistry {
            entries: Vec::new(),
        }
    }

    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(Box::new(Augment)).expect("unique");
        r.register(Box::new(Subsets)).expect("unique");
        r.register(Box::new(LeafAugment)).expect("unique");
        r.register(Box::new(Prufer)).expect("unique");
        r.register(Box::new(TreePlusEdge)).expect("unique");
        r
    }

    pub fn register(&mut self, e: Box<dyn Enumerator>) -> Result<()> {
        if self.get(e.name()).is_some() {
            return Err(Error::input(format!(
                "enumerator `{}` already registered",
                e.name()
            )));
        }
        self.entries.push(e);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn Enumerator> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Enumerator> {
        self.entries.iter().map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }
}

impl Default for EnumeratorRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    /// Strategy name; the population default when absent.
    pub strategy: Option<String>,
    /// Worker threads; the global rayon pool when absent.
    pub workers: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

/// Runs `f` on a pool of `workers` threads, or the global pool.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Error::input("worker count must be positive")),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::input(format!("cannot start {k} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<Graph>> {
    enumerate_with(spec, &EnumerationOptions::default())
}

/// One canonical representative per class passing every filter, ordered by
/// canonical code.
pub fn enumerate_with(spec: &EnumerationSpec, opts: &EnumerationOptions) -> Result<Vec<Graph>> {
    spec.check()?;
    let registry = EnumeratorRegistry::standard();
    let name = opts
        .strategy
        .as_deref()
        .unwrap_or(spec.population.default_strategy());
    let strategy = registry.get(name).ok_or_else(|| {
        Error::input(format!(
            "unknown enumerator `{name}` (known: {})",
            registry.names().join(", ")
        ))
    })?;
    if strategy.population() != spec.population {
        return Err(Error::input(format!(
            "enumerator `{name}` generates {} graphs, not {}",
            strategy.population(),
            spec.population
        )));
    }
    if spec.n > strategy.max_n() {
        return Err(Error::capability(format!(
            "enumerator `{name}` is capped at n <= {}, got {}",
            strategy.max_n(),
            spec.n
        )));
    }
    if let (Some(m), Some(forced)) = (spec.m, spec.implied_m()) {
        if m != forced {
            return Ok(Vec::new());
        }
    }

    let cache = opts.cache_dir.as_ref().map(EnumerationCache::new);
    if let Some(hit) = cache.as_ref().and_then(|c| c.load(spec)) {
        return Ok(hit);
    }
    let graphs = with_workers(opts.workers, || -> Result<Vec<Graph>> {
        use rayon::prelude::*;
        let codes = strategy.classes(spec.n, spec.m)?;
        Ok(codes
            .par_iter()
            .map(CanonicalCode::to_graph)
            .filter(|g| spec.accepts(g))
            .collect())
    })??;
    if let Some(c) = cache {
        c.store(spec, &graphs)?;
    }
    Ok(graphs)
}

pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    enumerate(&EnumerationSpec::trees(n))
}

pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    enumerate(&EnumerationSpec::unicyclic(n))
}
