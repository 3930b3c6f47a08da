//! Degree-based irregularity measures in exact arithmetic.
//!
//! For a graph with degrees `d_i`, `m` edges and average degree `a = 2m/n`:
//!
//! * `M1  = Σ d_i²` (first Zagreb index)
//! * `S   = Σ |d_i - a|` (degree deviation)
//! * `Var = (1/n) Σ (d_i - a)²` (degree variance)
//! * `IRD = 2 N_Δ N_δ / (N_Δ + N_δ) · (Δ - δ)`
//! * `IRR = n/2 · (Δ - δ)`
//! * `Ω   = Var / S`, only for irregular graphs
//!
//! where `N_Δ`, `N_δ` count vertices of maximum and minimum degree.

mod bounds;
mod families;

pub use bounds::{
    bound_report, Agreement, Bound, BoundRecord, BoundRegistry, EqualityRule, Relation,
};
pub use families::{
    complete_split_deviation, complete_split_edges, complete_split_omega, complete_split_variance,
    cyclic_formulas, path_deviation, path_variance, tree_formulas, wheel_deviation, wheel_variance,
    CyclicFormulas, TreeFormulas,
};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Classification, DegreeStats, Graph};
use crate::rational::{self, from_usize, int, Rational};

/// Exact values of every measure for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasureSet {
    #[serde(serialize_with = "rational::serialize")]
    pub m1: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub s: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub var: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub ird: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub irr: Rational,
    /// `Var / S`; absent for regular graphs.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub omega: Option<Rational>,
}

pub fn measure_set(g: &Graph) -> MeasureSet {
    measures_from_stats(&g.degree_stats())
}

/// Evaluates every measure straight from its definition over the degree list.
pub fn measures_from_stats(stats: &DegreeStats) -> MeasureSet {
    let n = from_usize(stats.n);
    let avg = &stats.average_degree;
    let deviations: Vec<Rational> = stats.degrees.iter().map(|&d| from_usize(d) - avg).collect();
    let s: Rational = deviations.iter().map(|x| x.abs()).sum();
    let var: Rational = deviations.iter().map(|x| x * x).sum::<Rational>() / &n;
    let m1: Rational = stats.degrees.iter().map(|&d| from_usize(d * d)).sum();
    let spread = from_usize(stats.spread());
    let (n_max, n_min) = (stats.count_max(), stats.count_min());
    let ird = rational::ratio(2 * (n_max * n_min) as i64, (n_max + n_min) as i64) * &spread;
    let irr = &n / int(2) * &spread;
    let omega = (!s.is_zero()).then(|| &var / &s);
    MeasureSet {
        m1,
        s,
        var,
        ird,
        irr,
        omega,
    }
}

pub fn first_zagreb(g: &Graph) -> Rational {
    g.degrees().iter().map(|&d| from_usize(d * d)).sum()
}

/// Everything the bound and suite checks look at for one graph.
#[derive(Debug, Clone)]
pub struct Profile {
    pub stats: DegreeStats,
    pub class: Classification,
    pub measures: MeasureSet,
}

impl Profile {
    pub fn new(g: &Graph) -> Self {
        let stats = g.degree_stats();
        let measures = measures_from_stats(&stats);
        Profile {
            class: g.classify(),
            stats,
            measures,
        }
    }

    pub fn n(&self) -> usize {
        self.stats.n
    }

    pub fn m(&self) -> usize {
        self.stats.edge_count
    }

    /// True when every degree lies in `{δ, 2m/n, Δ}`.
    pub fn degrees_at_extremes_or_mean(&self) -> bool {
        let avg = &self.stats.average_degree;
        self.stats.degree_set.iter().all(|&d| {
            d == self.stats.min_degree || d == self.stats.max_degree || &from_usize(d) == avg
        })
    }
}

/// Identities that hold for connected bidegreed graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BidegreedIdentities {
    pub s_equals_ird: bool,
    /// `N_Δ N_δ (Δ - δ)² / n²`.
    #[serde(serialize_with = "rational::serialize")]
    pub var_closed: Rational,
    pub var_closed_matches: bool,
    /// `2n·Var = (Δ - δ)·S`.
    pub variance_by_deviation_holds: bool,
}

pub fn bidegreed_identities(g: &Graph) -> Result<BidegreedIdentities> {
    let p = Profile::new(g);
    if !p.class.is_connected || !p.class.is_bidegreed {
        return Err(Error::precondition(
            "bidegreed identities need a connected bidegreed graph",
        ));
    }
    let n = from_usize(p.n());
    let spread = from_usize(p.stats.spread());
    let var_closed =
        from_usize(p.stats.count_max() * p.stats.count_min()) * &spread * &spread / (&n * &n);
    let ms = &p.measures;
    Ok(BidegreedIdentities {
        s_equals_ird: ms.s == ms.ird,
        var_closed_matches: var_closed == ms.var,
        var_closed,
        variance_by_deviation_holds: int(2) * &n * &ms.var == &spread * &ms.s,
    })
}

/// `(Δ - 2m/n)(2m/n - δ)` against the variance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarianceDecomposition {
    #[serde(serialize_with = "rational::serialize")]
    pub product_bound: Rational,
    pub holds: bool,
    pub is_exact: bool,
}

pub fn variance_decomposition(g: &Graph) -> Result<VarianceDecomposition> {
    if !g.is_connected() {
        return Err(Error::precondition(
            "variance decomposition needs a connected graph",
        ));
    }
    let p = Profile::new(g);
    let avg = &p.stats.average_degree;
    let product_bound =
        (from_usize(p.stats.max_degree) - avg) * (avg - from_usize(p.stats.min_degree));
    Ok(VarianceDecomposition {
        holds: p.measures.var <= product_bound,
        is_exact: p.measures.var == product_bound,
        product_bound,
    })
}

/// `|Σ a_i x_i|` against `(max a - min a) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenteredBound {
    pub value: Rational,
    pub bound: Rational,
}

impl CenteredBound {
    pub fn holds(&self) -> bool {
        self.value <= self.bound
    }

    pub fn is_tight(&self) -> bool {
        self.value == self.bound
    }
}

/// Weighted sum of a sequence `x` with `Σ x = 0` and `Σ |x| = 1`.
pub fn centered_sequence_bound(a: &[Rational], x: &[Rational]) -> Result<CenteredBound> {
    if a.len() != x.len() || a.is_empty() {
        return Err(Error::input("sequences must be non-empty and equally long"));
    }
    if !x.iter().sum::<Rational>().is_zero() {
        return Err(Error::input("x must sum to zero"));
    }
    if x.iter().map(|v| v.abs()).sum::<Rational>() != int(1) {
        return Err(Error::input("x must have absolute sum one"));
    }
    let value = a
        .iter()
        .zip(x)
        .map(|(ai, xi)| ai * xi)
        .sum::<Rational>()
        .abs();
    let max = a.iter().max().expect("non-empty");
    let min = a.iter().min().expect("non-empty");
    Ok(CenteredBound {
        value,
        bound: (max - min) / int(2),
    })
}
