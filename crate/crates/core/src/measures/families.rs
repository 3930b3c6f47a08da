//! Closed forms for named families, trees, and sparse cyclic graphs.
//!
//! Everything here is an alternative route to values [`super::measure_set`]
//! computes from the definition; the verifier compares the two exactly.

use num_bigint::BigInt;
use serde::Serialize;

use super::Profile;
use crate::error::{Error, Result};
use crate::graph::{DegreeStats, Graph};
use crate::rational::{self, from_usize, int, ratio, Rational};

fn signed(v: usize) -> i64 {
    v as i64
}

/// `S(P_n) = 4(n-2)/n`, for `n >= 2`.
pub fn path_deviation(n: usize) -> Rational {
    ratio(4 * (signed(n) - 2), signed(n))
}

/// `Var(P_n) = 2(n-2)/n²`, for `n >= 2`.
pub fn path_variance(n: usize) -> Rational {
    ratio(2 * (signed(n) - 2), signed(n) * signed(n))
}

/// `S(W_n) = 2(n-1)(n-4)/n`.
pub fn wheel_deviation(n: usize) -> Rational {
    let n = signed(n);
    ratio(2 * (n - 1) * (n - 4), n)
}

/// `Var(W_n) = (n-1)(n-4)²/n²`.
pub fn wheel_variance(n: usize) -> Rational {
    let n = signed(n);
    ratio((n - 1) * (n - 4) * (n - 4), n * n)
}

/// `S(CS(n,k)) = 2k(n-k)(n-1-k)/n`.
pub fn complete_split_deviation(n: usize, k: usize) -> Rational {
    let (n, k) = (BigInt::from(n), BigInt::from(k));
    let one = BigInt::from(1);
    Rational::new(BigInt::from(2) * &k * (&n - &k) * (&n - &one - &k), n)
}

/// `Var(CS(n,k)) = k(n-k)(n-1-k)²/n²`.
pub fn complete_split_variance(n: usize, k: usize) -> Rational {
    let (n, k) = (BigInt::from(n), BigInt::from(k));
    let gap = &n - BigInt::from(1) - &k;
    Rational::new(&k * (&n - &k) * &gap * &gap, &n * &n)
}

/// `Ω(CS(n,k)) = (n-k-1)/(2n)`.
pub fn complete_split_omega(n: usize, k: usize) -> Rational {
    ratio(signed(n) - signed(k) - 1, 2 * signed(n))
}

/// `m(CS(n,k)) = [(2n-1)k - k²]/2`.
pub fn complete_split_edges(n: usize, k: usize) -> usize {
    ((2 * n - 1) * k - k * k) / 2
}

/// `Σ_{i >= from} N_i · f(i)` over the degree histogram.
fn weighted_sum(stats: &DegreeStats, from: usize, f: impl Fn(i64) -> i64) -> Rational {
    int(stats
        .histogram
        .range(from..)
        .map(|(&i, &c)| signed(c) * f(signed(i)))
        .sum())
}

/// Closed-form tree values next to the bounds on IRD.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeFormulas {
    /// `4(n-2)/n + 2(n-2)/n · Σ_{i>=3} N_i(i-2)`
    #[serde(serialize_with = "rational::serialize")]
    pub s_closed: Rational,
    /// `2(n-2)/n² + (1/n) Σ_{i>=3} N_i(i-1)(i-2)`
    #[serde(serialize_with = "rational::serialize")]
    pub var_closed: Rational,
    /// `n/2 · (Δ-1)`
    #[serde(serialize_with = "rational::serialize")]
    pub irr_closed: Rational,
    /// Upper bound on IRD, tight iff `Ds ⊆ {1, 2, Δ}`.
    #[serde(serialize_with = "rational::serialize")]
    pub ird_upper: Rational,
    /// Coarser upper bound using `n - N_1 - N_2` branching vertices.
    #[serde(serialize_with = "rational::serialize")]
    pub ird_upper_coarse: Rational,
    /// Lower bound on IRD, tight iff `Ds ⊆ {1, 2, Δ}`.
    #[serde(serialize_with = "rational::serialize")]
    pub ird_lower: Rational,
    /// `2(n-2)·N_1 / n`
    #[serde(serialize_with = "rational::serialize")]
    pub n1_based_s: Rational,
    /// `(1/n) Σ_{i>=3} N_i(i-2)(i - (2n-2)/n)`, equal to `Var - S/(2n)`.
    #[serde(serialize_with = "rational::serialize")]
    pub var_minus_half_s: Rational,
}

pub fn tree_formulas(t: &Graph) -> Result<TreeFormulas> {
    let class = t.classify();
    if !class.is_tree || t.n() < 2 {
        return Err(Error::precondition("tree formulas need a tree with n >= 2"));
    }
    let st = t.degree_stats();
    let n = signed(st.n);
    let nr = int(n);
    let delta = signed(st.max_degree);
    let n_delta = signed(st.count_max());
    let branching = signed(st.n - st.count(1) - st.count(2));

    let excess = weighted_sum(&st, 3, |i| i - 2);
    let s_closed = ratio(4 * (n - 2), n) + ratio(2 * (n - 2), n) * &excess;
    let var_closed = ratio(2 * (n - 2), n * n) + weighted_sum(&st, 3, |i| (i - 1) * (i - 2)) / &nr;

    let base = int(4 * n_delta * (delta - 1));
    let ird_upper =
        (&base + int(2 * n_delta * (delta - 1)) * &excess) / int(2 + (delta - 1) * n_delta);
    let ird_upper_coarse = (&base + int(2 * n_delta * (delta - 2) * (delta - 1) * branching))
        / int(2 + (delta - 1) * n_delta);
    let ird_lower = (&base + int(2 * n_delta * n_delta * (delta - 2) * (delta - 1)))
        / int(2 + (delta - 2) * branching + n_delta);

    let mean = ratio(2 * n - 2, n);
    let var_minus_half_s = st
        .histogram
        .range(3..)
        .map(|(&i, &c)| from_usize(c) * from_usize(i - 2) * (from_usize(i) - &mean))
        .sum::<Rational>()
        / &nr;

    Ok(TreeFormulas {
        s_closed,
        var_closed,
        irr_closed: &nr / int(2) * int(delta - 1),
        ird_upper,
        ird_upper_coarse,
        ird_lower,
        n1_based_s: ratio(2 * (n - 2) * signed(st.count(1)), n),
        var_minus_half_s,
    })
}

/// Closed forms for connected graphs with `1 <= c <= (n+2)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicFormulas {
    pub cyclomatic: usize,
    /// `(2/n) Σ_{i>=3} N_i(in - 2m)`
    #[serde(serialize_with = "rational::serialize")]
    pub s_closed: Rational,
    /// `(1/n) Σ_{i>=3} N_i(i-1)(i-2) - 2(2m-n)(m-n)/n²`
    #[serde(serialize_with = "rational::serialize")]
    pub var_closed: Rational,
    /// Unicyclic only: `2·N_1`.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub unicyclic_s: Option<Rational>,
    /// Unicyclic only: `Σ_{i>=4} N_i(i-2)(i-3)`, equal to `n·Var - S`.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub unicyclic_excess: Option<Rational>,
    /// Irregular only: `Ω - (1/n - 2/S)`.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub omega_floor_slack: Option<Rational>,
    /// Unicyclic other than a cycle: `Ω - 1/n`.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub unicyclic_omega_slack: Option<Rational>,
}

pub fn cyclic_formulas(g: &Graph) -> Result<CyclicFormulas> {
    let p = Profile::new(g);
    let c = p
        .class
        .cyclomatic
        .ok_or_else(|| Error::precondition("cyclic formulas need a connected graph"))?;
    if c < 1 || 2 * c > p.n() + 2 {
        return Err(Error::precondition(format!(
            "cyclomatic number {c} outside 1..=(n+2)/2"
        )));
    }
    let st = &p.stats;
    let (n, m) = (signed(p.n()), signed(p.m()));
    let nr = int(n);
    let s_closed = int(2) * weighted_sum(st, 3, |i| i * n - 2 * m) / &nr;
    let var_closed =
        weighted_sum(st, 3, |i| (i - 1) * (i - 2)) / &nr - ratio(2 * (2 * m - n) * (m - n), n * n);
    let unicyclic = p.class.is_unicyclic;
    let omega_floor_slack = p
        .measures
        .omega
        .as_ref()
        .map(|o| o - (int(1) / &nr - int(2) / &p.measures.s));
    let unicyclic_omega_slack = p
        .measures
        .omega
        .as_ref()
        .filter(|_| unicyclic)
        .map(|o| o - int(1) / &nr);
    Ok(CyclicFormulas {
        cyclomatic: c,
        s_closed,
        var_closed,
        unicyclic_s: unicyclic.then(|| int(2 * signed(st.count(1)))),
        unicyclic_excess: unicyclic.then(|| weighted_sum(st, 4, |i| (i - 2) * (i - 3))),
        omega_floor_slack,
        unicyclic_omega_slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::measures::measure_set;

    #[test]
    fn path_closed_forms() {
        assert_eq!(path_deviation(10), ratio(16, 5));
        assert_eq!(path_variance(10), ratio(4, 25));
        let f = tree_formulas(&generators::path(10).unwrap()).unwrap();
        assert_eq!(f.s_closed, ratio(16, 5));
        assert_eq!(f.var_closed, ratio(4, 25));
    }

    #[test]
    fn star_and_spider() {
        let f = tree_formulas(&generators::star(4).unwrap()).unwrap();
        assert_eq!(f.n1_based_s, int(3));
        assert_eq!(f.s_closed, int(3));

        // spider: centre 0 with legs of length 2, 2 and 1 -> (3, 2, 2, 2, 1, 1, 1)
        let spider =
            Graph::from_edge_list(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let f = tree_formulas(&spider).unwrap();
        assert_eq!(f.n1_based_s, ratio(30, 7));
        assert_eq!(measure_set(&spider).s, ratio(30, 7));
    }

    #[test]
    fn tree_formulas_reject_non_trees() {
        assert!(matches!(
            tree_formulas(&generators::cycle(4).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cycle_and_tadpole() {
        let f = cyclic_formulas(&generators::cycle(6).unwrap()).unwrap();
        assert_eq!(f.s_closed, int(0));
        assert_eq!(f.var_closed, int(0));

        let tadpole = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let f = cyclic_formulas(&tadpole).unwrap();
        assert_eq!(f.unicyclic_s, Some(int(2)));
        assert_eq!(measure_set(&tadpole).s, int(2));
    }

    #[test]
    fn unicyclic_with_degrees_up_to_three_has_n_var_equal_s() {
        let tadpole = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let ms = measure_set(&tadpole);
        assert_eq!(int(5) * &ms.var, ms.s);
        assert_eq!(
            cyclic_formulas(&tadpole).unwrap().unicyclic_excess,
            Some(int(0))
        );
    }

    #[test]
    fn cyclic_formulas_check_range() {
        assert!(cyclic_formulas(&generators::path(4).unwrap()).is_err());
        assert!(cyclic_formulas(&generators::complete(6).unwrap()).is_err());
    }

    #[test]
    fn complete_split_closed_forms() {
        assert_eq!(complete_split_deviation(7, 2), ratio(80, 7));
        assert_eq!(complete_split_variance(7, 2), ratio(160, 49));
        assert_eq!(complete_split_deviation(12, 4), ratio(112, 3));
        assert_eq!(complete_split_variance(12, 4), ratio(98, 9));
        assert_eq!(complete_split_edges(7, 2), 11);
        assert_eq!(complete_split_omega(7, 2), ratio(2, 7));
    }
}
