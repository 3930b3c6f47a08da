//! 2-walk linear graphs and their two main eigenvalues.
//!
//! A graph is 2-walk `(a, b)`-linear when every vertex `u` satisfies
//! `S(u) = a·d(u) + b`, `S(u)` being the sum of the degrees of its
//! neighbours. Its main eigenvalues are then the roots of `x² - a·x - b`.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::measures::measure_set;
use crate::rational::{self, from_usize, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoWalkParams {
    pub a: i64,
    pub b: i64,
}

impl TwoWalkParams {
    pub fn discriminant(&self) -> i64 {
        self.a * self.a + 4 * self.b
    }
}

/// Outcome of fitting `S(u) = a·d(u) + b` over all vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "fit", rename_all = "snake_case")]
pub enum TwoWalkFit {
    Linear(TwoWalkParams),
    NotLinear,
    NonIntegral {
        #[serde(serialize_with = "rational::serialize")]
        a: Rational,
        #[serde(serialize_with = "rational::serialize")]
        b: Rational,
    },
    NegativeDiscriminant(TwoWalkParams),
}

pub fn neighbor_degree_sums(g: &Graph) -> Vec<usize> {
    let deg = g.degrees();
    (0..g.n())
        .map(|u| g.neighbors(u).map(|v| deg[v]).sum())
        .collect()
}

pub fn two_walk_fit(g: &Graph) -> Result<TwoWalkFit> {
    if !g.is_connected() {
        return Err(Error::precondition(
            "2-walk detection needs a connected graph",
        ));
    }
    let deg = g.degrees();
    let sums = neighbor_degree_sums(g);
    let u = 0;
    let Some(v) = (0..g.n()).find(|&v| deg[v] != deg[u]) else {
        return Err(Error::precondition(
            "2-walk parameters are not unique for a regular graph",
        ));
    };
    let a = (from_usize(sums[u]) - from_usize(sums[v])) / (from_usize(deg[u]) - from_usize(deg[v]));
    let b = from_usize(sums[u]) - &a * from_usize(deg[u]);
    if (0..g.n()).any(|w| from_usize(sums[w]) != &a * from_usize(deg[w]) + &b) {
        return Ok(TwoWalkFit::NotLinear);
    }
    if !a.is_integer() || !b.is_integer() {
        return Ok(TwoWalkFit::NonIntegral { a, b });
    }
    let p = TwoWalkParams {
        a: a.to_integer().to_i64().expect("fitted slope fits in i64"),
        b: b.to_integer()
            .to_i64()
            .expect("fitted intercept fits in i64"),
    };
    Ok(if p.discriminant() < 0 {
        TwoWalkFit::NegativeDiscriminant(p)
    } else {
        TwoWalkFit::Linear(p)
    })
}

/// `Some((a, b))` iff the graph is 2-walk linear with integral parameters
/// and real main eigenvalues.
pub fn two_walk_params(g: &Graph) -> Result<Option<TwoWalkParams>> {
    Ok(match two_walk_fit(g)? {
        TwoWalkFit::Linear(p) => Some(p),
        _ => None,
    })
}

/// `(λ, μ) = ½(a ± √(a² + 4b))`, with `λ >= μ`.
pub fn main_eigenvalues(p: TwoWalkParams) -> Result<(f64, f64)> {
    let disc = p.discriminant();
    if disc < 0 {
        return Err(Error::Domain(format!(
            "a² + 4b = {disc} < 0 for (a, b) = ({}, {})",
            p.a, p.b
        )));
    }
    let root = (disc as f64).sqrt();
    Ok(((p.a as f64 + root) / 2.0, (p.a as f64 - root) / 2.0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralIdentity {
    pub params: TwoWalkParams,
    /// `(λ - c)(c - μ)` with `c = 2m/n`, evaluated as `c·a + b - c²`.
    #[serde(serialize_with = "rational::serialize")]
    pub var_via_params: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub var: Rational,
    pub matches: bool,
}

pub fn variance_spectral_identity(g: &Graph) -> Result<SpectralIdentity> {
    let params =
        two_walk_params(g)?.ok_or_else(|| Error::precondition("graph is not 2-walk linear"))?;
    let c = g.degree_stats().average_degree;
    let var_via_params = &c * int(params.a) + int(params.b) - &c * &c;
    let var = measure_set(g).var;
    Ok(SpectralIdentity {
        params,
        matches: var_via_params == var,
        var_via_params,
        var,
    })
}

pub const POWER_TOLERANCE: f64 = 1e-9;
pub const POWER_MAX_ITERATIONS: usize = 100_000;

/// Largest adjacency eigenvalue by power iteration.
///
/// Iterates on `A + I`, which is primitive for connected graphs, so
/// bipartite graphs do not oscillate. Stops once the residual
/// `‖(A+I)x - θx‖` drops below `tol·θ`.
pub fn spectral_radius_estimate(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::precondition(
            "spectral radius estimate needs a connected graph",
        ));
    }
    let n = g.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for _ in 0..POWER_MAX_ITERATIONS {
        for u in 0..n {
            y[u] = x[u] + g.neighbors(u).map(|v| x[v]).sum::<f64>();
        }
        let theta: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - theta * a).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= POWER_TOLERANCE * theta {
            return Ok(theta - 1.0);
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for u in 0..n {
            x[u] = y[u] / norm;
        }
    }
    Err(Error::Numeric(format!(
        "power iteration did not converge in {POWER_MAX_ITERATIONS} steps"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_split, cycle, named, path, wheel};
    use crate::rational::ratio;

    #[test]
    fn grotzsch() {
        let g = named("grotzsch").unwrap();
        assert_eq!(
            two_walk_params(&g).unwrap(),
            Some(TwoWalkParams { a: 1, b: 10 })
        );
        let id = variance_spectral_identity(&g).unwrap();
        assert_eq!(id.var_via_params, ratio(50, 121));
        assert!(id.matches);
        let rho = spectral_radius_estimate(&g).unwrap();
        assert!((rho - (1.0 + 41f64.sqrt()) / 2.0).abs() < 1e-6);
    }

    #[test]
    fn wheels() {
        let w6 = wheel(6).unwrap();
        assert_eq!(
            two_walk_params(&w6).unwrap(),
            Some(TwoWalkParams { a: 2, b: 5 })
        );
        let w5 = wheel(5).unwrap();
        assert_eq!(
            two_walk_params(&w5).unwrap(),
            Some(TwoWalkParams { a: 2, b: 4 })
        );
        assert_eq!(
            variance_spectral_identity(&w5).unwrap().var_via_params,
            ratio(4, 25)
        );
    }

    #[test]
    fn paths_are_not_linear() {
        assert_eq!(
            two_walk_fit(&path(5).unwrap()).unwrap(),
            TwoWalkFit::NotLinear
        );
        assert_eq!(two_walk_params(&path(5).unwrap()).unwrap(), None);
        assert!(variance_spectral_identity(&path(5).unwrap()).is_err());
    }

    #[test]
    fn regular_is_a_precondition_error() {
        assert!(matches!(
            two_walk_params(&cycle(5).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn complete_split_identity() {
        for n in 3..=12 {
            for k in 1..n - 1 {
                let id = variance_spectral_identity(&complete_split(n, k).unwrap()).unwrap();
                assert!(id.matches, "CS({n},{k})");
            }
        }
    }

    #[test]
    fn eigenvalue_pairs() {
        let (l, m) = main_eigenvalues(TwoWalkParams { a: 1, b: 10 }).unwrap();
        assert!((l - 3.70156).abs() < 1e-5 && (m + 2.70156).abs() < 1e-5);
        assert!((l + m - 1.0).abs() < 1e-12 && (l * m + 10.0).abs() < 1e-12);
        assert_eq!(
            main_eigenvalues(TwoWalkParams { a: 0, b: 1 }).unwrap(),
            (1.0, -1.0)
        );
        let (l, m) = main_eigenvalues(TwoWalkParams { a: 2, b: 5 }).unwrap();
        assert!((l - (1.0 + 6f64.sqrt())).abs() < 1e-12 && (m - (1.0 - 6f64.sqrt())).abs() < 1e-12);
        assert!(matches!(
            main_eigenvalues(TwoWalkParams { a: 1, b: -1 }),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn regular_spectral_radius() {
        assert!((spectral_radius_estimate(&complete(4).unwrap()).unwrap() - 3.0).abs() < 1e-9);
        assert!((spectral_radius_estimate(&cycle(6).unwrap()).unwrap() - 2.0).abs() < 1e-9);
    }
}
