use std::collections::BTreeMap;

use super::{Outcome, Subject};
use crate::error::{Error, Result};
use crate::measures::{
    bidegreed_identities, cyclic_formulas, tree_formulas, variance_decomposition, BoundRegistry,
    Profile,
};
use crate::rational::{from_usize, int, ratio, Rational};
use crate::spectral::{main_eigenvalues, spectral_radius_estimate, two_walk_fit, TwoWalkFit};

/// A family of checks applied to every graph of a population.
pub trait Suite: Send + Sync {
    fn id(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Checks one graph; graphs outside the suite's scope are skipped.
    fn check(&self, s: &Subject, out: &mut Outcome);
    /// Checks that compare graphs against each other. Only called for
    /// exhaustive populations; `subjects` is sorted by canonical code.
    fn check_population(&self, _subjects: &[Subject], _out: &mut Outcome) {}
}

/// Suites making up `all`, in report order.
pub const PROVED_SUITES: &[&str] = &[
    "bounds",
    "bidegreed",
    "balanced",
    "degree-counts",
    "trees",
    "cyclic",
    "omega",
    "spectral",
    "max-zagreb-universal",
    "decomposition",
];

pub const CONJECTURE_SUITES: &[&str] = &["deviation-conjecture", "omega-conjecture"];

pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn new() -> Self {
        SuiteRegistry { suites: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = Self::new();
        for id in PROVED_SUITES.iter().chain(CONJECTURE_SUITES) {
            r.register(basic(id).expect("known suite")).expect("unique");
        }
        for id in BoundRegistry::standard().ids() {
            r.register(Box::new(BoundSuite { id, only: Some(id) }))
                .expect("unique");
        }
        r.register(Box::new(Composite::new(
            "all",
            "every suite of proved results",
            PROVED_SUITES,
        )))
        .expect("unique");
        r.register(Box::new(Composite::new(
            "conjectures",
            "both conjecture scans",
            CONJECTURE_SUITES,
        )))
        .expect("unique");
        r
    }

    pub fn register(&mut self, suite: Box<dyn Suite>) -> Result<()> {
        if self.get(suite.id()).is_some() {
            return Err(Error::input(format!(
                "suite `{}` already registered",
                suite.id()
            )));
        }
        self.suites.push(suite);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&dyn Suite> {
        self.suites
            .iter()
            .find(|s| s.id() == id)
            .map(|s| s.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Suite> {
        self.suites.iter().map(|s| s.as_ref())
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

fn basic(id: &str) -> Option<Box<dyn Suite>> {
    Some(match id {
        "bounds" => Box::new(BoundSuite {
            id: "bounds",
            only: None,
        }),
        "bidegreed" => Box::new(Bidegreed),
        "balanced" => Box::new(Balanced),
        "degree-counts" => Box::new(DegreeCounts),
        "trees" => Box::new(Trees),
        "cyclic" => Box::new(Cyclic),
        "omega" => Box::new(OmegaIdentities),
        "spectral" => Box::new(Spectral),
        "max-zagreb-universal" => Box::new(MaxZagrebUniversal),
        "decomposition" => Box::new(Decomposition),
        "deviation-conjecture" => Box::new(DeviationConjecture),
        "omega-conjecture" => Box::new(OmegaConjecture),
        _ => return None,
    })
}

struct Composite {
    id: &'static str,
    description: &'static str,
    members: Vec<Box<dyn Suite>>,
}

impl Composite {
    fn new(id: &'static str, description: &'static str, members: &[&str]) -> Self {
        Composite {
            id,
            description,
            members: members
                .iter()
                .map(|m| basic(m).expect("known suite"))
                .collect(),
        }
    }
}

impl Suite for Composite {
    fn id(&self) -> &'static str {
        self.id
    }
    fn description(&self) -> &'static str {
        self.description
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        for m in &self.members {
            m.check(s, out);
        }
    }
    fn check_population(&self, subjects: &[Subject], out: &mut Outcome) {
        for m in &self.members {
            m.check_population(subjects, out);
        }
    }
}

fn n_of(p: &Profile) -> Rational {
    from_usize(p.n())
}

fn spread(p: &Profile) -> Rational {
    from_usize(p.stats.spread())
}

fn degree_set_within(p: &Profile, allowed: &[usize]) -> bool {
    p.stats.degree_set.iter().all(|d| allowed.contains(d))
}

fn is_path(p: &Profile) -> bool {
    p.class.is_tree && p.stats.max_degree <= 2
}

/// Every registered bound: a failed inequality is a violation, an equality
/// mismatch is a violation unless the bound's condition is ambiguous.
struct BoundSuite {
    id: &'static str,
    only: Option<&'static str>,
}

impl Suite for BoundSuite {
    fn id(&self) -> &'static str {
        self.id
    }
    fn description(&self) -> &'static str {
        if self.only.is_some() {
            "a single inequality with its equality condition"
        } else {
            "every registered inequality with its equality condition"
        }
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let registry = BoundRegistry::standard();
        for bound in registry
            .iter()
            .filter(|b| self.only.is_none_or(|id| id == b.id()))
        {
            let rec = bound.evaluate(&s.profile);
            if !rec.applicable() {
                continue;
            }
            out.checks += 1;
            if !rec.holds {
                out.fail(
                    s,
                    rec.bound_id,
                    rec.lhs.as_ref(),
                    rec.rhs.as_ref(),
                    bound.statement().to_string(),
                );
            } else if rec.equality_mismatch() {
                if bound.equality_condition_ambiguous() {
                    out.finding(s, rec.bound_id, rec.is_equality, rec.predicted_equality);
                } else {
                    out.fail(
                        s,
                        rec.bound_id,
                        rec.lhs.as_ref(),
                        rec.rhs.as_ref(),
                        format!(
                            "equality observed={}, predicted={}",
                            rec.is_equality, rec.predicted_equality
                        ),
                    );
                }
            }
        }
    }
}

/// Connected bidegreed graphs: `S = IRD`, the closed variance, `2n·Var =
/// (Δ-δ)·S`, and `S <= IRR` with equality exactly when balanced.
struct Bidegreed;

impl Suite for Bidegreed {
    fn id(&self) -> &'static str {
        "bidegreed"
    }
    fn description(&self) -> &'static str {
        "identities of connected graphs with two distinct degrees"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        if !(p.class.is_connected && p.class.is_bidegreed) {
            return;
        }
        let ms = &p.measures;
        let ids = bidegreed_identities(&s.graph).expect("connected bidegreed");
        out.identity(s, "bidegreed-deviation-equals-ird", &ms.s, &ms.ird);
        out.identity(
            s,
            "bidegreed-variance-closed-form",
            &ids.var_closed,
            &ms.var,
        );
        out.identity(
            s,
            "bidegreed-variance-by-deviation",
            &(int(2) * n_of(p) * &ms.var),
            &(spread(p) * &ms.s),
        );
        let eq = out.at_most(s, "bidegreed-deviation-by-irr", &ms.s, &ms.irr, false);
        out.equality_iff(
            s,
            "bidegreed-deviation-by-irr",
            eq,
            p.class.is_balanced_bidegreed,
            false,
        );
    }
}

/// Balanced bidegreed graphs: `S = IRR` and `n²·Var = S²`.
struct Balanced;

impl Suite for Balanced {
    fn id(&self) -> &'static str {
        "balanced"
    }
    fn description(&self) -> &'static str {
        "identities of balanced bidegreed graphs"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        if !p.class.is_balanced_bidegreed {
            return;
        }
        let ms = &p.measures;
        let n = n_of(p);
        out.identity(s, "balanced-deviation-equals-irr", &ms.s, &ms.irr);
        out.identity(
            s,
            "balanced-deviation-root-variance",
            &(&n * &n * &ms.var),
            &(&ms.s * &ms.s),
        );
    }
}

/// Leaf and degree-2 counts in terms of the cyclomatic number.
struct DegreeCounts;

impl Suite for DegreeCounts {
    fn id(&self) -> &'static str {
        "degree-counts"
    }
    fn description(&self) -> &'static str {
        "N_1 and N_2 from the cyclomatic number and higher degree counts"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        // an isolated vertex has degree 0, which the counts do not cover
        let Some(c) = p.class.cyclomatic.filter(|_| p.n() >= 2) else {
            return;
        };
        let (n, c) = (p.n() as i64, c as i64);
        let high = |f: fn(i64) -> i64| -> i64 {
            p.stats
                .histogram
                .range(3..)
                .map(|(&i, &k)| k as i64 * f(i as i64))
                .sum()
        };
        let n1 = 2 - 2 * c + high(|i| i - 2);
        let n2 = 2 * c + n - 2 - high(|i| i - 1);
        out.identity(s, "leaf-count", &from_usize(p.stats.count(1)), &int(n1));
        out.identity(
            s,
            "degree-two-count",
            &from_usize(p.stats.count(2)),
            &int(n2),
        );
    }
}

struct Trees;

impl Suite for Trees {
    fn id(&self) -> &'static str {
        "trees"
    }
    fn description(&self) -> &'static str {
        "closed forms and extremal bounds for trees"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        if !p.class.is_tree || p.n() < 2 {
            return;
        }
        let f = tree_formulas(&s.graph).expect("tree with n >= 2");
        let ms = &p.measures;
        let n = n_of(p);
        let nn = p.n() as i64;
        let path = is_path(p);
        let three_degrees = degree_set_within(p, &[1, 2, p.stats.max_degree]);

        out.identity(s, "tree-deviation-closed-form", &f.s_closed, &ms.s);
        out.identity(s, "tree-variance-closed-form", &f.var_closed, &ms.var);
        out.identity(s, "tree-irr-closed-form", &f.irr_closed, &ms.irr);

        let eq = out.at_most(s, "tree-ird-upper", &ms.ird, &f.ird_upper, false);
        out.equality_iff(s, "tree-ird-upper", eq, three_degrees, false);
        let eq = out.at_most(
            s,
            "tree-ird-upper-coarse",
            &ms.ird,
            &f.ird_upper_coarse,
            false,
        );
        out.equality_iff(s, "tree-ird-upper-coarse", eq, three_degrees, false);
        let eq = out.at_most(s, "tree-ird-lower", &f.ird_lower, &ms.ird, false);
        out.equality_iff(s, "tree-ird-lower", eq, three_degrees, false);

        let eq = out.at_most(
            s,
            "tree-deviation-min",
            &ratio(4 * (nn - 2), nn),
            &ms.s,
            false,
        );
        out.equality_iff(s, "tree-deviation-min", eq, path, false);
        let eq = out.at_most(
            s,
            "tree-variance-min",
            &ratio(2 * (nn - 2), nn * nn),
            &ms.var,
            false,
        );
        out.equality_iff(s, "tree-variance-min", eq, path, false);
        if p.n() >= 3 {
            let eq = out.at_most(s, "tree-irr-min", &(&n / int(2)), &ms.irr, false);
            out.equality_iff(s, "tree-irr-min", eq, path, false);
            let eq = out.at_most(s, "tree-deviation-at-least-ird", &ms.ird, &ms.s, false);
            out.equality_iff(
                s,
                "tree-deviation-at-least-ird",
                eq,
                p.class.is_bidegreed,
                false,
            );
        }

        let excess = &ms.var - &ms.s / (int(2) * &n);
        out.identity(s, "tree-variance-excess", &f.var_minus_half_s, &excess);
        if p.n() >= 4 {
            let eq = out.at_most(s, "tree-omega-min", &ms.s, &(int(2) * &n * &ms.var), false);
            out.equality_iff(s, "tree-omega-min", eq, path, false);
        }
        if p.stats.count(1) >= 2 {
            out.identity(s, "tree-deviation-from-leaves", &f.n1_based_s, &ms.s);
        }
    }
}

/// Connected graphs with `1 <= c <= (n+2)/2`, with extra identities for
/// unicyclic graphs.
struct Cyclic;

impl Suite for Cyclic {
    fn id(&self) -> &'static str {
        "cyclic"
    }
    fn description(&self) -> &'static str {
        "closed forms for sparse cyclic graphs and unicyclic identities"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        let Ok(f) = cyclic_formulas(&s.graph) else {
            return;
        };
        let ms = &p.measures;
        let n = n_of(p);
        out.identity(s, "cyclic-deviation-closed-form", &f.s_closed, &ms.s);
        out.identity(s, "cyclic-variance-closed-form", &f.var_closed, &ms.var);
        if !p.class.is_unicyclic {
            return;
        }
        let sum = |g: fn(i64) -> i64| -> Rational {
            int(p
                .stats
                .histogram
                .range(3..)
                .map(|(&i, &k)| k as i64 * g(i as i64))
                .sum())
        };
        let leaves = int(2 * p.stats.count(1) as i64);
        out.identity(s, "unicyclic-deviation-from-leaves", &leaves, &ms.s);
        out.identity(
            s,
            "unicyclic-deviation-sum",
            &(int(2) * sum(|i| i - 2)),
            &ms.s,
        );
        out.identity(
            s,
            "unicyclic-variance-sum",
            &(sum(|i| (i - 1) * (i - 2)) / &n),
            &ms.var,
        );
        let excess = f.unicyclic_excess.as_ref().expect("unicyclic");
        out.identity(
            s,
            "unicyclic-variance-excess",
            excess,
            &(&n * &ms.var - &ms.s),
        );
        if !p.class.is_regular {
            let eq = out.at_most(s, "unicyclic-omega-floor", &ms.s, &(&n * &ms.var), false);
            out.equality_iff(
                s,
                "unicyclic-omega-floor",
                eq,
                degree_set_within(p, &[1, 2, 3]),
                false,
            );
        }
        let delta = p.stats.max_degree;
        if delta >= 3 && p.stats.degree_set == [1, 2, delta] {
            out.identity(s, "unicyclic-tridegreed-ird", &ms.ird, &ms.s);
        }
    }
}

/// `Ω` identities: `2·Var < S` when irregular, `Ω = (Δ-δ)/(2n)` when
/// bidegreed, and `Ω = 1/(2n)` when the two degrees differ by one.
struct OmegaIdentities;

impl Suite for OmegaIdentities {
    fn id(&self) -> &'static str {
        "omega"
    }
    fn description(&self) -> &'static str {
        "ratio Var/S on irregular and bidegreed graphs"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        if !p.class.is_connected || p.class.is_regular {
            return;
        }
        let ms = &p.measures;
        let omega = ms.omega.as_ref().expect("irregular");
        out.at_most(
            s,
            "variance-below-half-deviation",
            &(int(2) * &ms.var),
            &ms.s,
            true,
        );
        if p.class.is_bidegreed {
            let gap = spread(p) / (int(2) * n_of(p));
            out.identity(s, "bidegreed-omega", omega, &gap);
            if p.stats.spread() == 1 {
                out.identity(s, "unit-gap-omega", omega, &(int(1) / (int(2) * n_of(p))));
            }
        }
    }
}

/// 2-walk linear graphs: integral `(a, b)` with `a >= 0`, the variance
/// identity, and the spectral radius equal to the larger main eigenvalue.
struct Spectral;

pub const SPECTRAL_TOLERANCE: f64 = 1e-6;

impl Suite for Spectral {
    fn id(&self) -> &'static str {
        "spectral"
    }
    fn description(&self) -> &'static str {
        "2-walk linear detection, variance identity and spectral radius"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        if !p.class.is_connected || p.class.is_regular {
            return;
        }
        let fit = two_walk_fit(&s.graph).expect("connected irregular");
        let params = match fit {
            TwoWalkFit::NotLinear => return,
            TwoWalkFit::Linear(params) => params,
            other => {
                out.assert(s, "two-walk-integral", false, || format!("{other:?}"));
                return;
            }
        };
        out.assert(s, "two-walk-nonnegative-slope", params.a >= 0, || {
            format!("a = {}", params.a)
        });
        let c = &p.stats.average_degree;
        let via = c * int(params.a) + int(params.b) - c * c;
        out.identity(s, "two-walk-variance", &via, &p.measures.var);
        let (lambda, _) = main_eigenvalues(params).expect("real main eigenvalues");
        match spectral_radius_estimate(&s.graph) {
            Ok(rho) => out.assert(
                s,
                "two-walk-spectral-radius",
                (rho - lambda).abs() <= SPECTRAL_TOLERANCE,
                || format!("power iteration {rho} vs main eigenvalue {lambda}"),
            ),
            Err(e) => out.assert(s, "two-walk-spectral-radius", false, || e.to_string()),
        }
    }
}

/// Among the connected irregular graphs of each order in the population,
/// every graph of largest `M1` has a universal vertex.
struct MaxZagrebUniversal;

impl Suite for MaxZagrebUniversal {
    fn id(&self) -> &'static str {
        "max-zagreb-universal"
    }
    fn description(&self) -> &'static str {
        "maximal-M1 connected irregular graphs of each order have a universal vertex"
    }
    fn check(&self, _: &Subject, _: &mut Outcome) {}
    fn check_population(&self, subjects: &[Subject], out: &mut Outcome) {
        let mut best: BTreeMap<usize, (Rational, Vec<&Subject>)> = BTreeMap::new();
        for s in subjects {
            let p = &s.profile;
            if !p.class.is_connected || p.class.is_regular {
                continue;
            }
            let m1 = &p.measures.m1;
            let entry = best
                .entry(p.n())
                .or_insert_with(|| (m1.clone(), Vec::new()));
            if *m1 > entry.0 {
                *entry = (m1.clone(), Vec::new());
            }
            if *m1 == entry.0 {
                entry.1.push(s);
            }
        }
        for (_, (_, winners)) in best {
            for s in winners {
                out.assert(
                    s,
                    "max-zagreb-universal",
                    s.profile.stats.universal_count >= 1,
                    || "no universal vertex".to_string(),
                );
            }
        }
    }
}

/// `Var <= (Δ - 2m/n)(2m/n - δ)`, exact for bidegreed graphs.
struct Decomposition;

impl Suite for Decomposition {
    fn id(&self) -> &'static str {
        "decomposition"
    }
    fn description(&self) -> &'static str {
        "variance against the product of the extreme deviations"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let Ok(d) = variance_decomposition(&s.graph) else {
            return;
        };
        let var = &s.profile.measures.var;
        out.at_most(s, "variance-product-bound", var, &d.product_bound, false);
        if s.profile.class.is_bidegreed {
            out.identity(s, "bidegreed-variance-product", var, &d.product_bound);
        }
    }
}

/// `S >= IRD` and `Var >= IRR·IRD/n²`, conjectured for every graph, with
/// equality conjectured exactly when `Ds ⊆ {δ, 2m/n, Δ}`.
struct DeviationConjecture;

impl Suite for DeviationConjecture {
    fn id(&self) -> &'static str {
        "deviation-conjecture"
    }
    fn description(&self) -> &'static str {
        "S >= IRD and Var >= IRR·IRD/n² on all graphs, connected or not"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        let ms = &p.measures;
        let n = n_of(p);
        let avg = &p.stats.average_degree;
        let predicted =
            p.stats.degree_set.iter().all(|&d| {
                d == p.stats.min_degree || d == p.stats.max_degree || from_usize(d) == *avg
            });
        let rhs = &ms.irr * &ms.ird / (&n * &n);
        let sides = [
            ("deviation-at-least-ird", &ms.ird, &ms.s),
            ("variance-at-least-irr-ird", &rhs, &ms.var),
        ];
        for (id, small, big) in sides {
            let eq = out.at_most(s, id, small, big, false);
            if eq && !p.class.is_regular {
                out.equality_case(s, id);
            }
            if eq != predicted {
                out.finding(s, id, eq, predicted);
            }
        }
    }
}

/// `Ω >= 1/(2n)`, i.e. `2n·Var >= S`, conjectured for irregular graphs.
struct OmegaConjecture;

impl Suite for OmegaConjecture {
    fn id(&self) -> &'static str {
        "omega-conjecture"
    }
    fn description(&self) -> &'static str {
        "2n·Var >= S on all irregular graphs, connected or not"
    }
    fn check(&self, s: &Subject, out: &mut Outcome) {
        let p = &s.profile;
        if p.class.is_regular {
            return;
        }
        let ms = &p.measures;
        let id = "omega-at-least-inverse-2n";
        let eq = out.at_most(s, id, &ms.s, &(int(2) * n_of(p) * &ms.var), false);
        if eq {
            out.equality_case(s, id);
        }
        let predicted = p.class.is_bidegreed && p.stats.spread() == 1;
        if eq != predicted {
            out.finding(s, id, eq, predicted);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Graph;
    use crate::verifier::{run_suite, GraphPopulation};

    fn run(id: &str, graphs: Vec<Graph>) -> crate::verifier::VerificationReport {
        run_suite(&GraphPopulation::from_graphs("fixture", graphs), id).unwrap()
    }

    #[test]
    fn registry_contents() {
        let r = SuiteRegistry::standard();
        for id in PROVED_SUITES.iter().chain(CONJECTURE_SUITES) {
            assert!(r.get(id).is_some(), "{id}");
        }
        assert!(r.get("omega-below-half").is_some());
        assert!(r.get("all").is_some() && r.get("conjectures").is_some());
    }

    #[test]
    fn named_fixtures_pass_every_suite() {
        let graphs = vec![
            generators::named("grotzsch").unwrap(),
            generators::named("diamond").unwrap(),
            generators::complete_multipartite(&[2, 3, 5]).unwrap(),
            generators::complete_split(7, 2).unwrap(),
            generators::wheel(8).unwrap(),
            generators::star(6).unwrap(),
            generators::path(9).unwrap(),
            generators::friendship(4).unwrap(),
        ];
        let r = run("all", graphs);
        assert!(r.passed, "{:?}", r.violations);
    }

    #[test]
    fn spectral_suite_covers_grotzsch() {
        let r = run("spectral", vec![generators::named("grotzsch").unwrap()]);
        assert!(r.passed);
        assert_eq!(r.checks, 3);
    }

    #[test]
    fn tree_minimum_is_exactly_the_path() {
        let r = run(
            "trees",
            vec![generators::path(7).unwrap(), generators::star(7).unwrap()],
        );
        assert!(r.passed, "{:?}", r.violations);
    }

    #[test]
    fn inflated_unicyclic_keeps_deviation() {
        // triangle with a pendant at each vertex, then three subdivisions
        let h =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        let g = generators::degree2_inflate(&h, 3).unwrap();
        let r = run("cyclic", vec![h.clone(), g.clone()]);
        assert!(r.passed);
        let (ph, pg) = (Profile::new(&h), Profile::new(&g));
        assert_eq!(ph.measures.s, int(6));
        assert_eq!(pg.measures.s, int(6));
        assert_eq!(pg.measures.ird, int(6));
    }

    #[test]
    fn max_zagreb_graph_has_universal_vertex() {
        let pop = GraphPopulation {
            exhaustive: true,
            ..GraphPopulation::from_graphs(
                "fixture",
                vec![generators::path(5).unwrap(), generators::wheel(5).unwrap()],
            )
        };
        let r = run_suite(&pop, "max-zagreb-universal").unwrap();
        assert!(r.passed);
        assert_eq!(r.checks, 1);
        // hand-picked lists are not searched for maximizers
        let r = run(
            "max-zagreb-universal",
            vec![generators::complete_multipartite(&[2, 3, 5]).unwrap()],
        );
        assert_eq!(r.checks, 0);
    }
}
