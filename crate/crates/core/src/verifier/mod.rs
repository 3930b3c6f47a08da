//! Runs check suites over graph populations and collects deterministic
//! reports.
//!
//! A check that fails its inequality or identity is a *violation*. An
//! equality that disagrees with a published condition known to be
//! incomplete is a *finding*; it is reported but does not fail the run.

mod extremal;
mod suites;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_code;
use crate::enumeration::{enumerate_with, with_workers, EnumerationOptions, EnumerationSpec};
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::Graph;
use crate::measures::Profile;
use crate::rational::{self, Rational};

pub use extremal::{
    extremal_search, extremal_search_with, max_deviation_split_k, split_k_rule, ExtremalResult,
    Maximizer, SplitKCheck,
};
pub use suites::{Suite, SuiteRegistry, PROVED_SUITES};

/// A named list of graphs to check.
#[derive(Debug, Clone)]
pub struct GraphPopulation {
    pub label: String,
    pub graphs: Vec<Graph>,
    /// Built by exhaustive enumeration, so every class of each enumerated
    /// slice is present. Population-wide checks only run when set.
    pub exhaustive: bool,
}

impl GraphPopulation {
    pub fn from_graphs(label: impl Into<String>, graphs: Vec<Graph>) -> Self {
        GraphPopulation {
            label: label.into(),
            graphs,
            exhaustive: false,
        }
    }

    /// Concatenation of the populations of several enumeration specs.
    pub fn enumerate(
        label: impl Into<String>,
        specs: &[EnumerationSpec],
        opts: &EnumerationOptions,
    ) -> Result<Self> {
        let mut graphs = Vec::new();
        for spec in specs {
            graphs.extend(enumerate_with(spec, opts)?);
        }
        Ok(GraphPopulation {
            exhaustive: true,
            ..Self::from_graphs(label, graphs)
        })
    }

    /// Every graph (connected or not) with `1 <= n <= max_n`.
    pub fn all_up_to(max_n: usize, opts: &EnumerationOptions) -> Result<Self> {
        let specs: Vec<_> = (1..=max_n).map(EnumerationSpec::all).collect();
        Self::enumerate(format!("all graphs, n <= {max_n}"), &specs, opts)
    }

    pub fn connected_up_to(max_n: usize, opts: &EnumerationOptions) -> Result<Self> {
        let specs: Vec<_> = (1..=max_n).map(EnumerationSpec::connected).collect();
        Self::enumerate(format!("connected graphs, n <= {max_n}"), &specs, opts)
    }

    pub fn trees_up_to(max_n: usize, opts: &EnumerationOptions) -> Result<Self> {
        let specs: Vec<_> = (2..=max_n).map(EnumerationSpec::trees).collect();
        Self::enumerate(format!("trees, 2 <= n <= {max_n}"), &specs, opts)
    }

    pub fn unicyclic_up_to(max_n: usize, opts: &EnumerationOptions) -> Result<Self> {
        let specs: Vec<_> = (3..=max_n).map(EnumerationSpec::unicyclic).collect();
        Self::enumerate(format!("unicyclic graphs, 3 <= n <= {max_n}"), &specs, opts)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// One graph prepared for checking.
#[derive(Debug, Clone)]
pub struct Subject {
    /// Canonical graph6 code, or plain graph6 above the canonical-form cap.
    pub code: String,
    pub graph: Graph,
    pub profile: Profile,
}

impl Subject {
    pub fn new(graph: Graph) -> Self {
        let code = canonical_code(&graph)
            .map(|c| c.as_str().to_string())
            .unwrap_or_else(|_| to_graph6(&graph));
        Subject {
            code,
            profile: Profile::new(&graph),
            graph,
        }
    }

    pub fn degree_sequence(&self) -> String {
        self.profile.stats.sequence_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: String,
    pub check_id: String,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub lhs: Option<Rational>,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub rhs: Option<Rational>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub code: String,
    pub check_id: String,
    pub degree_sequence: String,
    pub observed_equality: bool,
    pub predicted_equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityCase {
    pub code: String,
    pub check_id: String,
    pub degree_sequence: String,
}

/// Results of the checks for one or more subjects.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub checks: usize,
    pub violations: Vec<Violation>,
    pub findings: Vec<Finding>,
    pub equality_cases: Vec<EqualityCase>,
}

impl Outcome {
    pub fn fail(
        &mut self,
        s: &Subject,
        id: &str,
        lhs: Option<&Rational>,
        rhs: Option<&Rational>,
        detail: String,
    ) {
        self.violations.push(Violation {
            code: s.code.clone(),
            check_id: id.to_string(),
            lhs: lhs.cloned(),
            rhs: rhs.cloned(),
            detail,
        });
    }

    /// A plain assertion.
    pub fn assert(&mut self, s: &Subject, id: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(s, id, None, None, detail());
        }
    }

    /// `lhs == rhs` exactly.
    pub fn identity(&mut self, s: &Subject, id: &str, lhs: &Rational, rhs: &Rational) {
        self.checks += 1;
        if lhs != rhs {
            self.fail(
                s,
                id,
                Some(lhs),
                Some(rhs),
                format!("{} != {}", rational::exact(lhs), rational::exact(rhs)),
            );
        }
    }

    /// `lhs <= rhs` (or `<` when `strict`); returns whether equality holds.
    pub fn at_most(
        &mut self,
        s: &Subject,
        id: &str,
        lhs: &Rational,
        rhs: &Rational,
        strict: bool,
    ) -> bool {
        self.checks += 1;
        let ok = if strict { lhs < rhs } else { lhs <= rhs };
        if !ok {
            let op = if strict { "<" } else { "<=" };
            self.fail(
                s,
                id,
                Some(lhs),
                Some(rhs),
                format!(
                    "expected {} {op} {}",
                    rational::exact(lhs),
                    rational::exact(rhs)
                ),
            );
        }
        lhs == rhs
    }

    /// Equality observed must match the stated condition. A mismatch is a
    /// violation, or a finding when `ambiguous`.
    pub fn equality_iff(
        &mut self,
        s: &Subject,
        id: &str,
        observed: bool,
        predicted: bool,
        ambiguous: bool,
    ) {
        self.checks += 1;
        if observed == predicted {
            return;
        }
        if ambiguous {
            self.finding(s, id, observed, predicted);
        } else {
            self.fail(
                s,
                id,
                None,
                None,
                format!("equality observed={observed}, predicted={predicted}"),
            );
        }
    }

    pub fn finding(&mut self, s: &Subject, id: &str, observed: bool, predicted: bool) {
        self.findings.push(Finding {
            code: s.code.clone(),
            check_id: id.to_string(),
            degree_sequence: s.degree_sequence(),
            observed_equality: observed,
            predicted_equality: predicted,
        });
    }

    pub fn equality_case(&mut self, s: &Subject, id: &str) {
        self.equality_cases.push(EqualityCase {
            code: s.code.clone(),
            check_id: id.to_string(),
            degree_sequence: s.degree_sequence(),
        });
    }

    fn absorb(&mut self, other: Outcome) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self.findings.extend(other.findings);
        self.equality_cases.extend(other.equality_cases);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite_id: String,
    pub population: String,
    /// How population counts are to be read.
    pub counting: &'static str,
    pub graphs_checked: usize,
    pub checks: usize,
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub findings: Vec<Finding>,
    pub equality_cases: Vec<EqualityCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub const COUNTING: &str = "isomorphism classes";

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    /// Findings grouped by check id, with counts.
    pub fn findings_by_check(&self) -> Vec<(String, usize)> {
        let mut m = std::collections::BTreeMap::new();
        for f in &self.findings {
            *m.entry(f.check_id.clone()).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }
}

/// One summary row per report.
pub fn reports_to_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::input(format!("csv: {e}"));
    w.write_record([
        "suite_id",
        "population",
        "graphs_checked",
        "checks",
        "violations",
        "findings",
        "equality_cases",
        "passed",
    ])
    .map_err(io)?;
    for r in reports {
        w.write_record([
            r.suite_id.clone(),
            r.population.clone(),
            r.graphs_checked.to_string(),
            r.checks.to_string(),
            r.violations.len().to_string(),
            r.findings.len().to_string(),
            r.equality_cases.len().to_string(),
            r.passed.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub workers: Option<usize>,
    pub include_timings: bool,
}

pub fn run_suite(pop: &GraphPopulation, suite_id: &str) -> Result<VerificationReport> {
    run_suite_with(pop, suite_id, &RunOptions::default())
}

pub fn run_suite_with(
    pop: &GraphPopulation,
    suite_id: &str,
    opts: &RunOptions,
) -> Result<VerificationReport> {
    let registry = SuiteRegistry::standard();
    let suite = registry.get(suite_id).ok_or_else(|| {
        Error::input(format!(
            "unknown suite `{suite_id}` (known: {})",
            registry.ids().join(", ")
        ))
    })?;
    let start = Instant::now();
    let outcome = with_workers(opts.workers, || {
        let mut subjects: Vec<Subject> = pop.graphs.par_iter().cloned().map(Subject::new).collect();
        subjects.par_sort_by(|a, b| a.code.cmp(&b.code));
        let per_graph: Vec<Outcome> = subjects
            .par_iter()
            .map(|s| {
                let mut o = Outcome::default();
                suite.check(s, &mut o);
                o
            })
            .collect();
        let mut total = Outcome::default();
        for o in per_graph {
            total.absorb(o);
        }
        if pop.exhaustive {
            suite.check_population(&subjects, &mut total);
        }
        total
    })?;
    Ok(VerificationReport {
        suite_id: suite_id.to_string(),
        population: pop.label.clone(),
        counting: COUNTING,
        graphs_checked: pop.len(),
        checks: outcome.checks,
        passed: outcome.violations.is_empty(),
        violations: outcome.violations,
        findings: outcome.findings,
        equality_cases: outcome.equality_cases,
        elapsed_ms: opts
            .include_timings
            .then(|| start.elapsed().as_millis() as u64),
    })
}

/// `S >= IRD` and `Var >= IRR·IRD/n²` on every graph, connected or not.
pub fn check_deviation_conjecture(pop: &GraphPopulation) -> Result<VerificationReport> {
    run_suite(pop, "deviation-conjecture")
}

/// `2n·Var >= S` on every irregular graph.
pub fn check_omega_conjecture(pop: &GraphPopulation) -> Result<VerificationReport> {
    run_suite(pop, "omega-conjecture")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn pop(graphs: Vec<Graph>) -> GraphPopulation {
        GraphPopulation::from_graphs("fixture", graphs)
    }

    #[test]
    fn unknown_suite_is_an_input_error() {
        assert!(matches!(
            run_suite(&pop(vec![]), "nope"),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn tripartite_conjecture_inequalities_are_strict() {
        let k235 = generators::complete_multipartite(&[2, 3, 5]).unwrap();
        let r = check_deviation_conjecture(&pop(vec![k235])).unwrap();
        assert!(r.passed && r.equality_cases.is_empty() && r.findings.is_empty());
        assert_eq!(r.checks, 2);
    }

    #[test]
    fn omega_conjecture_equality_at_paths() {
        let graphs = (4..=8).map(|n| generators::path(n).unwrap()).collect();
        let r = check_omega_conjecture(&pop(graphs)).unwrap();
        assert!(r.passed);
        assert_eq!(r.equality_cases.len(), 5);
        let cs = generators::complete_split(7, 2).unwrap();
        let r = check_omega_conjecture(&pop(vec![cs])).unwrap();
        assert!(r.passed && r.equality_cases.is_empty());
    }

    #[test]
    fn reports_are_sorted_and_reproducible() {
        let graphs: Vec<_> = (5..=9)
            .rev()
            .map(|n| generators::wheel(n).unwrap())
            .collect();
        let a = run_suite(&pop(graphs.clone()), "all").unwrap();
        let b = run_suite_with(
            &pop(graphs),
            "all",
            &RunOptions {
                workers: Some(3),
                include_timings: false,
            },
        )
        .unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.passed);
        assert!(!a.to_json().contains("elapsed_ms"));
    }

    #[test]
    fn csv_summary() {
        let r = run_suite(&pop(vec![generators::star(5).unwrap()]), "bounds").unwrap();
        let csv = reports_to_csv(&[r]).unwrap();
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with("suite_id,population"));
        assert!(lines.next().unwrap().starts_with("bounds,fixture,1,"));
    }
}
