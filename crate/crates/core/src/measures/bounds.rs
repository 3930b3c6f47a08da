//! Inequalities between the measures, each behind the [`Bound`] trait and
//! registered by identifier in a [`BoundRegistry`].

use serde::Serialize;

use super::Profile;
use crate::graph::Graph;
use crate::rational::{self, from_usize, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    LessEq,
    #[serde(rename = ">=")]
    GreaterEq,
    #[serde(rename = "<")]
    Less,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::LessEq => lhs <= rhs,
            Relation::GreaterEq => lhs >= rhs,
            Relation::Less => lhs < rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::LessEq => "<=",
            Relation::GreaterEq => ">=",
            Relation::Less => "<",
        }
    }
}

/// How a bound's published equality condition relates to observed equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityRule {
    /// Equality exactly when the condition holds.
    Iff,
    /// The condition forces equality; equality may also occur otherwise.
    Sufficient,
    /// No equality condition is published.
    Unstated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Confirmed,
    ConditionViolated,
    NotApplicable,
}

/// One evaluated inequality instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub bound_id: &'static str,
    pub relation: Relation,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub lhs: Option<Rational>,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub rhs: Option<Rational>,
    pub holds: bool,
    pub is_equality: bool,
    pub predicted_equality: bool,
    pub equality_rule: EqualityRule,
    pub agreement: Agreement,
}

impl BoundRecord {
    pub fn applicable(&self) -> bool {
        self.agreement != Agreement::NotApplicable
    }

    /// Observed equality disagrees with the published condition.
    pub fn equality_mismatch(&self) -> bool {
        self.applicable()
            && match self.equality_rule {
                EqualityRule::Iff => self.is_equality != self.predicted_equality,
                EqualityRule::Sufficient => self.predicted_equality && !self.is_equality,
                EqualityRule::Unstated => false,
            }
    }
}

/// A published inequality `lhs (relation) rhs` over a graph profile.
pub trait Bound: Send + Sync {
    fn id(&self) -> &'static str;
    fn statement(&self) -> &'static str;
    fn relation(&self) -> Relation;
    fn equality_rule(&self) -> EqualityRule;
    /// The published equality condition is known to be incomplete; mismatches
    /// are reported as findings instead of violations.
    fn equality_condition_ambiguous(&self) -> bool {
        false
    }
    fn applies(&self, p: &Profile) -> bool;
    fn sides(&self, p: &Profile) -> (Rational, Rational);
    fn predicted_equality(&self, p: &Profile) -> bool;
}

impl dyn Bound + '_ {
    pub fn evaluate(&self, p: &Profile) -> BoundRecord {
        let relation = self.relation();
        if !self.applies(p) {
            return BoundRecord {
                bound_id: self.id(),
                relation,
                lhs: None,
                rhs: None,
                holds: true,
                is_equality: false,
                predicted_equality: false,
                equality_rule: self.equality_rule(),
                agreement: Agreement::NotApplicable,
            };
        }
        let (lhs, rhs) = self.sides(p);
        let mut rec = BoundRecord {
            bound_id: self.id(),
            relation,
            holds: relation.holds(&lhs, &rhs),
            is_equality: lhs == rhs,
            predicted_equality: self.predicted_equality(p),
            equality_rule: self.equality_rule(),
            agreement: Agreement::Confirmed,
            lhs: Some(lhs),
            rhs: Some(rhs),
        };
        if !rec.holds || rec.equality_mismatch() {
            rec.agreement = Agreement::ConditionViolated;
        }
        rec
    }
}

/// Named collection of bounds, evaluated in registration order.
pub struct BoundRegistry {
    bounds: Vec<Box<dyn Bound>>,
}

impl BoundRegistry {
    pub fn new() -> Self {
        BoundRegistry { bounds: Vec::new() }
    }

    /// Every inequality the library knows about.
    pub fn standard() -> Self {
        let mut r = BoundRegistry::new();
        r.register(VarianceByDeviation);
        r.register(DeviationByIrr);
        r.register(VarianceBySpread);
        r.register(DeviationLowerBound);
        r.register(VarianceLowerBound);
        r.register(BidegreedVarianceCap);
        r.register(DominatingVarianceCap);
        r.register(DeviationByRootVariance);
        r.register(ZagrebUpperBound);
        r.register(OmegaBelowHalf);
        r.register(OmegaFloor);
        r.register(PendantDeviationCap);
        r
    }

    pub fn register<B: Bound + 'static>(&mut self, bound: B) {
        assert!(
            self.get(bound.id()).is_none(),
            "duplicate bound id {}",
            bound.id()
        );
        self.bounds.push(Box::new(bound));
    }

    pub fn get(&self, id: &str) -> Option<&dyn Bound> {
        self.bounds
            .iter()
            .find(|b| b.id() == id)
            .map(|b| b.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.bounds.iter().map(|b| b.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Bound> {
        self.bounds.iter().map(|b| b.as_ref())
    }

    pub fn report(&self, p: &Profile) -> Vec<BoundRecord> {
        self.iter().map(|b| b.evaluate(p)).collect()
    }
}

impl Default for BoundRegistry {
    fn default() -> Self {
        Self::new()
    }
}

pub fn bound_report(g: &Graph) -> Vec<BoundRecord> {
    BoundRegistry::standard().report(&Profile::new(g))
}

fn n_of(p: &Profile) -> Rational {
    from_usize(p.n())
}

fn spread(p: &Profile) -> Rational {
    from_usize(p.stats.spread())
}

fn regular_or_balanced(p: &Profile) -> bool {
    p.class.is_regular || p.class.is_balanced_bidegreed
}

/// `1 <= c <= (n + 2) / 2` for a connected graph.
fn low_cyclomatic(p: &Profile) -> Option<usize> {
    p.class.cyclomatic.filter(|&c| c >= 1 && 2 * c <= p.n() + 2)
}

struct VarianceByDeviation;

impl Bound for VarianceByDeviation {
    fn id(&self) -> &'static str {
        "var-by-deviation"
    }
    fn statement(&self) -> &'static str {
        "Var <= (Δ-δ)/(2n)·S; equality iff regular or balanced bidegreed"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    // Equality is observed whenever every degree is δ, 2m/n or Δ, which
    // includes every bidegreed graph.
    fn equality_condition_ambiguous(&self) -> bool {
        true
    }
    fn applies(&self, _: &Profile) -> bool {
        true
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let rhs = spread(p) / (int(2) * n_of(p)) * &p.measures.s;
        (p.measures.var.clone(), rhs)
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        regular_or_balanced(p)
    }
}

struct DeviationByIrr;

impl Bound for DeviationByIrr {
    fn id(&self) -> &'static str {
        "deviation-by-irr"
    }
    fn statement(&self) -> &'static str {
        "S <= IRR = n/2·(Δ-δ); equality iff regular or balanced bidegreed"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    fn applies(&self, _: &Profile) -> bool {
        true
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        (p.measures.s.clone(), p.measures.irr.clone())
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        regular_or_balanced(p)
    }
}

struct VarianceBySpread;

impl Bound for VarianceBySpread {
    fn id(&self) -> &'static str {
        "var-by-spread"
    }
    fn statement(&self) -> &'static str {
        "Var <= (Δ-δ)²/4; equality iff regular or balanced bidegreed"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    fn applies(&self, _: &Profile) -> bool {
        true
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let d = spread(p);
        (p.measures.var.clone(), &d * &d / int(4))
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        regular_or_balanced(p)
    }
}

struct DeviationLowerBound;

impl Bound for DeviationLowerBound {
    fn id(&self) -> &'static str {
        "deviation-lower"
    }
    fn statement(&self) -> &'static str {
        "S >= 2·N_Δ·N_δ/n·(Δ-δ); equality iff regular or bidegreed"
    }
    fn relation(&self) -> Relation {
        Relation::GreaterEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    fn equality_condition_ambiguous(&self) -> bool {
        true
    }
    fn applies(&self, _: &Profile) -> bool {
        true
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let k = from_usize(2 * p.stats.count_max() * p.stats.count_min());
        (p.measures.s.clone(), k / n_of(p) * spread(p))
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        p.class.is_regular || p.class.is_bidegreed
    }
}

struct VarianceLowerBound;

impl Bound for VarianceLowerBound {
    fn id(&self) -> &'static str {
        "var-lower"
    }
    fn statement(&self) -> &'static str {
        "Var >= (N_δ+N_Δ)²/n⁴·IRR·IRD; equality iff |Ds| <= 2"
    }
    fn relation(&self) -> Relation {
        Relation::GreaterEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    fn applies(&self, _: &Profile) -> bool {
        true
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let ends = from_usize(p.stats.count_max() + p.stats.count_min());
        let n = n_of(p);
        let n2 = &n * &n;
        let rhs = &ends * &ends / (&n2 * &n2) * &p.measures.irr * &p.measures.ird;
        (p.measures.var.clone(), rhs)
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        p.class.degree_class <= 2
    }
}

struct BidegreedVarianceCap;

impl Bound for BidegreedVarianceCap {
    fn id(&self) -> &'static str {
        "bidegreed-var-cap"
    }
    fn statement(&self) -> &'static str {
        "connected bidegreed, n >= 4: Var <= (Δ-δ)²/4; equality iff balanced"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    fn applies(&self, p: &Profile) -> bool {
        p.class.is_connected && p.class.is_bidegreed && p.n() >= 4
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let d = spread(p);
        (p.measures.var.clone(), &d * &d / int(4))
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        p.class.is_balanced_bidegreed
    }
}

struct DominatingVarianceCap;

impl Bound for DominatingVarianceCap {
    fn id(&self) -> &'static str {
        "dominating-var-cap"
    }
    fn statement(&self) -> &'static str {
        "dominating: Var <= (2m/n)[2m+(n-1)(n-1-δ)]/(2n-1-δ) - (2m/n)²; equality if CS(n,k)"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Sufficient
    }
    fn applies(&self, p: &Profile) -> bool {
        p.class.is_dominating
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let (n, m, delta) = (p.n(), p.m(), p.stats.min_degree);
        let avg = &p.stats.average_degree;
        let frac = rational::ratio(
            (2 * m + (n - 1) * (n - 1 - delta)) as i64,
            (2 * n - 1 - delta) as i64,
        );
        (p.measures.var.clone(), avg * frac - avg * avg)
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        p.class.is_complete_split.is_some()
    }
}

struct DeviationByRootVariance;

impl Bound for DeviationByRootVariance {
    fn id(&self) -> &'static str {
        "deviation-by-root-var"
    }
    fn statement(&self) -> &'static str {
        "connected: S² <= n²·Var; equality for balanced bidegreed graphs"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Sufficient
    }
    fn applies(&self, p: &Profile) -> bool {
        p.class.is_connected
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let n = n_of(p);
        (&p.measures.s * &p.measures.s, &n * &n * &p.measures.var)
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        regular_or_balanced(p)
    }
}

struct ZagrebUpperBound;

impl Bound for ZagrebUpperBound {
    fn id(&self) -> &'static str {
        "zagreb-cap"
    }
    fn statement(&self) -> &'static str {
        "connected: M1 <= 2m[2m+(n-1)(Δ-δ)]/(n+Δ-δ); equality if regular or CS(n,k)"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Sufficient
    }
    fn applies(&self, p: &Profile) -> bool {
        p.class.is_connected
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let (n, m, d) = (p.n(), p.m(), p.stats.spread());
        let rhs = rational::ratio((2 * m * (2 * m + (n - 1) * d)) as i64, (n + d) as i64);
        (p.measures.m1.clone(), rhs)
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        p.class.is_regular || p.class.is_complete_split.is_some()
    }
}

struct OmegaBelowHalf;

impl Bound for OmegaBelowHalf {
    fn id(&self) -> &'static str {
        "omega-below-half"
    }
    fn statement(&self) -> &'static str {
        "irregular: Ω < 1/2"
    }
    fn relation(&self) -> Relation {
        Relation::Less
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    fn applies(&self, p: &Profile) -> bool {
        p.measures.omega.is_some()
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        (
            p.measures.omega.clone().expect("applies"),
            rational::ratio(1, 2),
        )
    }
    fn predicted_equality(&self, _: &Profile) -> bool {
        false
    }
}

struct OmegaFloor;

impl Bound for OmegaFloor {
    fn id(&self) -> &'static str {
        "omega-floor"
    }
    fn statement(&self) -> &'static str {
        "connected irregular, 1 <= c <= (n+2)/2: Ω >= 1/n - 2/S"
    }
    fn relation(&self) -> Relation {
        Relation::GreaterEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Unstated
    }
    fn applies(&self, p: &Profile) -> bool {
        p.measures.omega.is_some() && low_cyclomatic(p).is_some()
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let rhs = int(1) / n_of(p) - int(2) / &p.measures.s;
        (p.measures.omega.clone().expect("applies"), rhs)
    }
    fn predicted_equality(&self, _: &Profile) -> bool {
        false
    }
}

struct PendantDeviationCap;

impl Bound for PendantDeviationCap {
    fn id(&self) -> &'static str {
        "pendant-deviation-cap"
    }
    fn statement(&self) -> &'static str {
        "connected, 1 <= c <= (n+2)/2: S <= 2(N_1 + 2c - 2); equality iff unicyclic"
    }
    fn relation(&self) -> Relation {
        Relation::LessEq
    }
    fn equality_rule(&self) -> EqualityRule {
        EqualityRule::Iff
    }
    fn applies(&self, p: &Profile) -> bool {
        low_cyclomatic(p).is_some()
    }
    fn sides(&self, p: &Profile) -> (Rational, Rational) {
        let c = low_cyclomatic(p).expect("applies");
        let rhs = int(2) * from_usize(p.stats.count(1) + 2 * c - 2);
        (p.measures.s.clone(), rhs)
    }
    fn predicted_equality(&self, p: &Profile) -> bool {
        p.class.is_unicyclic
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::rational::ratio;

    fn record<'a>(records: &'a [BoundRecord], id: &str) -> &'a BoundRecord {
        records.iter().find(|r| r.bound_id == id).unwrap()
    }

    #[test]
    fn registry_lists_every_bound_once() {
        let ids = BoundRegistry::standard().ids();
        assert_eq!(
            ids,
            vec![
                "var-by-deviation",
                "deviation-by-irr",
                "var-by-spread",
                "deviation-lower",
                "var-lower",
                "bidegreed-var-cap",
                "dominating-var-cap",
                "deviation-by-root-var",
                "zagreb-cap",
                "omega-below-half",
                "omega-floor",
                "pendant-deviation-cap"
            ]
        );
    }

    #[test]
    fn balanced_prism_subdivision_meets_spread_bounds() {
        let prism = generators::named("trigonal_prism").unwrap();
        let edges = prism.edges();
        // any 6 of the 9 edges leave six degree-3 and six degree-2 vertices
        let g = generators::subdivide_edges(&prism, &edges[..6]).unwrap();
        let p = Profile::new(&g);
        assert!(p.class.is_balanced_bidegreed);
        let recs = BoundRegistry::standard().report(&p);
        for id in ["var-by-deviation", "deviation-by-irr", "var-by-spread"] {
            let r = record(&recs, id);
            assert!(r.holds && r.is_equality && r.predicted_equality, "{id}");
        }
        assert_eq!(p.measures.s, int(6));
        assert_eq!(p.measures.var, ratio(1, 4));
    }

    #[test]
    fn tripartite_lower_bound_is_strict() {
        let recs = bound_report(&generators::complete_multipartite(&[2, 3, 5]).unwrap());
        let lower = record(&recs, "var-lower");
        assert_eq!(lower.lhs, Some(ratio(39, 25)));
        // (N_δ + N_Δ)²/n⁴ · IRR · IRD = 49/10⁴ · 15 · 60/7
        assert_eq!(lower.rhs, Some(ratio(63, 100)));
        assert!(lower.holds && !lower.is_equality && !lower.predicted_equality);
        assert_eq!(lower.agreement, Agreement::Confirmed);
    }

    #[test]
    fn regular_graph_bounds_collapse_to_zero() {
        let recs = bound_report(&generators::cycle(6).unwrap());
        for id in [
            "var-by-deviation",
            "deviation-by-irr",
            "var-by-spread",
            "deviation-lower",
            "var-lower",
        ] {
            let r = record(&recs, id);
            assert!(r.is_equality && r.predicted_equality, "{id}");
            assert_eq!(r.lhs, Some(int(0)));
        }
        assert_eq!(
            record(&recs, "omega-below-half").agreement,
            Agreement::NotApplicable
        );
        assert_eq!(
            record(&recs, "pendant-deviation-cap").agreement,
            Agreement::Confirmed
        );
    }

    #[test]
    fn complete_split_meets_zagreb_and_dominating_caps() {
        let recs = bound_report(&generators::complete_split(7, 2).unwrap());
        for id in ["zagreb-cap", "dominating-var-cap"] {
            let r = record(&recs, id);
            assert!(r.holds && r.is_equality && r.predicted_equality, "{id}");
        }
    }

    #[test]
    fn non_balanced_bidegreed_reaches_variance_equality() {
        // Observed equality outside the published condition: a finding.
        let recs = bound_report(&generators::star(4).unwrap());
        let r = record(&recs, "var-by-deviation");
        assert!(r.holds && r.is_equality && !r.predicted_equality);
        assert!(r.equality_mismatch());
        assert_eq!(r.agreement, Agreement::ConditionViolated);
        let registry = BoundRegistry::standard();
        assert!(registry
            .get("var-by-deviation")
            .unwrap()
            .equality_condition_ambiguous());
    }

    #[test]
    fn pendant_cap_is_tight_on_unicyclic() {
        // triangle with a pendant path of two
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let r = bound_report(&g)
            .into_iter()
            .find(|r| r.bound_id == "pendant-deviation-cap")
            .unwrap();
        assert_eq!(r.lhs, Some(int(2)));
        assert!(r.is_equality && r.predicted_equality);
    }

    #[test]
    fn disconnected_graphs_skip_connected_bounds() {
        let g = Graph::from_edge_list(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let recs = bound_report(&g);
        for id in [
            "bidegreed-var-cap",
            "dominating-var-cap",
            "deviation-by-root-var",
            "zagreb-cap",
            "omega-floor",
            "pendant-deviation-cap",
        ] {
            assert_eq!(
                record(&recs, id).agreement,
                Agreement::NotApplicable,
                "{id}"
            );
        }
        assert!(record(&recs, "omega-below-half").applicable());
    }
}
