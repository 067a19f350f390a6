//! Instance-level validation of the closed-form results for `γ`, `γ_m¹` and
//! `γ_m²`: each claim is checked on every admissible instance of a finite
//! pool and summarized in a [`ClaimReport`].
//!
//! Every claim is checked under both replacement modes; a failure under
//! either fails the claim. Pools are filtered by the claim's own hypotheses
//! (connectivity, order thresholds) and by the product-size budget, nothing
//! else. Reports are merged in instance order, so output is deterministic
//! even when instances are checked in parallel.

// A counterexample is the error payload and is built at most once per failing
// instance; boxing it would only add noise.
#![allow(clippy::result_large_err)]

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::domination::{self, is_dominating, sample_dominating_sets, SolverError, SolverResult};
use crate::families::Family;
use crate::generate::{enumerate_connected_graphs, MAX_ENUMERATION_ORDER};
use crate::graph::{Graph, VertexSet};
use crate::movable::{self, all_2movable_sets, is_2movable_dominating, verify_certificate, ReplacementMode};
use crate::products::{corona, join, slice_closed_copy, slice_copy, CoronaLayout};

/// Source of invariant values. The harness only talks to solvers through
/// this trait so a deliberately broken implementation can be swapped in.
pub trait Solvers: Sync {
    fn gamma(&self, g: &Graph) -> Result<SolverResult, SolverError>;
    fn gamma_m1(&self, g: &Graph) -> Result<SolverResult, SolverError>;
    fn gamma_m2(&self, g: &Graph, mode: ReplacementMode) -> Result<SolverResult, SolverError>;
}

/// The exact solvers of this crate.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactSolvers;

impl Solvers for ExactSolvers {
    fn gamma(&self, g: &Graph) -> Result<SolverResult, SolverError> {
        domination::gamma(g)
    }

    fn gamma_m1(&self, g: &Graph) -> Result<SolverResult, SolverError> {
        movable::gamma_m1(g)
    }

    fn gamma_m2(&self, g: &Graph, mode: ReplacementMode) -> Result<SolverResult, SolverError> {
        movable::gamma_m2(g, mode)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `γ_m²(G) ≥ 2` for connected `G` of order ≥ 4.
    PairFloor,
    /// `γ(G) ≤ γ_m¹(G)` and `γ(G) ≤ γ_m²(G)` for connected `G` of order ≥ 4.
    Hierarchy,
    /// `γ_m²(G + H) = 2` when both factors have order ≥ 2.
    JoinValue,
    /// `γ_m²(G ∘ H) = |V(G)|·γ(H)` for connected factors with `|V(G ∘ H)| ≥ 4`.
    CoronaValue,
    /// `γ_m²(K_1 + H) = γ(H)` for connected `H` of order ≥ 4.
    ApexJoin,
    /// If `a ∉ T` for a dominating `T` of `G ∘ H`, then `T ∩ V(H^a)` dominates `H^a`.
    CopyDomination,
    /// Exchange clauses for 2-movable `T` of `G ∘ H`, center `a`, `u ∈ T ∩ V(H^a)`.
    CopyExchange,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::PairFloor,
        Claim::Hierarchy,
        Claim::JoinValue,
        Claim::CoronaValue,
        Claim::ApexJoin,
        Claim::CopyDomination,
        Claim::CopyExchange,
    ];

    /// Stable identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Claim::PairFloor => "remark-3.1",
            Claim::Hierarchy => "theorem-3.2",
            Claim::JoinValue => "theorem-3.3",
            Claim::CoronaValue => "theorem-3.6",
            Claim::ApexJoin => "corollary-3.1",
            Claim::CopyDomination => "lemma-3.4",
            Claim::CopyExchange => "lemma-3.5",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim {0:?}")]
pub struct UnknownClaim(pub String);

impl FromStr for Claim {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, UnknownClaim> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A graph in replayable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub role: String,
    pub name: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphRecord {
    fn new(role: &str, named: &NamedGraph) -> Self {
        GraphRecord {
            role: role.to_string(),
            name: named.name.clone(),
            n: named.graph.order(),
            edges: named.graph.edges().collect(),
        }
    }

    fn product(name: String, graph: &Graph) -> Self {
        GraphRecord { role: "product".to_string(), name, n: graph.order(), edges: graph.edges().collect() }
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_list(self.n, &self.edges).expect("records come from valid graphs")
    }
}

/// Everything needed to reproduce one failed check through the public API.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graphs: Vec<GraphRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<ReplacementMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub expected: String,
    pub got: String,
}

impl Counterexample {
    fn new(graphs: Vec<GraphRecord>, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Counterexample {
            graphs,
            mode: None,
            set: None,
            center: None,
            vertex: None,
            expected: expected.into(),
            got: got.into(),
        }
    }

    fn mode(mut self, mode: ReplacementMode) -> Self {
        self.mode = Some(mode);
        self
    }

    fn set(mut self, set: VertexSet) -> Self {
        self.set = Some(set);
        self
    }

    pub fn graph(&self, role: &str) -> Option<Graph> {
        self.graphs.iter().find(|g| g.role == role).map(GraphRecord::to_graph)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: &'static str,
    pub pool: String,
    pub instances: usize,
    pub status: Status,
    /// Instances that violated the claim; the first is `counterexample`.
    #[serde(skip_serializing_if = "is_zero")]
    pub failures: usize,
    /// Set when the pool had no admissible instance.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause_tally: Option<BTreeMap<String, usize>>,
    /// Checks that were skipped and why (e.g. the invariant does not exist).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub skipped: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Per-instance result: either a tally of what was checked, or the first
/// violation found.
type Check = Result<Tally, Counterexample>;

#[derive(Debug, Default)]
struct Tally {
    counts: BTreeMap<String, usize>,
    skipped: BTreeMap<String, usize>,
    /// Number of report-level instances this check contributed.
    instances: usize,
}

impl Tally {
    fn one() -> Self {
        Tally { instances: 1, ..Tally::default() }
    }

    fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    fn skip(&mut self, key: &str) {
        *self.skipped.entry(key.to_string()).or_default() += 1;
    }
}

fn report(claim: Claim, pool: String, checks: Vec<Check>, clauses: bool, seed: Option<u64>) -> ClaimReport {
    let mut instances = 0;
    let mut counts = BTreeMap::new();
    let mut skipped = BTreeMap::new();
    let mut counterexample = None;
    let mut failures = 0;
    for check in checks {
        match check {
            Ok(t) => {
                instances += t.instances;
                for (k, v) in t.counts {
                    *counts.entry(k).or_default() += v;
                }
                for (k, v) in t.skipped {
                    *skipped.entry(k).or_default() += v;
                }
            }
            Err(cx) => {
                instances += 1;
                failures += 1;
                counterexample.get_or_insert(cx);
            }
        }
    }
    ClaimReport {
        claim: claim.id(),
        pool,
        instances,
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        failures,
        vacuous: instances == 0,
        counterexample,
        clause_tally: clauses.then_some(counts),
        skipped,
        seed,
    }
}

fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(usize, &T) -> R + Sync) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
}

fn show(value: Option<usize>) -> String {
    value.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn solver_failure(graphs: Vec<GraphRecord>, err: SolverError) -> Counterexample {
    Counterexample::new(graphs, "a solver result", format!("error: {err}"))
}

/// A pool member with a human-readable label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        NamedGraph { name: name.into(), graph }
    }

    pub fn family(family: Family) -> Self {
        NamedGraph::new(family.to_string(), family.build().expect("curated families are valid"))
    }
}

/// Size limits and sampling parameters for a harness run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest factor (or enumerated graph) order included in default pools.
    pub max_order: usize,
    /// Largest product order the product claims will solve.
    pub max_product_order: usize,
    /// Dominating sets sampled per corona for the copy-domination claim.
    pub samples: usize,
    /// 2-movable sets sampled per corona and mode for the exchange claim.
    pub movable_samples: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_order: 5, max_product_order: 16, samples: 100, movable_samples: 50, seed: 7 }
    }
}

impl Budget {
    /// Every pool empty, every sample count zero.
    pub fn empty() -> Self {
        Budget { max_order: 0, max_product_order: 0, samples: 0, movable_samples: 0, seed: 7 }
    }
}

/// All connected labeled graphs with `lo ≤ n ≤ hi`, `hi` capped at the
/// enumeration limit.
pub fn connected_pool(lo: usize, hi: usize) -> Vec<NamedGraph> {
    (lo.max(1)..=hi.min(MAX_ENUMERATION_ORDER))
        .flat_map(|n| {
            enumerate_connected_graphs(n)
                .expect("order within enumeration range")
                .enumerate()
                .map(move |(i, g)| NamedGraph::new(format!("connected-{n}#{i}"), g))
        })
        .collect()
}

fn curated(families: &[Family], max_order: usize) -> Vec<NamedGraph> {
    families.iter().filter(|f| f.order() <= max_order).map(|&f| NamedGraph::family(f)).collect()
}

/// `P2, P3, P4, C3, C4, K2, K3, K4, K_{1,3}`.
pub fn join_factors(max_order: usize) -> Vec<NamedGraph> {
    use Family::*;
    curated(&[Path(2), Path(3), Path(4), Cycle(3), Cycle(4), Complete(2), Complete(3), Complete(4), Star(4)], max_order)
}

/// Left corona factors `K1, K2, P3, C3`.
pub fn corona_left_factors(max_order: usize) -> Vec<NamedGraph> {
    use Family::*;
    curated(&[Complete(1), Complete(2), Path(3), Cycle(3)], max_order)
}

/// Right corona factors `K1, K2, P3, K3`.
pub fn corona_right_factors(max_order: usize) -> Vec<NamedGraph> {
    use Family::*;
    curated(&[Complete(1), Complete(2), Path(3), Complete(3)], max_order)
}

/// `P4, P5, C4, C5, K4, K_{1,4}`.
pub fn apex_partners(max_order: usize) -> Vec<NamedGraph> {
    use Family::*;
    curated(&[Path(4), Path(5), Cycle(4), Cycle(5), Complete(4), Star(5)], max_order)
}

fn describe(pool: &[NamedGraph]) -> String {
    let names: Vec<&str> = pool.iter().map(|g| g.name.as_str()).collect();
    if names.len() <= 12 {
        format!("[{}]", names.join(", "))
    } else {
        let mut orders: Vec<usize> = pool.iter().map(|g| g.graph.order()).collect();
        orders.sort_unstable();
        orders.dedup();
        format!("{} graphs of orders {:?}", names.len(), orders)
    }
}

fn describe_pairs(left: &[NamedGraph], right: &[NamedGraph]) -> String {
    format!("{} x {}", describe(left), describe(right))
}

struct Corona<'a> {
    left: &'a NamedGraph,
    right: &'a NamedGraph,
    graph: Graph,
    layout: CoronaLayout,
}

impl Corona<'_> {
    fn records(&self) -> Vec<GraphRecord> {
        vec![
            GraphRecord::new("left", self.left),
            GraphRecord::new("right", self.right),
            GraphRecord::product(format!("{} o {}", self.left.name, self.right.name), &self.graph),
        ]
    }
}

fn coronas<'a>(left: &'a [NamedGraph], right: &'a [NamedGraph], max_order: usize) -> Vec<Corona<'a>> {
    let mut out = Vec::new();
    for l in left {
        for r in right {
            if l.graph.order() * (1 + r.graph.order()) > max_order {
                continue;
            }
            let (graph, layout) = corona(&l.graph, &r.graph).expect("factors are valid graphs");
            out.push(Corona { left: l, right: r, graph, layout });
        }
    }
    out
}

/// Runs claims against a [`Solvers`] implementation.
pub struct Harness<'s> {
    solvers: &'s dyn Solvers,
}

impl Default for Harness<'static> {
    fn default() -> Self {
        Harness { solvers: &ExactSolvers }
    }
}

impl<'s> Harness<'s> {
    pub fn new(solvers: &'s dyn Solvers) -> Self {
        Harness { solvers }
    }

    /// `γ_m²(G) ≥ 2` in both modes wherever the invariant exists.
    pub fn verify_pair_floor(&self, pool: &[NamedGraph]) -> ClaimReport {
        let admissible: Vec<&NamedGraph> =
            pool.iter().filter(|g| g.graph.order() >= 4 && g.graph.is_connected()).collect();
        let checks = par_map(&admissible, |_, g| {
            let records = || vec![GraphRecord::new("graph", g)];
            let mut tally = Tally::one();
            for mode in ReplacementMode::BOTH {
                let result = self.solvers.gamma_m2(&g.graph, mode).map_err(|e| solver_failure(records(), e))?;
                match result.value() {
                    None => tally.skip(&format!("gamma_m2 not-exists ({mode})")),
                    Some(v) if v < 2 => {
                        return Err(Counterexample::new(records(), ">= 2", v.to_string()).mode(mode));
                    }
                    Some(_) => {}
                }
            }
            Ok(tally)
        });
        report(Claim::PairFloor, describe_refs(&admissible, "connected, n >= 4"), checks, false, None)
    }

    /// `γ ≤ γ_m¹` always, and `γ ≤ γ_m²` (both modes) wherever `γ_m²` exists.
    pub fn verify_hierarchy(&self, pool: &[NamedGraph]) -> ClaimReport {
        let admissible: Vec<&NamedGraph> =
            pool.iter().filter(|g| g.graph.order() >= 4 && g.graph.is_connected()).collect();
        let checks = par_map(&admissible, |_, g| {
            let records = || vec![GraphRecord::new("graph", g)];
            let fail = |e| solver_failure(records(), e);
            let mut tally = Tally::one();
            let gamma = self.solvers.gamma(&g.graph).map_err(fail)?.value();
            let Some(gamma) = gamma else {
                return Err(Counterexample::new(records(), "gamma exists", "none"));
            };
            let m1 = self.solvers.gamma_m1(&g.graph).map_err(fail)?.value();
            match m1 {
                Some(v) if gamma <= v => {}
                other => {
                    return Err(Counterexample::new(
                        records(),
                        format!("gamma_m1 >= gamma = {gamma}"),
                        format!("gamma_m1 = {}", show(other)),
                    ));
                }
            }
            for mode in ReplacementMode::BOTH {
                match self.solvers.gamma_m2(&g.graph, mode).map_err(fail)?.value() {
                    None => tally.skip(&format!("existence=false ({mode})")),
                    Some(v) if v < gamma => {
                        return Err(Counterexample::new(
                            records(),
                            format!("gamma_m2 >= gamma = {gamma}"),
                            format!("gamma_m2 = {v}"),
                        )
                        .mode(mode));
                    }
                    Some(_) => {}
                }
            }
            Ok(tally)
        });
        report(Claim::Hierarchy, describe_refs(&admissible, "connected, n >= 4"), checks, false, None)
    }

    /// `γ_m²(G + H) = 2` in both modes for factors of order ≥ 2.
    pub fn verify_join_value(
        &self,
        left: &[NamedGraph],
        right: &[NamedGraph],
        max_product_order: usize,
    ) -> ClaimReport {
        let mut pairs = Vec::new();
        for l in left.iter().filter(|g| g.graph.order() >= 2) {
            for r in right.iter().filter(|g| g.graph.order() >= 2) {
                if l.graph.order() + r.graph.order() <= max_product_order {
                    pairs.push((l, r));
                }
            }
        }
        let checks = par_map(&pairs, |_, &(l, r)| {
            let (product, _) = join(&l.graph, &r.graph).expect("factors are valid graphs");
            let records = || {
                vec![
                    GraphRecord::new("left", l),
                    GraphRecord::new("right", r),
                    GraphRecord::product(format!("{} + {}", l.name, r.name), &product),
                ]
            };
            for mode in ReplacementMode::BOTH {
                let value = self.solvers.gamma_m2(&product, mode).map_err(|e| solver_failure(records(), e))?.value();
                if value != Some(2) {
                    return Err(Counterexample::new(records(), "2", show(value)).mode(mode));
                }
            }
            Ok(Tally::one())
        });
        report(Claim::JoinValue, describe_pairs(left, right), checks, false, None)
    }

    /// `γ_m²(G ∘ H) = |V(G)|·γ(H)` in both modes for connected factors with
    /// `4 ≤ |V(G ∘ H)| ≤ max_product_order`.
    pub fn verify_corona_value(
        &self,
        left: &[NamedGraph],
        right: &[NamedGraph],
        max_product_order: usize,
    ) -> ClaimReport {
        let connected = |g: &&NamedGraph| g.graph.is_connected();
        let left: Vec<NamedGraph> = left.iter().filter(connected).cloned().collect();
        let right: Vec<NamedGraph> = right.iter().filter(connected).cloned().collect();
        let instances: Vec<Corona> =
            coronas(&left, &right, max_product_order).into_iter().filter(|c| c.graph.order() >= 4).collect();
        let checks = par_map(&instances, |_, c| {
            let fail = |e| solver_failure(c.records(), e);
            let gamma_h = self.solvers.gamma(&c.right.graph).map_err(fail)?.value().unwrap_or(0);
            let expected = c.left.graph.order() * gamma_h;
            for mode in ReplacementMode::BOTH {
                let value = self.solvers.gamma_m2(&c.graph, mode).map_err(fail)?.value();
                if value != Some(expected) {
                    return Err(Counterexample::new(c.records(), expected.to_string(), show(value)).mode(mode));
                }
            }
            Ok(Tally::one())
        });
        report(Claim::CoronaValue, describe_pairs(&left, &right), checks, false, None)
    }

    /// `γ_m²(K_1 + H) = γ(H)` in both modes for connected `H` of order ≥ 4.
    pub fn verify_apex_join(&self, pool: &[NamedGraph], max_product_order: usize) -> ClaimReport {
        let admissible: Vec<&NamedGraph> = pool
            .iter()
            .filter(|g| g.graph.order() >= 4 && g.graph.is_connected() && g.graph.order() < max_product_order)
            .collect();
        let apex = NamedGraph::family(Family::Complete(1));
        let checks = par_map(&admissible, |_, h| {
            let (product, _) = join(&apex.graph, &h.graph).expect("factors are valid graphs");
            let records = || {
                vec![
                    GraphRecord::new("left", &apex),
                    GraphRecord::new("right", h),
                    GraphRecord::product(format!("{} + {}", apex.name, h.name), &product),
                ]
            };
            let fail = |e| solver_failure(records(), e);
            let expected = self.solvers.gamma(&h.graph).map_err(fail)?.value();
            for mode in ReplacementMode::BOTH {
                let value = self.solvers.gamma_m2(&product, mode).map_err(fail)?.value();
                if value != expected {
                    return Err(Counterexample::new(records(), show(expected), show(value)).mode(mode));
                }
            }
            Ok(Tally::one())
        });
        report(Claim::ApexJoin, describe_refs(&admissible, "connected, n >= 4"), checks, false, None)
    }

    /// For sampled dominating `T` of each corona and every center `a ∉ T`,
    /// `T ∩ V(H^a)` dominates `H^a`. Centers in `T` are tallied as skipped.
    pub fn verify_copy_domination(
        &self,
        left: &[NamedGraph],
        right: &[NamedGraph],
        max_product_order: usize,
        samples: usize,
        seed: u64,
    ) -> ClaimReport {
        let instances = coronas(left, right, max_product_order);
        let checks = par_map(&instances, |i, c| {
            let mut tally = Tally::default();
            for t in sample_dominating_sets(&c.graph, samples, seed.wrapping_add(i as u64)) {
                tally.instances += 1;
                check_copy_domination(c, t, &mut tally)?;
            }
            Ok(tally)
        });
        report(Claim::CopyDomination, describe_pairs(left, right), checks, false, Some(seed))
    }

    /// For the solver's γ_m² witness and `samples` uniformly drawn 2-movable
    /// sets `T` of each corona (per mode), every center `a` and every
    /// `u ∈ S_a = T ∩ V(H^a)` satisfy at least one of
    ///
    /// 1. `T_a ∖ {a, u}` dominates `H^a`;
    /// 2. some `x_a ∉ T_a` adjacent to `a` and `x_u ∉ T_a` adjacent to `u`
    ///    (distinct in DISTINCT mode) make `(T_a ∖ {a, u}) ∪ {x_a, x_u}`
    ///    dominate `H^a`;
    /// 3. some `x_u ∉ T_a` adjacent to `u` makes `(T_a ∖ {a, u}) ∪ {x_u}`
    ///    dominate `H^a`;
    ///
    /// where `T_a = T ∩ V(a + H^a)`, adjacency is taken in `a + H^a`, and a
    /// set dominates `H^a` when its closed neighborhood in `a + H^a` contains
    /// `V(H^a)`. Every sampled set's certificate is re-verified first.
    pub fn verify_copy_exchange(
        &self,
        left: &[NamedGraph],
        right: &[NamedGraph],
        max_product_order: usize,
        samples: usize,
        seed: u64,
        modes: &[ReplacementMode],
    ) -> ClaimReport {
        let instances = coronas(left, right, max_product_order);
        let checks = par_map(&instances, |i, c| {
            let mut tally = Tally::default();
            for &mode in modes {
                let fail = |e| solver_failure(c.records(), e);
                let mut sets = Vec::new();
                if let Some(w) = self.solvers.gamma_m2(&c.graph, mode).map_err(fail)?.witness() {
                    sets.push(w);
                }
                let family = all_2movable_sets(&c.graph, mode).map_err(fail)?;
                if family.is_empty() {
                    tally.skip(&format!("no 2-movable set ({mode})"));
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
                    sets.extend((0..samples).map(|_| family[rng.random_range(0..family.len())]));
                }
                for t in sets {
                    tally.instances += 1;
                    check_copy_exchange(c, t, mode, &mut tally)?;
                }
            }
            Ok(tally)
        });
        report(Claim::CopyExchange, describe_pairs(left, right), checks, true, Some(seed))
    }

    /// Default pools for `claim` under `budget`.
    pub fn run_claim(&self, claim: Claim, budget: &Budget) -> ClaimReport {
        let b = budget;
        match claim {
            Claim::PairFloor => self.verify_pair_floor(&connected_pool(4, b.max_order)),
            Claim::Hierarchy => self.verify_hierarchy(&connected_pool(4, b.max_order)),
            Claim::JoinValue => {
                let pool = join_factors(b.max_order);
                self.verify_join_value(&pool, &pool, b.max_product_order)
            }
            Claim::CoronaValue => self.verify_corona_value(
                &corona_left_factors(b.max_order),
                &corona_right_factors(b.max_order),
                b.max_product_order,
            ),
            Claim::ApexJoin => self.verify_apex_join(&apex_partners(b.max_order), b.max_product_order),
            Claim::CopyDomination => self.verify_copy_domination(
                &corona_left_factors(b.max_order),
                &corona_right_factors(b.max_order),
                b.max_product_order,
                b.samples,
                b.seed,
            ),
            Claim::CopyExchange => self.verify_copy_exchange(
                &corona_left_factors(b.max_order),
                &corona_right_factors(b.max_order),
                b.max_product_order,
                b.movable_samples,
                b.seed,
                &ReplacementMode::BOTH,
            ),
        }
    }

    /// Every claim, in [`Claim::ALL`] order.
    pub fn run_all(&self, budget: &Budget) -> Vec<ClaimReport> {
        Claim::ALL.iter().map(|&c| self.run_claim(c, budget)).collect()
    }
}

fn describe_refs(pool: &[&NamedGraph], filter: &str) -> String {
    let owned: Vec<NamedGraph> = pool.iter().map(|&g| g.clone()).collect();
    format!("{} ({filter})", describe(&owned))
}

fn check_copy_domination(c: &Corona, t: VertexSet, tally: &mut Tally) -> Result<(), Counterexample> {
    if !is_dominating(&c.graph, t) {
        return Err(Counterexample::new(c.records(), "a dominating sample", "non-dominating sample").set(t));
    }
    for (a, &center) in c.layout.centers.iter().enumerate() {
        if t.contains(center) {
            tally.skip("center in T");
            continue;
        }
        tally.count("centers checked");
        let copy = slice_copy(&c.layout, a, &c.graph).expect("layout matches product");
        let local = copy.restrict(t);
        if !is_dominating(&copy.graph, local) {
            let mut cx = Counterexample::new(
                c.records(),
                "T ∩ V(H^a) dominates H^a",
                format!("local set {local} does not dominate the copy"),
            )
            .set(t);
            cx.center = Some(center);
            return Err(cx);
        }
    }
    Ok(())
}

fn check_copy_exchange(
    c: &Corona,
    t: VertexSet,
    mode: ReplacementMode,
    tally: &mut Tally,
) -> Result<(), Counterexample> {
    let verdict = is_2movable_dominating(&c.graph, t, mode).ok();
    let certified = verdict
        .as_ref()
        .and_then(|v| v.certificate())
        .map(|cert| verify_certificate(&c.graph, t, cert, mode) == Ok(true))
        .unwrap_or(false);
    if !certified {
        return Err(Counterexample::new(c.records(), "a certified 2-movable set", "uncertified set").mode(mode).set(t));
    }
    for a in 0..c.layout.centers.len() {
        let closed = slice_closed_copy(&c.layout, a, &c.graph).expect("layout matches product");
        let g = &closed.graph;
        // Local indices: 0 is the center, 1..=|H| the copy.
        let copy = g.vertices().without(0);
        let t_a = closed.restrict(t);
        let s_a = t_a.without(0);
        if s_a.is_empty() {
            tally.skip("center with empty S_a");
            continue;
        }
        let dominates_copy = |x: VertexSet| copy.is_subset(g.closed_neighborhood(x).expect("local set"));
        for u in s_a {
            let base = t_a.without(0).without(u);
            let outside = g.vertices().difference(t_a);
            let clause_i = dominates_copy(base);
            let clause_ii = g.neighbors(0).intersection(outside).iter().any(|xa| {
                g.neighbors(u)
                    .intersection(outside)
                    .iter()
                    .any(|xu| (mode == ReplacementMode::Literal || xa != xu) && dominates_copy(base.with(xa).with(xu)))
            });
            let clause_iii = g.neighbors(u).intersection(outside).iter().any(|xu| dominates_copy(base.with(xu)));
            for (name, fired) in [("i", clause_i), ("ii", clause_ii), ("iii", clause_iii)] {
                if fired {
                    tally.count(name);
                }
            }
            if !(clause_i || clause_ii || clause_iii) {
                let mut cx =
                    Counterexample::new(c.records(), "clause i, ii or iii", "no clause holds").mode(mode).set(t);
                cx.center = Some(closed.to_product(0));
                cx.vertex = Some(closed.to_product(u));
                return Err(cx);
            }
        }
    }
    Ok(())
}
