//! 1-movable and 2-movable domination: predicates with certificates, exact
//! solvers, and an independent certificate checker.
//!
//! A dominating set `S` is *1-movable* when every `v ∈ S` can either be
//! dropped, or swapped for some `u ∈ N(v) ∖ S`, with the result still
//! dominating. It is *2-movable* when `|S| ≥ 2` and every unordered pair of
//! distinct `x, y ∈ S` can be dropped together, or swapped for `u ∈ N(x) ∖ S`
//! and `v ∈ N(y) ∖ S` simultaneously. [`ReplacementMode`] decides whether the
//! two replacements may be the same vertex.
//!
//! Singletons are never 2-movable, so `γ_m²(G) ≥ 2` whenever it exists.
//! Neither property is monotone under supersets, so the solvers scan every
//! cardinality before reporting [`SolverResult::NotExists`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{check_order, gamma, is_dominating, SolverError, SolverResult};
use crate::graph::{Graph, SetOutOfRange, VertexSet};
use crate::subsets::find_first_k_subset;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReplacementMode {
    /// The two replacement vertices may coincide.
    #[default]
    Literal,
    /// The two replacement vertices must differ.
    Distinct,
}

impl ReplacementMode {
    pub const BOTH: [ReplacementMode; 2] = [ReplacementMode::Literal, ReplacementMode::Distinct];

    pub fn as_str(self) -> &'static str {
        match self {
            ReplacementMode::Literal => "literal",
            ReplacementMode::Distinct => "distinct",
        }
    }

    fn admits(self, u: usize, v: usize) -> bool {
        self == ReplacementMode::Literal || u != v
    }
}

impl fmt::Display for ReplacementMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown replacement mode {0:?} (expected literal or distinct)")]
pub struct UnknownMode(pub String);

impl FromStr for ReplacementMode {
    type Err = UnknownMode;

    fn from_str(s: &str) -> Result<Self, UnknownMode> {
        match s {
            "literal" => Ok(ReplacementMode::Literal),
            "distinct" => Ok(ReplacementMode::Distinct),
            other => Err(UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "lowercase")]
pub enum VertexAction {
    Drop,
    Swap { u: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMove {
    pub vertex: usize,
    #[serde(flatten)]
    pub action: VertexAction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "lowercase")]
pub enum PairAction {
    Drop,
    /// `u` replaces the first member of the pair, `v` the second.
    Swap {
        u: usize,
        v: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairMove {
    pub pair: (usize, usize),
    #[serde(flatten)]
    pub action: PairAction,
}

/// One move per member (1-movable) or per unordered pair (2-movable), in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "moves", rename_all = "kebab-case")]
pub enum MovabilityCertificate {
    OneMovable(Vec<VertexMove>),
    TwoMovable(Vec<PairMove>),
}

/// Why a set is not movable. Names the first violation in scan order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum MovabilityFailure {
    NotDominating { uncovered: usize },
    Singleton,
    StuckVertex { vertex: usize },
    StuckPair { x: usize, y: usize },
}

impl fmt::Display for MovabilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MovabilityFailure::NotDominating { uncovered } => {
                write!(f, "not dominating: vertex {uncovered} is uncovered")
            }
            MovabilityFailure::Singleton => write!(f, "a single vertex has no pairs to move"),
            MovabilityFailure::StuckVertex { vertex } => {
                write!(f, "vertex {vertex} can be neither dropped nor swapped")
            }
            MovabilityFailure::StuckPair { x, y } => {
                write!(f, "pair ({x}, {y}) can be neither dropped nor swapped")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Certified(MovabilityCertificate),
    Refuted(MovabilityFailure),
}

impl Verdict {
    pub fn certificate(&self) -> Option<&MovabilityCertificate> {
        match self {
            Verdict::Certified(c) => Some(c),
            Verdict::Refuted(_) => None,
        }
    }

    pub fn failure(&self) -> Option<MovabilityFailure> {
        match self {
            Verdict::Certified(_) => None,
            Verdict::Refuted(f) => Some(*f),
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("movability is undefined for the empty set")]
    EmptySet,
    #[error(transparent)]
    OutOfRange(#[from] SetOutOfRange),
}

fn validate(g: &Graph, set: VertexSet) -> Result<(), PredicateError> {
    if set.is_empty() {
        return Err(PredicateError::EmptySet);
    }
    g.check_set(set)?;
    Ok(())
}

fn first_uncovered(g: &Graph, set: VertexSet) -> Option<usize> {
    g.vertices().difference(g.closed_cover(set)).first()
}

fn vertex_move(g: &Graph, set: VertexSet, v: usize) -> Option<VertexAction> {
    let missing = g.vertices().difference(g.closed_cover(set.without(v)));
    if missing.is_empty() {
        return Some(VertexAction::Drop);
    }
    let outside = g.vertices().difference(set);
    g.neighbors(v)
        .intersection(outside)
        .iter()
        .find(|&u| missing.is_subset(g.closed_neighbors(u)))
        .map(|u| VertexAction::Swap { u })
}

/// DROP first, then SWAP candidates in ascending `(u, v)` order.
fn pair_move(g: &Graph, set: VertexSet, x: usize, y: usize, mode: ReplacementMode) -> Option<PairAction> {
    let missing = g.vertices().difference(g.closed_cover(set.without(x).without(y)));
    if missing.is_empty() {
        return Some(PairAction::Drop);
    }
    let outside = g.vertices().difference(set);
    let for_y = g.neighbors(y).intersection(outside);
    for u in g.neighbors(x).intersection(outside) {
        let still_missing = missing.difference(g.closed_neighbors(u));
        for v in for_y {
            if mode.admits(u, v) && still_missing.is_subset(g.closed_neighbors(v)) {
                return Some(PairAction::Swap { u, v });
            }
        }
    }
    None
}

fn pairs(set: VertexSet) -> impl Iterator<Item = (usize, usize)> {
    set.iter().flat_map(move |x| set.iter().filter(move |&y| y > x).map(move |y| (x, y)))
}

fn one_movable_unchecked(g: &Graph, set: VertexSet) -> Result<Vec<VertexMove>, MovabilityFailure> {
    if let Some(uncovered) = first_uncovered(g, set) {
        return Err(MovabilityFailure::NotDominating { uncovered });
    }
    set.iter()
        .map(|vertex| {
            vertex_move(g, set, vertex)
                .map(|action| VertexMove { vertex, action })
                .ok_or(MovabilityFailure::StuckVertex { vertex })
        })
        .collect()
}

fn two_movable_unchecked(g: &Graph, set: VertexSet, mode: ReplacementMode) -> Result<Vec<PairMove>, MovabilityFailure> {
    if let Some(uncovered) = first_uncovered(g, set) {
        return Err(MovabilityFailure::NotDominating { uncovered });
    }
    if set.len() < 2 {
        return Err(MovabilityFailure::Singleton);
    }
    pairs(set)
        .map(|(x, y)| {
            pair_move(g, set, x, y, mode)
                .map(|action| PairMove { pair: (x, y), action })
                .ok_or(MovabilityFailure::StuckPair { x, y })
        })
        .collect()
}

fn passes_one(g: &Graph, set: VertexSet) -> bool {
    first_uncovered(g, set).is_none() && set.iter().all(|v| vertex_move(g, set, v).is_some())
}

fn passes_two(g: &Graph, set: VertexSet, mode: ReplacementMode) -> bool {
    set.len() >= 2
        && first_uncovered(g, set).is_none()
        && pairs(set).all(|(x, y)| pair_move(g, set, x, y, mode).is_some())
}

pub fn is_1movable_dominating(g: &Graph, set: VertexSet) -> Result<Verdict, PredicateError> {
    validate(g, set)?;
    Ok(match one_movable_unchecked(g, set) {
        Ok(moves) => Verdict::Certified(MovabilityCertificate::OneMovable(moves)),
        Err(failure) => Verdict::Refuted(failure),
    })
}

pub fn is_2movable_dominating(g: &Graph, set: VertexSet, mode: ReplacementMode) -> Result<Verdict, PredicateError> {
    validate(g, set)?;
    Ok(match two_movable_unchecked(g, set, mode) {
        Ok(moves) => Verdict::Certified(MovabilityCertificate::TwoMovable(moves)),
        Err(failure) => Verdict::Refuted(failure),
    })
}

fn minimize<F>(g: &Graph, from: usize, accept: F) -> Option<(usize, VertexSet)>
where
    F: Fn(VertexSet) -> bool + Sync,
{
    let n = g.order();
    (from..=n).find_map(|k| find_first_k_subset(n, k, |s| accept(s).then_some(s)).map(|s| (k, s)))
}

/// Exact 1-movable domination number `γ_m¹(G)`.
pub fn gamma_m1(g: &Graph) -> Result<SolverResult, SolverError> {
    check_order(g)?;
    let floor = gamma(g)?.value().unwrap_or(1).max(1);
    Ok(match minimize(g, floor, |s| passes_one(g, s)) {
        Some((value, witness)) => {
            let moves = one_movable_unchecked(g, witness).expect("witness passed the predicate");
            SolverResult::Found { value, witness, certificate: Some(MovabilityCertificate::OneMovable(moves)) }
        }
        None => SolverResult::NotExists,
    })
}

/// Exact 2-movable domination number `γ_m²(G)` under `mode`, searched over
/// cardinalities `max(2, γ(G))..=n`.
pub fn gamma_m2(g: &Graph, mode: ReplacementMode) -> Result<SolverResult, SolverError> {
    check_order(g)?;
    let floor = gamma(g)?.value().unwrap_or(2).max(2);
    Ok(match minimize(g, floor, |s| passes_two(g, s, mode)) {
        Some((value, witness)) => {
            let moves = two_movable_unchecked(g, witness, mode).expect("witness passed the predicate");
            SolverResult::Found { value, witness, certificate: Some(MovabilityCertificate::TwoMovable(moves)) }
        }
        None => SolverResult::NotExists,
    })
}

/// Every 2-movable dominating set of `g` under `mode`, ascending by bitmask.
pub fn all_2movable_sets(g: &Graph, mode: ReplacementMode) -> Result<Vec<VertexSet>, SolverError> {
    check_order(g)?;
    Ok((0..1u64 << g.order()).map(VertexSet::from_bits).filter(|&s| passes_two(g, s, mode)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error(transparent)]
    OutOfRange(#[from] SetOutOfRange),
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

fn coverage<T: Ord + Copy + fmt::Debug>(
    required: impl Iterator<Item = T>,
    listed: impl Iterator<Item = T>,
    what: &str,
) -> Result<(), CertificateError> {
    let required: BTreeSet<T> = required.collect();
    let mut seen = BTreeSet::new();
    for item in listed {
        if !required.contains(&item) {
            return Err(CertificateError::Malformed(format!("{what} {item:?} is not required for this set")));
        }
        if !seen.insert(item) {
            return Err(CertificateError::Malformed(format!("{what} {item:?} listed twice")));
        }
    }
    if let Some(missing) = required.difference(&seen).next() {
        return Err(CertificateError::Malformed(format!("{what} {missing:?} has no move")));
    }
    Ok(())
}

/// Re-checks a certificate from scratch against the definition.
///
/// Coverage problems (a required vertex or pair without exactly one move)
/// are errors; a well-formed certificate with an invalid move, or issued
/// for a set that does not dominate, yields `Ok(false)`. `mode` only
/// matters for pair certificates.
pub fn verify_certificate(
    g: &Graph,
    set: VertexSet,
    cert: &MovabilityCertificate,
    mode: ReplacementMode,
) -> Result<bool, CertificateError> {
    g.check_set(set)?;
    let outside = |u: usize| u < g.order() && !set.contains(u);
    match cert {
        MovabilityCertificate::OneMovable(moves) => {
            coverage(set.iter(), moves.iter().map(|m| m.vertex), "vertex")?;
            if set.is_empty() || !is_dominating(g, set) {
                return Ok(false);
            }
            Ok(moves.iter().all(|m| {
                let rest = set.without(m.vertex);
                match m.action {
                    VertexAction::Drop => is_dominating(g, rest),
                    VertexAction::Swap { u } => outside(u) && g.has_edge(u, m.vertex) && is_dominating(g, rest.with(u)),
                }
            }))
        }
        MovabilityCertificate::TwoMovable(moves) => {
            let normalized = moves.iter().map(|m| {
                let (x, y) = m.pair;
                (x.min(y), x.max(y))
            });
            if moves.iter().any(|m| m.pair.0 == m.pair.1) {
                return Err(CertificateError::Malformed("pair with a repeated vertex".into()));
            }
            coverage(pairs(set), normalized, "pair")?;
            if set.len() < 2 || !is_dominating(g, set) {
                return Ok(false);
            }
            Ok(moves.iter().all(|m| {
                let (x, y) = m.pair;
                let rest = set.without(x).without(y);
                match m.action {
                    PairAction::Drop => is_dominating(g, rest),
                    PairAction::Swap { u, v } => {
                        outside(u)
                            && outside(v)
                            && g.has_edge(u, x)
                            && g.has_edge(v, y)
                            && mode.admits(u, v)
                            && is_dominating(g, rest.with(u).with(v))
                    }
                }
            }))
        }
    }
}
