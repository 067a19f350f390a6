//! Dominating sets and the exact domination number.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::movable::MovabilityCertificate;
use crate::subsets::find_first_k_subset;

/// Solvers refuse graphs with more vertices than this.
pub const SOLVER_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices; exact solvers are capped at {SOLVER_MAX_ORDER}")]
    TooLarge { n: usize },
}

pub(crate) fn check_order(g: &Graph) -> Result<(), SolverError> {
    if g.order() > SOLVER_MAX_ORDER {
        Err(SolverError::TooLarge { n: g.order() })
    } else {
        Ok(())
    }
}

/// Outcome of an exact minimization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverResult {
    Found {
        value: usize,
        /// Least bitmask among the optimal sets.
        witness: VertexSet,
        certificate: Option<MovabilityCertificate>,
    },
    /// No set of any cardinality satisfies the predicate.
    NotExists,
}

impl SolverResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            SolverResult::Found { value, .. } => Some(*value),
            SolverResult::NotExists => None,
        }
    }

    pub fn witness(&self) -> Option<VertexSet> {
        match self {
            SolverResult::Found { witness, .. } => Some(*witness),
            SolverResult::NotExists => None,
        }
    }

    pub fn certificate(&self) -> Option<&MovabilityCertificate> {
        match self {
            SolverResult::Found { certificate, .. } => certificate.as_ref(),
            SolverResult::NotExists => None,
        }
    }

    pub fn exists(&self) -> bool {
        matches!(self, SolverResult::Found { .. })
    }
}

/// `N[S] = V(G)`. Sets with members outside the graph are never dominating.
pub fn is_dominating(g: &Graph, set: VertexSet) -> bool {
    g.check_set(set).is_ok() && g.closed_cover(set) == g.vertices()
}

/// Greedy cover: repeatedly add the vertex that dominates the most
/// still-undominated vertices, lowest index on ties.
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    greedy_repair(g, VertexSet::EMPTY)
}

fn greedy_repair(g: &Graph, mut set: VertexSet) -> VertexSet {
    let all = g.vertices();
    let mut covered = g.closed_cover(set);
    while covered != all {
        let uncovered = all.difference(covered);
        let best = (0..g.order())
            .max_by_key(|&v| (g.closed_neighbors(v).intersection(uncovered).len(), std::cmp::Reverse(v)))
            .expect("graph is nonempty");
        set.insert(best);
        covered = covered.union(g.closed_neighbors(best));
    }
    set
}

/// `⌈n / (1 + Δ)⌉`: each vertex dominates at most `1 + Δ` vertices.
pub fn domination_lower_bound(g: &Graph) -> usize {
    g.order().div_ceil(1 + g.max_degree())
}

/// Exact domination number `γ(G)`.
///
/// Cardinalities are tried upward from [`domination_lower_bound`]; the greedy
/// cover caps the search. The witness is the least-bitmask optimal set.
pub fn gamma(g: &Graph) -> Result<SolverResult, SolverError> {
    check_order(g)?;
    let n = g.order();
    let all = g.vertices();
    let upper = greedy_dominating_set(g).len();
    for k in domination_lower_bound(g)..=upper {
        let hit = find_first_k_subset(n, k, |s| (g.closed_cover(s) == all).then_some(s));
        if let Some(witness) = hit {
            return Ok(SolverResult::Found { value: k, witness, certificate: None });
        }
    }
    unreachable!("greedy cover of size {upper} is dominating")
}

/// `count` dominating sets, each a random subset (with a random density)
/// repaired by the greedy rule. Deterministic for a given seed.
pub fn sample_dominating_sets(g: &Graph, count: usize, seed: u64) -> Vec<VertexSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let density: f64 = rng.random();
            let start: VertexSet = (0..g.order()).filter(|_| rng.random_bool(density)).collect();
            greedy_repair(g, start)
        })
        .collect()
}
