//! Exact domination, 1-movable domination and 2-movable domination numbers
//! for small simple graphs, join and corona constructors with explicit
//! layouts, and a harness that checks the known closed-form results for
//! these invariants over finite instance pools.

pub mod domination;
pub mod edgelist;
pub mod families;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod movable;
pub mod products;
pub mod subsets;

pub use domination::{gamma, is_dominating, sample_dominating_sets, SolverError, SolverResult};
pub use families::{make_family, Family};
pub use graph::{Graph, GraphError, VertexSet};
pub use movable::{
    gamma_m1, gamma_m2, is_1movable_dominating, is_2movable_dominating, verify_certificate, MovabilityCertificate,
    ReplacementMode, Verdict,
};
pub use products::{corona, join, CoronaLayout, JoinLayout};
