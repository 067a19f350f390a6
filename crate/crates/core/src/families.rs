//! Named graph families and the `name:params` mini-grammar used to refer to
//! them from the command line.
//!
//! | spec                    | graph                         | minimum       |
//! |-------------------------|-------------------------------|---------------|
//! | `path:n`                | P_n, vertices along the walk  | n ≥ 1         |
//! | `cycle:n`               | C_n, vertices along the walk  | n ≥ 3         |
//! | `complete:n`            | K_n                           | n ≥ 1         |
//! | `star:n`                | K_{1,n-1}, center 0           | n ≥ 2         |
//! | `complete_bipartite:a,b`| K_{a,b}, parts `0..a`, `a..`  | a ≥ 1, b ≥ 1  |
//! | `empty:n`               | n isolated vertices           | n ≥ 1         |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Total vertex count, including the center.
    Star(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("malformed family spec {0:?}, expected name:params")]
    Malformed(String),
    #[error("{family} needs {minimum}, got {got}")]
    BelowMinimum { family: &'static str, minimum: &'static str, got: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Empty(_) => "empty",
        }
    }

    pub fn order(self) -> usize {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Star(n) | Family::Empty(n) => n,
            Family::CompleteBipartite(a, b) => a + b,
        }
    }

    fn check_minimum(self) -> Result<(), FamilyError> {
        let (ok, minimum) = match self {
            Family::Path(n) | Family::Complete(n) | Family::Empty(n) => (n >= 1, "n >= 1"),
            Family::Cycle(n) => (n >= 3, "n >= 3"),
            Family::Star(n) => (n >= 2, "n >= 2"),
            Family::CompleteBipartite(a, b) => (a >= 1 && b >= 1, "a >= 1 and b >= 1"),
        };
        if ok {
            Ok(())
        } else {
            Err(FamilyError::BelowMinimum { family: self.name(), minimum, got: self.params() })
        }
    }

    fn params(self) -> String {
        match self {
            Family::CompleteBipartite(a, b) => format!("{a},{b}"),
            other => other.order().to_string(),
        }
    }

    pub fn build(self) -> Result<Graph, FamilyError> {
        self.check_minimum()?;
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n }.into());
        }
        let edges: Vec<(usize, usize)> = match self {
            Family::Path(n) => (1..n).map(|v| (v - 1, v)).collect(),
            Family::Cycle(n) => (0..n).map(|v| (v, (v + 1) % n)).collect(),
            Family::Complete(n) => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
            Family::Star(n) => (1..n).map(|v| (0, v)).collect(),
            Family::CompleteBipartite(a, b) => (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect(),
            Family::Empty(_) => Vec::new(),
        };
        Ok(Graph::from_edge_list(n, &edges)?)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name(), self.params())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let malformed = || FamilyError::Malformed(s.to_string());
        let (name, params) = s.split_once(':').ok_or_else(malformed)?;
        let number = |t: &str| t.parse::<usize>().map_err(|_| malformed());
        let family = match name {
            "path" => Family::Path(number(params)?),
            "cycle" => Family::Cycle(number(params)?),
            "complete" => Family::Complete(number(params)?),
            "star" => Family::Star(number(params)?),
            "empty" => Family::Empty(number(params)?),
            "complete_bipartite" => {
                let (a, b) = params.split_once(',').ok_or_else(malformed)?;
                Family::CompleteBipartite(number(a)?, number(b)?)
            }
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

/// Parses `name:params` and builds the graph.
pub fn make_family(spec: &str) -> Result<Graph, FamilyError> {
    spec.parse::<Family>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_four() {
        let g = make_family("complete:4").unwrap();
        assert_eq!(g.size(), 6);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn star_center_is_zero() {
        let g = make_family("star:4").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn walk_numbering() {
        let c = make_family("cycle:5").unwrap();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(make_family("path:1").unwrap().size(), 0);
    }

    #[test]
    fn bipartite_parts() {
        let g = make_family("complete_bipartite:2,3").unwrap();
        assert_eq!(g.size(), 6);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(1, 4));
    }

    #[test]
    fn minimums_enforced() {
        assert!(matches!(make_family("cycle:2"), Err(FamilyError::BelowMinimum { .. })));
        assert!(matches!(make_family("star:1"), Err(FamilyError::BelowMinimum { .. })));
        assert!(matches!(make_family("path:0"), Err(FamilyError::BelowMinimum { .. })));
        assert!(matches!(make_family("complete_bipartite:0,2"), Err(FamilyError::BelowMinimum { .. })));
    }

    #[test]
    fn grammar_errors() {
        assert!(matches!(make_family("wheel:5"), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!(make_family("path"), Err(FamilyError::Malformed(_))));
        assert!(matches!(make_family("path:x"), Err(FamilyError::Malformed(_))));
        assert!(matches!(make_family("complete_bipartite:3"), Err(FamilyError::Malformed(_))));
        assert!(matches!(make_family("complete:65"), Err(FamilyError::Graph(_))));
    }

    #[test]
    fn display_round_trips() {
        for s in ["path:4", "cycle:3", "complete:1", "star:5", "complete_bipartite:2,3", "empty:2"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
    }
}
