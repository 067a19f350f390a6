//! Immutable simple undirected graphs over dense vertex indices, and the
//! [`VertexSet`] bitset every predicate in the crate works with.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can represent (one `u64` word per row).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("{n} vertices exceeds the representable maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("edge ({u}, {v}) has an endpoint out of range for {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
}

/// A subset of `0..n` stored as a bitmask.
///
/// The set does not know its graph; [`Graph::check_set`] validates it against
/// one. Ordering is by raw bitmask value, which is the tie-break order used by
/// every solver.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("vertex {v} is out of range for a graph on {n} vertices")]
pub struct SetOutOfRange {
    pub v: usize,
    pub n: usize,
}

/// Simple undirected graph on vertices `0..n`.
///
/// Rows are neighbor bitsets; the constructor guarantees symmetry, no loops
/// and no bits at or above `n`. There are no mutating methods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adjacency = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        let graph = Graph { adjacency };
        graph.debug_check();
        Ok(graph)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, &[])
    }

    pub(crate) fn from_rows_unchecked(adjacency: Vec<u64>) -> Self {
        let graph = Graph { adjacency };
        graph.debug_check();
        graph
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let n = self.order();
            let in_range = VertexSet::full(n);
            for (v, &row) in self.adjacency.iter().enumerate() {
                assert_eq!(row >> v & 1, 0, "self-loop at {v}");
                assert!(VertexSet::from_bits(row).is_subset(in_range), "row {v} out of range");
                for u in VertexSet::from_bits(row) {
                    assert!(self.adjacency[u] >> v & 1 == 1, "asymmetric edge {v}-{u}");
                }
            }
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adjacency.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adjacency[u] >> v & 1 == 1
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adjacency[v])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| VertexSet::from_bits(row >> u >> 1 << 1 << u).iter().map(move |v| (u, v)))
    }

    pub fn check_set(&self, set: VertexSet) -> Result<(), SetOutOfRange> {
        match set.difference(self.vertices()).first() {
            Some(v) => Err(SetOutOfRange { v, n: self.order() }),
            None => Ok(()),
        }
    }

    /// `N[S]` without range checking; callers pass validated sets.
    pub(crate) fn closed_cover(&self, set: VertexSet) -> VertexSet {
        let mut cover = set.bits();
        for v in set {
            cover |= self.adjacency[v];
        }
        VertexSet::from_bits(cover)
    }

    /// `N[S] = S ∪ {u : u adjacent to some member of S}`.
    pub fn closed_neighborhood(&self, set: VertexSet) -> Result<VertexSet, SetOutOfRange> {
        self.check_set(set)?;
        Ok(self.closed_cover(set))
    }

    /// `N(S)`: union of the open neighborhoods of the members of `S`.
    pub fn open_neighborhood(&self, set: VertexSet) -> Result<VertexSet, SetOutOfRange> {
        self.check_set(set)?;
        Ok(set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v))))
    }

    pub fn is_connected(&self) -> bool {
        let all = self.vertices();
        let mut reached = VertexSet::singleton(0);
        loop {
            let next = self.closed_cover(reached);
            if next == reached {
                return reached == all;
            }
            reached = next;
        }
    }

    /// Subgraph induced by `set`, with members re-indexed in ascending order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph, GraphError> {
        let order: Vec<usize> = set.to_vec();
        let mut edges = Vec::new();
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edge_list(order.len(), &edges)
    }

    /// Graphviz rendering, edges only.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.order()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn path_degrees() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g, p(3));
    }

    #[test]
    fn construction_errors_are_distinct() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(GraphError::SelfLoop { v: 0 }));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::Empty));
        assert_eq!(Graph::from_edge_list(2, &[(0, 2)]), Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 }));
        assert_eq!(Graph::from_edge_list(65, &[]), Err(GraphError::TooManyVertices { n: 65 }));
    }

    #[test]
    fn neighborhoods() {
        let p3 = p(3);
        let p4 = p(4);
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert_eq!(p3.closed_neighborhood(s(&[1])).unwrap(), s(&[0, 1, 2]));
        assert_eq!(p4.closed_neighborhood(s(&[0])).unwrap(), s(&[0, 1]));
        assert_eq!(p4.closed_neighborhood(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert_eq!(p4.open_neighborhood(s(&[0, 1])).unwrap(), s(&[0, 1, 2]));
        assert_eq!(p4.open_neighborhood(s(&[0])).unwrap(), s(&[1]));
        assert_eq!(p4.closed_neighborhood(s(&[4])), Err(SetOutOfRange { v: 4, n: 4 }));
    }

    #[test]
    fn connectivity() {
        assert!(p(4).is_connected());
        assert!(!Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::from_edge_list(4, &[(3, 2), (1, 0), (0, 3), (2, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (2, 3)]);
    }

    #[test]
    fn induced_reindexes() {
        let g = p(5);
        let sub = g.induced([1usize, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(sub.order(), 3);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0usize, 2, 5].into_iter().collect();
        let b: VertexSet = [2usize, 3].into_iter().collect();
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 5]);
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.last(), Some(5));
        assert_eq!(a.to_string(), "{0, 2, 5}");
        assert!(VertexSet::full(64).contains(63));
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[0,2,5]");
        assert_eq!(serde_json::from_str::<VertexSet>(&json).unwrap(), a);
    }
}
