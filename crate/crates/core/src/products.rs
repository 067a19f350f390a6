//! Join and corona products with explicit vertex layouts.
//!
//! Both products put the left factor's vertices first, at their original
//! indices. In the join `G + H` the right factor follows as one block. In the
//! corona `G ∘ H` the copy `H^a` attached to center `a` occupies
//! `|G| + a·|H| .. |G| + (a+1)·|H|`, with `H`'s own numbering preserved inside.

use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("center {a} out of range for a corona with {centers} centers")]
    CenterOutOfRange { a: usize, centers: usize },
    #[error("product has {got} vertices but the layout describes {expected}")]
    LayoutMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinLayout {
    pub left: Range<usize>,
    pub right: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoronaLayout {
    /// Product index of each vertex of the left factor; `centers[a] == a`.
    pub centers: Vec<usize>,
    /// `copies[a]` is the index interval of `H^a`.
    pub copies: Vec<Range<usize>>,
}

impl JoinLayout {
    pub fn order(&self) -> usize {
        self.right.end
    }
}

impl CoronaLayout {
    pub fn order(&self) -> usize {
        self.centers.len() + self.copies.iter().map(|r| r.len()).sum::<usize>()
    }

    pub fn copy_set(&self, a: usize) -> VertexSet {
        self.copies[a].clone().collect()
    }

    /// `V(a + H^a)`: the center together with its copy.
    pub fn closed_copy_set(&self, a: usize) -> VertexSet {
        self.copy_set(a).with(self.centers[a])
    }

    /// The center whose block (`a` itself or `H^a`) contains `v`.
    pub fn owner(&self, v: usize) -> Option<usize> {
        if v < self.centers.len() {
            return Some(v);
        }
        self.copies.iter().position(|r| r.contains(&v))
    }
}

/// `G + H`: disjoint union plus every edge between the two parts.
pub fn join(left: &Graph, right: &Graph) -> Result<(Graph, JoinLayout), ProductError> {
    let (p, q) = (left.order(), right.order());
    let mut edges: Vec<(usize, usize)> = left.edges().collect();
    edges.extend(right.edges().map(|(u, v)| (p + u, p + v)));
    for u in 0..p {
        edges.extend((0..q).map(|v| (u, p + v)));
    }
    let graph = Graph::from_edge_list(p + q, &edges)?;
    Ok((graph, JoinLayout { left: 0..p, right: p..p + q }))
}

/// `G ∘ H`: one copy of `H` per vertex of `G`, each vertex joined to its
/// whole copy. Disconnected factors are accepted.
pub fn corona(left: &Graph, right: &Graph) -> Result<(Graph, CoronaLayout), ProductError> {
    let (p, q) = (left.order(), right.order());
    let mut edges: Vec<(usize, usize)> = left.edges().collect();
    let mut copies = Vec::with_capacity(p);
    for a in 0..p {
        let base = p + a * q;
        edges.extend(right.edges().map(|(u, v)| (base + u, base + v)));
        edges.extend((base..base + q).map(|v| (a, v)));
        copies.push(base..base + q);
    }
    let graph = Graph::from_edge_list(p * (1 + q), &edges)?;
    Ok((graph, CoronaLayout { centers: (0..p).collect(), copies }))
}

/// An induced subgraph together with its index translation: local vertex `i`
/// is product vertex `members[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slice {
    pub graph: Graph,
    pub members: Vec<usize>,
}

impl Slice {
    pub fn to_product(&self, local: usize) -> usize {
        self.members[local]
    }

    pub fn to_local(&self, product: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == product)
    }

    /// Restricts a product set to the slice and re-indexes it.
    pub fn restrict(&self, set: VertexSet) -> VertexSet {
        self.members.iter().enumerate().filter(|&(_, &m)| set.contains(m)).map(|(i, _)| i).collect()
    }

    pub fn lift(&self, local: VertexSet) -> VertexSet {
        local.iter().map(|i| self.members[i]).collect()
    }
}

fn check_center(layout: &CoronaLayout, a: usize, product: &Graph) -> Result<(), ProductError> {
    if a >= layout.centers.len() {
        return Err(ProductError::CenterOutOfRange { a, centers: layout.centers.len() });
    }
    if product.order() != layout.order() {
        return Err(ProductError::LayoutMismatch { expected: layout.order(), got: product.order() });
    }
    Ok(())
}

/// `H^a` as a standalone graph, re-indexed to `0..|H|`.
pub fn slice_copy(layout: &CoronaLayout, a: usize, product: &Graph) -> Result<Slice, ProductError> {
    check_center(layout, a, product)?;
    let members: Vec<usize> = layout.copies[a].clone().collect();
    let graph = product.induced(layout.copy_set(a))?;
    Ok(Slice { graph, members })
}

/// `a + H^a` as a standalone graph: local 0 is the center, `1..=|H|` the copy.
pub fn slice_closed_copy(layout: &CoronaLayout, a: usize, product: &Graph) -> Result<Slice, ProductError> {
    check_center(layout, a, product)?;
    let mut members = vec![layout.centers[a]];
    members.extend(layout.copies[a].clone());
    let graph = product.induced(layout.closed_copy_set(a))?;
    Ok(Slice { graph, members })
}
