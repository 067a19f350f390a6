//! Instance generators: exhaustive labeled enumeration and seeded sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

/// Largest order [`enumerate_connected_graphs`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// Rejections [`random_connected_graph`] tolerates before forcing connectivity.
pub const MAX_REJECTIONS: usize = 256;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("labeled enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error("random graphs need 1 <= n <= {MAX_VERTICES}, got {0}")]
    RandomOrderOutOfRange(usize),
    #[error("edge probability must lie in [0, 1], got {0}")]
    Probability(f64),
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// Every connected labeled simple graph on `n` vertices, once each.
///
/// Bit `i` of the edge mask stands for the `i`-th pair `(u, v)`, `u < v`, in
/// lexicographic order; graphs come out in ascending mask order.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GenerateError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(GenerateError::OrderOutOfRange(n));
    }
    let pairs = vertex_pairs(n);
    let masks = 0..1u64 << pairs.len();
    Ok(masks.map(move |mask| graph_from_mask(n, &pairs, mask)).filter(Graph::is_connected))
}

/// Erdős–Rényi sample conditioned on connectivity by rejection.
///
/// After [`MAX_REJECTIONS`] disconnected draws the last draw is kept and a
/// uniform random spanning tree of `K_n` (Aldous–Broder walk) is added to it,
/// so `p = 0` still terminates. The result depends only on the arguments.
pub fn random_connected_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph, GenerateError> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(GenerateError::RandomOrderOutOfRange(n));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(GenerateError::Probability(edge_probability));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = vertex_pairs(n);
    let mut rows = vec![0u64; n];
    for _ in 0..MAX_REJECTIONS {
        rows.iter_mut().for_each(|r| *r = 0);
        for &(u, v) in &pairs {
            if rng.random_bool(edge_probability) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        let g = Graph::from_rows_unchecked(rows.clone());
        if g.is_connected() {
            return Ok(g);
        }
    }
    let mut visited = 1u64;
    let mut current = 0usize;
    while visited.count_ones() as usize != n {
        let mut next = rng.random_range(0..n - 1);
        if next >= current {
            next += 1;
        }
        if visited >> next & 1 == 0 {
            visited |= 1 << next;
            rows[current] |= 1 << next;
            rows[next] |= 1 << current;
        }
        current = next;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_family;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_connected_graphs(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38]);
    }

    #[test]
    fn two_vertices_is_k2() {
        let all: Vec<_> = enumerate_connected_graphs(2).unwrap().collect();
        assert_eq!(all, vec![make_family("complete:2").unwrap()]);
    }

    #[test]
    fn ascending_mask_order() {
        // On 3 vertices, pairs are (0,1), (0,2), (1,2): masks 3, 5, 6, 7.
        let edges: Vec<Vec<(usize, usize)>> =
            enumerate_connected_graphs(3).unwrap().map(|g| g.edges().collect()).collect();
        assert_eq!(
            edges,
            vec![vec![(0, 1), (0, 2)], vec![(0, 1), (1, 2)], vec![(0, 2), (1, 2)], vec![(0, 1), (0, 2), (1, 2)],]
        );
    }

    #[test]
    fn order_range() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(7).is_err());
        assert!(random_connected_graph(0, 0.5, 1).is_err());
        assert!(random_connected_graph(3, 1.5, 1).is_err());
        assert!(random_connected_graph(3, f64::NAN, 1).is_err());
    }

    #[test]
    fn random_degenerate_cases() {
        assert_eq!(random_connected_graph(1, 0.5, 3).unwrap().order(), 1);
        assert_eq!(random_connected_graph(5, 1.0, 3).unwrap(), make_family("complete:5").unwrap());
        let tree = random_connected_graph(9, 0.0, 11).unwrap();
        assert!(tree.is_connected());
        assert_eq!(tree.size(), 8);
    }

    #[test]
    fn random_is_deterministic() {
        for seed in 0..20 {
            let a = random_connected_graph(8, 0.3, seed).unwrap();
            let b = random_connected_graph(8, 0.3, seed).unwrap();
            assert_eq!(a, b);
            assert!(a.is_connected());
        }
    }
}
