//! Fixed-cardinality subset enumeration in ascending bitmask order.

use crate::graph::VertexSet;

/// Orders at or above this search each cardinality across worker threads
/// when the `parallel` feature is on.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: usize = 12;

/// All `k`-subsets of `0..n`, ascending by bitmask (Gosper's hack).
#[derive(Debug, Clone)]
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n < 64, "k_subsets supports n < 64");
    let limit = 1u64 << n;
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    KSubsets { next, limit }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let x = self.next?;
        self.next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < self.limit).then_some(y)
        };
        Some(VertexSet::from_bits(x))
    }
}

/// First `k`-subset of `0..n` (in ascending bitmask order) for which `probe`
/// returns `Some`.
///
/// In parallel mode the subsets are partitioned by their largest member; every
/// set in one part is below every set in the next, so taking the first part
/// with a hit returns the same answer as the serial scan.
pub fn find_first_k_subset<T, F>(n: usize, k: usize, probe: F) -> Option<T>
where
    T: Send,
    F: Fn(VertexSet) -> Option<T> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if n >= PARALLEL_THRESHOLD && k >= 1 && k <= n {
            use rayon::prelude::*;
            return (k - 1..n)
                .into_par_iter()
                .find_map_first(|top| k_subsets(top, k - 1).find_map(|s| probe(s.with(top))));
        }
    }
    k_subsets(n, k).find_map(probe)
}

#[cfg(test)]
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                assert_eq!(k_subsets(n, k).count() as u128, binomial(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn ascending_and_exact_cardinality() {
        let all: Vec<u64> = k_subsets(7, 3).map(|s| s.bits()).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|b| b.count_ones() == 3));
        let brute: Vec<u64> = (0..128u64).filter(|b| b.count_ones() == 3).collect();
        assert_eq!(all, brute);
    }

    #[test]
    fn empty_subset() {
        assert_eq!(k_subsets(4, 0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn find_first_is_least() {
        // Least 4-subset of 0..16 whose bitmask is divisible by 7.
        let expected = (0..1u64 << 16).filter(|b| b.count_ones() == 4 && b % 7 == 0).min();
        let got = find_first_k_subset(16, 4, |s| (s.bits() % 7 == 0).then_some(s.bits()));
        assert_eq!(got, expected);
        assert_eq!(find_first_k_subset(16, 4, |_| None::<()>), None);
    }
}
