//! Brute-force transcriptions of the definitions over an adjacency matrix and
//! boolean membership vectors. Shares nothing with the bitset code paths
//! besides reading the edge list.

#![allow(dead_code)]

use movdom::Graph;

pub struct Naive {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Naive { n, adj }
    }

    pub fn members(mask: u64, n: usize) -> Vec<bool> {
        (0..n).map(|v| mask >> v & 1 == 1).collect()
    }

    /// Every vertex outside S has a neighbor in S.
    pub fn dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|v| s[v] || (0..self.n).any(|u| s[u] && self.adj[u][v]))
    }

    fn without(s: &[bool], drop: &[usize]) -> Vec<bool> {
        let mut t = s.to_vec();
        for &d in drop {
            t[d] = false;
        }
        t
    }

    fn with(s: &[bool], add: &[usize]) -> Vec<bool> {
        let mut t = s.to_vec();
        for &a in add {
            t[a] = true;
        }
        t
    }

    /// S dominating, nonempty, and each v in S can be dropped or moved to an
    /// outside neighbor u.
    pub fn one_movable(&self, s: &[bool]) -> bool {
        let n = self.n;
        s.iter().any(|&b| b)
            && self.dominating(s)
            && (0..n).filter(|&v| s[v]).all(|v| {
                let rest = Self::without(s, &[v]);
                self.dominating(&rest)
                    || (0..n).any(|u| !s[u] && self.adj[v][u] && self.dominating(&Self::with(&rest, &[u])))
            })
    }

    /// S dominating, at least two members, and every pair x != y in S can be
    /// dropped, or replaced by outside u ~ x and v ~ y.
    pub fn two_movable(&self, s: &[bool], distinct: bool) -> bool {
        let n = self.n;
        if s.iter().filter(|&&b| b).count() < 2 || !self.dominating(s) {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                if !(s[x] && s[y] && x < y) {
                    continue;
                }
                let rest = Self::without(s, &[x, y]);
                if self.dominating(&rest) {
                    continue;
                }
                let mut found = false;
                for u in 0..n {
                    for v in 0..n {
                        if !s[u]
                            && !s[v]
                            && self.adj[x][u]
                            && self.adj[y][v]
                            && (!distinct || u != v)
                            && self.dominating(&Self::with(&rest, &[u, v]))
                        {
                            found = true;
                        }
                    }
                }
                if !found {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest |S| over all 2^n subsets satisfying `pred`.
    pub fn minimum(&self, pred: impl Fn(&[bool]) -> bool) -> Option<usize> {
        (0..1u64 << self.n).filter(|&m| pred(&Self::members(m, self.n))).map(|m| m.count_ones() as usize).min()
    }

    pub fn gamma(&self) -> Option<usize> {
        self.minimum(|s| self.dominating(s))
    }

    pub fn gamma_m1(&self) -> Option<usize> {
        self.minimum(|s| self.one_movable(s))
    }

    pub fn gamma_m2(&self, distinct: bool) -> Option<usize> {
        self.minimum(|s| self.two_movable(s, distinct))
    }
}

/// Connected labeled graphs on `n` vertices, by brute force over all edge
/// masks with a fresh DFS.
pub fn brute_connected_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len())
        .filter(|&mask| {
            let mut adj = vec![vec![]; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            seen.iter().all(|&b| b)
        })
        .count()
}
