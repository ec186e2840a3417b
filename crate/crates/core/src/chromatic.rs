//! Chromatic polynomials of the undirected graph underlying a digraph.
//!
//! Deletion-contraction with a memo table keyed by canonical forms.
//! Edgeless, complete, tree and disconnected graphs are closed forms or
//! products and never reach the recursion.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::digraph::Digraph;
use crate::Polynomial;

/// Above this many candidate orderings the refined ordering itself is used
/// as the key. Keys stay sound (they encode the graph), only cache hits on
/// isomorphic copies are lost. Graphs on at most 8 vertices never exceed it.
const EXHAUSTIVE_ORDERINGS: usize = 40320;

/// Simple undirected graph as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Simple {
    adj: Vec<u64>,
}

impl Simple {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn induced(&self, vertices: &[usize]) -> Simple {
        let mut index = alloc::vec![usize::MAX; self.n()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                bits(self.adj[v])
                    .filter(|&w| index[w] != usize::MAX)
                    .fold(0u64, |acc, w| acc | 1 << index[w])
            })
            .collect();
        Simple { adj }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let next = bits(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    fn without_edge(&self, u: usize, v: usize) -> Simple {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Simple { adj }
    }

    /// Merges `v` into `u` and deletes `v`.
    fn contract(&self, u: usize, v: usize) -> Simple {
        let merged = (self.adj[u] | self.adj[v]) & !(1 << u) & !(1 << v);
        let drop_bit = |mask: u64| (mask & ((1u64 << v) - 1)) | ((mask >> (v + 1)) << v);
        let adj = (0..self.n())
            .filter(|&w| w != v)
            .map(|w| {
                let row = if w == u {
                    merged
                } else if merged >> w & 1 == 1 {
                    (self.adj[w] & !(1 << v)) | 1 << u
                } else {
                    self.adj[w] & !(1 << v)
                };
                drop_bit(row)
            })
            .collect();
        Simple { adj }
    }

    /// Color refinement starting from degrees; returns a color per vertex.
    fn refined_colors(&self) -> Vec<usize> {
        let n = self.n();
        let mut colors: Vec<usize> = (0..n).map(|v| self.degree(v) as usize).collect();
        let mut classes = 0;
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = bits(self.adj[v]).map(|w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            colors = sigs
                .iter()
                .map(|s| distinct.binary_search(s).unwrap())
                .collect();
            if distinct.len() == classes {
                return colors;
            }
            classes = distinct.len();
        }
    }

    fn relabeled_rows(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = alloc::vec![0usize; order.len()];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        order
            .iter()
            .map(|&v| bits(self.adj[v]).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect()
    }

    /// Lexicographically least adjacency rows over all orderings that list
    /// refinement cells in color order.
    fn canonical_key(&self) -> Vec<u64> {
        let colors = self.refined_colors();
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        let cells: Vec<Vec<usize>> = cells.into_values().collect();
        let orderings = cells.iter().try_fold(1usize, |acc, c| {
            (1..=c.len()).try_fold(acc, |a, k| a.checked_mul(k))
        });
        let base: Vec<usize> = cells.iter().flatten().copied().collect();
        match orderings {
            Some(count) if count <= EXHAUSTIVE_ORDERINGS => {
                let mut best: Option<Vec<u64>> = None;
                let mut cells = cells;
                permute_cells(&mut cells, 0, &mut |order| {
                    let rows = self.relabeled_rows(order);
                    if best.as_ref().is_none_or(|b| rows < *b) {
                        best = Some(rows);
                    }
                });
                best.expect("at least one ordering")
            }
            _ => self.relabeled_rows(&base),
        }
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

/// Visits every ordering formed by permuting vertices inside each cell.
fn permute_cells(cells: &mut [Vec<usize>], depth: usize, visit: &mut dyn FnMut(&[usize])) {
    if depth == cells.len() {
        let order: Vec<usize> = cells.iter().flatten().copied().collect();
        visit(&order);
        return;
    }
    cells[depth].sort_unstable();
    loop {
        permute_cells(cells, depth + 1, visit);
        if !next_perm(&mut cells[depth]) {
            break;
        }
    }
}

fn next_perm(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn power_of_k(n: usize) -> Polynomial {
    Polynomial::monomial(BigInt::from(1), n)
}

fn linear(c: i64) -> Polynomial {
    // k - c
    Polynomial::from_i64s(&[-c, 1])
}

fn falling_factorial(n: usize) -> Polynomial {
    (0..n as i64).fold(Polynomial::one(), |acc, i| &acc * &linear(i))
}

fn tree(n: usize) -> Polynomial {
    (1..n).fold(power_of_k(1), |acc, _| &acc * &linear(1))
}

/// Memo table for chromatic polynomials, keyed by canonical forms of
/// connected graphs. Reuse one across many calls to share work.
#[derive(Clone, Debug, Default)]
pub struct ChromaticCache {
    memo: BTreeMap<Vec<u64>, Polynomial>,
}

impl ChromaticCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Chromatic polynomial (in `k`) of the underlying simple undirected
    /// graph of `g`. Parallel and antiparallel edges merge; a self-loop
    /// makes the polynomial zero.
    ///
    /// # Panics
    /// If `g` has more than 64 vertices.
    pub fn chromatic(&mut self, g: &Digraph) -> Polynomial {
        assert!(
            g.n() <= 64,
            "chromatic polynomials are limited to 64 vertices"
        );
        if g.has_self_loop() {
            return Polynomial::zero();
        }
        let labels = g.labels();
        let idx = |l| labels.binary_search(&l).unwrap();
        let mut adj = alloc::vec![0u64; g.n()];
        for ((u, v), _) in g.edges() {
            let (iu, iv) = (idx(u), idx(v));
            adj[iu] |= 1 << iv;
            adj[iv] |= 1 << iu;
        }
        self.solve(&Simple { adj })
    }

    fn solve(&mut self, g: &Simple) -> Polynomial {
        let n = g.n();
        let m = g.edge_count();
        if m == 0 {
            return power_of_k(n);
        }
        let comps = g.components();
        if comps.len() > 1 {
            return comps.iter().fold(Polynomial::one(), |acc, c| {
                &acc * &self.solve(&g.induced(c))
            });
        }
        if m == n * (n - 1) / 2 {
            return falling_factorial(n);
        }
        if m == n - 1 {
            return tree(n);
        }
        let key = g.canonical_key();
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let u = (0..n)
            .max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v)))
            .unwrap();
        let v = bits(g.adj[u])
            .max_by_key(|&w| (g.degree(w), core::cmp::Reverse(w)))
            .unwrap();
        let result = &self.solve(&g.without_edge(u, v)) - &self.solve(&g.contract(u, v));
        self.memo.insert(key, result.clone());
        result
    }
}

/// Chromatic polynomial with a fresh memo table.
pub fn chromatic_poly(g: &Digraph) -> Polynomial {
    ChromaticCache::new().chromatic(g)
}
