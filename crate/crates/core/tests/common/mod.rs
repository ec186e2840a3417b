#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use seatgraph_core::{Digraph, Label};

pub fn perms(n: usize) -> Vec<Vec<Label>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as Label);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Outdegree read straight off the definition.
pub fn naive_outdegree(x: &Digraph, y: &Digraph, sigma: &[Label]) -> u64 {
    let n = x.n() as Label;
    let mut d = 0u64;
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                let s = |i: Label| sigma[i as usize - 1];
                d += x.multiplicity(a, b) as u64 * y.multiplicity(s(a), s(b)) as u64;
            }
        }
    }
    d
}

pub fn naive_odp(x: &Digraph, y: &Digraph) -> Vec<i64> {
    let mut counts = Vec::new();
    for p in perms(x.n()) {
        let d = naive_outdegree(x, y, &p) as usize;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    counts
}

/// Proper colorings of the underlying undirected graph with `k` colors.
pub fn count_colorings(g: &Digraph, k: u32) -> i64 {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|((u, v), _)| (u as usize - 1, v as usize - 1))
        .collect();
    if edges.iter().any(|&(u, v)| u == v) {
        return 0;
    }
    let mut col = vec![0u32; n];
    fn go(i: usize, col: &mut Vec<u32>, k: u32, edges: &[(usize, usize)]) -> i64 {
        if i == col.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            col[i] = c;
            if edges.iter().all(|&(u, v)| {
                !((u == i && v < i && col[v] == c) || (v == i && u < i && col[u] == c))
            }) {
                total += go(i + 1, col, k, edges);
            }
        }
        total
    }
    go(0, &mut col, k, &edges)
}

/// Colorings where `a` and `b` share a color.
pub fn count_colorings_merged(g: &Digraph, k: u32, a: Label, b: Label) -> i64 {
    let n = g.n();
    let mut total = 0;
    let mut col = vec![0u32; n];
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|((u, v), _)| (u as usize - 1, v as usize - 1))
        .collect();
    let mut idx = 0u64;
    let count = (k as u64).pow(n as u32);
    while idx < count {
        let mut r = idx;
        for c in col.iter_mut() {
            *c = (r % k as u64) as u32;
            r /= k as u64;
        }
        if col[a as usize - 1] == col[b as usize - 1]
            && edges.iter().all(|&(u, v)| col[u] != col[v])
        {
            total += 1;
        }
        idx += 1;
    }
    total
}

/// Simple digraph without loops; each ordered pair kept with probability `p`.
pub fn random_simple(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let n32 = n as Label;
    let edges: Vec<(Label, Label)> = (1..=n32)
        .flat_map(|u| (1..=n32).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::from_edges(n, edges).unwrap()
}

pub fn random_labeled_acyclic(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let n32 = n as Label;
    let edges: Vec<(Label, Label)> = (1..=n32)
        .flat_map(|u| (1..u).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::from_edges(n, edges).unwrap()
}

fn build(n: usize, mults: &[u8]) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                for _ in 0..mults[u * n + v] {
                    edges.push((u as Label + 1, v as Label + 1));
                }
            }
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

/// Loop-free multidigraph, multiplicities up to `max_mult`.
pub fn arb_digraph(n: usize, max_mult: u8) -> impl Strategy<Value = Digraph> {
    proptest::collection::vec(0..=max_mult, n * n).prop_map(move |m| build(n, &m))
}

pub fn arb_pair(max_n: usize, max_mult: u8) -> impl Strategy<Value = (Digraph, Digraph)> {
    (1..=max_n).prop_flat_map(move |n| (arb_digraph(n, max_mult), arb_digraph(n, max_mult)))
}

pub fn arb_labeled_acyclic(n: usize) -> impl Strategy<Value = Digraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |keep| {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 1..=n as Label {
            for v in 1..u {
                if keep[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Digraph::from_edges(n, edges).unwrap()
    })
}
