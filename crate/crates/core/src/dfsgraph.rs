//! The directed friends-and-seats graph `DFS(X, Y)`.
//!
//! Vertices are the permutations `σ` of `1..n`. There is an edge
//! `σ -> σ ∘ (a b)` for every ordered pair `a != b` with `a -> b` in `X` and
//! `σ(a) -> σ(b)` in `Y`; its multiplicity is the product of the two edge
//! multiplicities. The outdegree polynomial and its slices stream over `S_n`
//! and never build the graph.

use alloc::vec::Vec;

use crate::digraph::{Digraph, Label};
use crate::error::invalid;
use crate::permutation::{enumerate, for_each_images, Permutation};
use crate::{Limits, Polynomial, Result};

/// One out-edge of `source` in `DFS(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfsEdgeWitness {
    pub source: Permutation,
    pub a: Label,
    pub b: Label,
    pub target: Permutation,
    pub multiplicity: u32,
}

/// `X` edge list plus a dense multiplicity table for `Y`.
struct SeatPair {
    n: usize,
    x_edges: Vec<(usize, usize, u64)>,
    y_mult: Vec<u64>,
}

impl SeatPair {
    fn new(x: &Digraph, y: &Digraph) -> Result<Self> {
        if x.n() != y.n() {
            return Err(invalid!("X has {} vertices but Y has {}", x.n(), y.n()));
        }
        if !x.has_standard_labels() || !y.has_standard_labels() {
            return Err(invalid!("DFS graphs need X and Y labeled 1..n"));
        }
        let n = x.n();
        let x_edges = x
            .edges()
            .filter(|&((a, b), _)| a != b)
            .map(|((a, b), m)| (a as usize - 1, b as usize - 1, m as u64))
            .collect();
        let mut y_mult = alloc::vec![0u64; n * n];
        for ((u, v), m) in y.edges() {
            if u != v {
                y_mult[(u as usize - 1) * n + v as usize - 1] = m as u64;
            }
        }
        Ok(SeatPair { n, x_edges, y_mult })
    }

    #[inline]
    fn y(&self, images: &[Label], a: usize, b: usize) -> u64 {
        self.y_mult[(images[a] as usize - 1) * self.n + images[b] as usize - 1]
    }

    #[inline]
    fn outdegree(&self, images: &[Label]) -> u64 {
        self.x_edges
            .iter()
            .map(|&(a, b, m)| m * self.y(images, a, b))
            .sum()
    }

    fn check_perm(&self, sigma: &Permutation) -> Result<()> {
        if sigma.n() != self.n {
            return Err(invalid!(
                "permutation on {} points, graphs have {} vertices",
                sigma.n(),
                self.n
            ));
        }
        Ok(())
    }

    fn check_label(&self, l: Label) -> Result<usize> {
        if l == 0 || l as usize > self.n {
            return Err(invalid!("label {l} outside 1..{}", self.n));
        }
        Ok(l as usize - 1)
    }

    /// `Σ_σ weight(σ) · x^{outdeg(σ)}` over `S_n`.
    fn weighted_sum(&self, weight: impl Fn(&[Label]) -> u64) -> Polynomial {
        let mut counts: Vec<u64> = Vec::new();
        for_each_images(self.n, |images| {
            let w = weight(images);
            if w == 0 {
                return;
            }
            let d = self.outdegree(images) as usize;
            if d >= counts.len() {
                counts.resize(d + 1, 0);
            }
            counts[d] += w;
        });
        Polynomial::from_counts(&counts)
    }
}

/// Out-edges of `sigma`, ordered by `(a, b)`.
pub fn out_neighbors(x: &Digraph, y: &Digraph, sigma: &Permutation) -> Result<Vec<DfsEdgeWitness>> {
    let pair = SeatPair::new(x, y)?;
    pair.check_perm(sigma)?;
    Ok(witnesses(&pair, sigma))
}

fn witnesses(pair: &SeatPair, sigma: &Permutation) -> Vec<DfsEdgeWitness> {
    pair.x_edges
        .iter()
        .filter_map(|&(a, b, mx)| {
            let my = pair.y(sigma.images(), a, b);
            (my > 0).then(|| {
                let (a, b) = (a as Label + 1, b as Label + 1);
                DfsEdgeWitness {
                    source: sigma.clone(),
                    a,
                    b,
                    target: sigma.swap_positions(a, b),
                    multiplicity: (mx * my) as u32,
                }
            })
        })
        .collect()
}

/// Outdegree of `sigma`, counting multiplicity.
pub fn outdegree(x: &Digraph, y: &Digraph, sigma: &Permutation) -> Result<u64> {
    let pair = SeatPair::new(x, y)?;
    pair.check_perm(sigma)?;
    Ok(pair.outdegree(sigma.images()))
}

/// `ODP(X, Y) = Σ_σ x^{outdeg(σ)}`.
pub fn odp(x: &Digraph, y: &Digraph, limits: &Limits) -> Result<Polynomial> {
    let pair = SeatPair::new(x, y)?;
    Limits::check("outdegree polynomial", pair.n, limits.odp)?;
    Ok(pair.weighted_sum(|_| 1))
}

/// `ODP(X, Y)_{a->b}`: vertices weighted by the multiplicity of
/// `σ(a) -> σ(b)` in `Y`.
pub fn odp_edge_slice(
    x: &Digraph,
    y: &Digraph,
    a: Label,
    b: Label,
    limits: &Limits,
) -> Result<Polynomial> {
    let pair = SeatPair::new(x, y)?;
    let (ia, ib) = (pair.check_label(a)?, pair.check_label(b)?);
    if ia == ib {
        return Err(invalid!("edge slice needs a != b"));
    }
    Limits::check("outdegree polynomial slice", pair.n, limits.odp)?;
    Ok(pair.weighted_sum(|images| pair.y(images, ia, ib)))
}

/// `ODP(X, Y)_{σ(i)=j}`.
pub fn odp_assign_slice(
    x: &Digraph,
    y: &Digraph,
    i: Label,
    j: Label,
    limits: &Limits,
) -> Result<Polynomial> {
    let pair = SeatPair::new(x, y)?;
    let ii = pair.check_label(i)?;
    pair.check_label(j)?;
    Limits::check("outdegree polynomial slice", pair.n, limits.odp)?;
    Ok(pair.weighted_sum(|images| (images[ii] == j) as u64))
}

/// `DFS(X, Y)` with every vertex and witness listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaterializedDfs {
    n: usize,
    vertices: Vec<Permutation>,
    adjacency: Vec<Vec<DfsEdgeWitness>>,
}

/// Builds the whole graph; vertices in lexicographic order.
pub fn materialize(x: &Digraph, y: &Digraph, limits: &Limits) -> Result<MaterializedDfs> {
    let pair = SeatPair::new(x, y)?;
    Limits::check("DFS materialization", pair.n, limits.materialize)?;
    let vertices: Vec<Permutation> = enumerate(pair.n, &Limits::UNBOUNDED)?.collect();
    let adjacency = vertices.iter().map(|s| witnesses(&pair, s)).collect();
    Ok(MaterializedDfs {
        n: pair.n,
        vertices,
        adjacency,
    })
}

impl MaterializedDfs {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    /// Index of a vertex, which is its lexicographic rank.
    pub fn index_of(&self, sigma: &Permutation) -> Option<usize> {
        (sigma.n() == self.n).then(|| sigma.lex_rank())
    }

    pub fn out_edges(&self, idx: usize) -> &[DfsEdgeWitness] {
        &self.adjacency[idx]
    }

    /// All witnesses, grouped by source vertex in vertex order.
    pub fn witnesses(&self) -> impl Iterator<Item = &DfsEdgeWitness> {
        self.adjacency.iter().flatten()
    }

    pub fn outdegree(&self, idx: usize) -> u64 {
        self.adjacency[idx]
            .iter()
            .map(|w| w.multiplicity as u64)
            .sum()
    }

    pub fn indegrees(&self) -> Vec<u64> {
        let mut indeg = alloc::vec![0u64; self.vertices.len()];
        for w in self.witnesses() {
            indeg[w.target.lex_rank()] += w.multiplicity as u64;
        }
        indeg
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.witnesses().map(|w| w.multiplicity as u64).sum()
    }

    /// Summed multiplicity of all witnesses `from -> to`.
    pub fn edge_multiplicity(&self, from: &Permutation, to: &Permutation) -> u64 {
        self.index_of(from)
            .map(|i| {
                self.adjacency[i]
                    .iter()
                    .filter(|w| &w.target == to)
                    .map(|w| w.multiplicity as u64)
                    .sum()
            })
            .unwrap_or(0)
    }

    pub fn has_edge(&self, from: &Permutation, to: &Permutation) -> bool {
        self.edge_multiplicity(from, to) > 0
    }

    /// True when the closed walk `path[0] -> path[1] -> ... -> path[0]` uses
    /// only edges of the graph.
    pub fn contains_cycle_through(&self, path: &[Permutation]) -> bool {
        !path.is_empty()
            && path
                .iter()
                .zip(path.iter().cycle().skip(1))
                .all(|(s, t)| self.has_edge(s, t))
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = alloc::vec![0; self.vertices.len()];
        for w in self.witnesses() {
            indeg[w.target.lex_rank()] += 1;
        }
        let mut stack: Vec<usize> = (0..indeg.len()).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for w in &self.adjacency[i] {
                let j = w.target.lex_rank();
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
        seen == self.vertices.len()
    }
}
