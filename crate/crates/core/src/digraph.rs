//! Labeled directed multigraphs and the constructions performed on them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{domain, invalid};
use crate::Result;

/// Vertex label. Graphs built by the named constructors use `1..=n`.
pub type Label = u32;

/// Directed multigraph on a finite set of positive integer labels.
///
/// Edges are kept as a map from ordered pair to multiplicity, iterated in
/// lexicographic pair order. Two graphs are equal when their label sets and
/// all multiplicities agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    labels: Vec<Label>,
    edges: BTreeMap<(Label, Label), u32>,
}

/// Uniformity conditions a vertex subset can satisfy with respect to the
/// vertices outside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquivalenceKind {
    /// Every outside vertex is reached by all members of the set or by none.
    Sink,
    /// Every outside vertex reaches all members of the set or none.
    Source,
    /// For every outside vertex `t`: all members point to `t`, `t` points to
    /// all members, or no edge joins `t` to the set.
    SelfEquivalent,
}

impl Digraph {
    /// Edgeless graph on `1..=n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid!("graph needs at least one vertex"));
        }
        Ok(Digraph {
            labels: (1..=n as Label).collect(),
            edges: BTreeMap::new(),
        })
    }

    /// Graph on `1..=n` with the given edges; repeated pairs add multiplicity.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let mut g = Digraph::empty(n)?;
        for (u, v) in edges {
            g.insert(u, v)?;
        }
        Ok(g)
    }

    /// Graph on an arbitrary label set.
    pub fn with_labels<L, I>(labels: L, edges: I) -> Result<Self>
    where
        L: IntoIterator<Item = Label>,
        I: IntoIterator<Item = (Label, Label)>,
    {
        let set: BTreeSet<Label> = labels.into_iter().collect();
        if set.is_empty() {
            return Err(invalid!("graph needs at least one vertex"));
        }
        if set.contains(&0) {
            return Err(invalid!("vertex labels must be positive"));
        }
        let mut g = Digraph {
            labels: set.into_iter().collect(),
            edges: BTreeMap::new(),
        };
        for (u, v) in edges {
            g.insert(u, v)?;
        }
        Ok(g)
    }

    fn insert(&mut self, u: Label, v: Label) -> Result<()> {
        if !self.contains_label(u) || !self.contains_label(v) {
            return Err(invalid!(
                "edge {u}->{v} has an endpoint outside the vertex set"
            ));
        }
        *self.edges.entry((u, v)).or_insert(0) += 1;
        Ok(())
    }

    /// Transitive tournament `Tour_n`: every `i -> j` with `i > j`.
    pub fn tour(n: usize) -> Result<Self> {
        let n32 = n as Label;
        Digraph::from_edges(n, (1..=n32).flat_map(|i| (1..i).map(move |j| (i, j))))
    }

    /// Directed path `Path_n`: `i -> i+1`.
    pub fn path(n: usize) -> Result<Self> {
        let n32 = n as Label;
        Digraph::from_edges(n, (1..n32).map(|i| (i, i + 1)))
    }

    /// Directed cycle `Cycle_n`: `i -> i+1` plus `n -> 1`. `Cycle_2` is the
    /// multigraph `{1 -> 2, 2 -> 1}`; `Cycle_1` is not defined.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid!("cycle needs at least two vertices, got {n}"));
        }
        let n32 = n as Label;
        Digraph::from_edges(n, (1..n32).map(|i| (i, i + 1)).chain([(n32, 1)]))
    }

    /// Every labeled acyclic simple graph on `1..=n`, indexed by the bitmask
    /// of `Tour_n` edges it keeps (bit `k` is the `k`-th tournament edge in
    /// lexicographic order).
    pub fn labeled_acyclic_family(n: usize) -> Result<impl Iterator<Item = (u64, Digraph)>> {
        let tour = Digraph::tour(n)?;
        let pairs: Vec<(Label, Label)> = tour.edges.keys().copied().collect();
        if pairs.len() >= 64 {
            return Err(invalid!("family on {n} vertices is too large to index"));
        }
        let count = 1u64 << pairs.len();
        Ok((0..count).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            (
                mask,
                Digraph::from_edges(n, edges).expect("tournament edges are in range"),
            )
        }))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Sorted vertex labels.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// True when the label set is exactly `1..=n`.
    pub fn has_standard_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| l as usize == i + 1)
    }

    pub fn contains_label(&self, l: Label) -> bool {
        self.labels.binary_search(&l).is_ok()
    }

    pub fn multiplicity(&self, u: Label, v: Label) -> u32 {
        self.edges.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Label, v: Label) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Distinct ordered pairs with their multiplicities, lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = ((Label, Label), u32)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }

    /// Edges with parallel copies repeated, lexicographic order.
    pub fn edge_list(&self) -> Vec<(Label, Label)> {
        self.edges
            .iter()
            .flat_map(|(&e, &m)| core::iter::repeat_n(e, m as usize))
            .collect()
    }

    /// Total number of edges counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    /// No ordered pair appears twice. Antiparallel pairs are allowed.
    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|&m| m == 1)
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges.keys().any(|&(u, v)| u == v)
    }

    /// Copy with one more `u -> v`.
    pub fn with_edge(&self, u: Label, v: Label) -> Result<Self> {
        let mut g = self.clone();
        g.insert(u, v)?;
        Ok(g)
    }

    /// Copy with one copy of `u -> v` removed.
    pub fn without_edge(&self, u: Label, v: Label) -> Result<Self> {
        let mut g = self.clone();
        match g.edges.get_mut(&(u, v)) {
            None => return Err(invalid!("graph has no edge {u}->{v}")),
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                g.edges.remove(&(u, v));
            }
        }
        Ok(g)
    }

    /// Every edge points from a larger label to a smaller one.
    pub fn is_labeled_acyclic(&self) -> bool {
        self.edges.keys().all(|&(u, v)| u > v)
    }

    /// No directed cycle; a self-loop counts as a cycle.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut indeg = alloc::vec![0usize; n];
        let mut out: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for &(u, v) in self.edges.keys() {
            let (iu, iv) = (self.index_of(u), self.index_of(v));
            out[iu].push(iv);
            indeg[iv] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for &j in &out[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
        seen == n
    }

    fn index_of(&self, l: Label) -> usize {
        self.labels
            .binary_search(&l)
            .expect("label belongs to graph")
    }

    fn require_standard(&self, op: &str) -> Result<()> {
        if self.has_standard_labels() {
            Ok(())
        } else {
            Err(invalid!("{op} needs a graph labeled 1..n"))
        }
    }

    /// Complement relative to `Tour_n`. The input must be labeled acyclic
    /// and simple.
    pub fn complement(&self) -> Result<Self> {
        self.require_standard("complement")?;
        if !self.is_labeled_acyclic() {
            return Err(domain!(
                "complement is only defined for labeled acyclic graphs"
            ));
        }
        if !self.is_simple() {
            return Err(domain!("complement is only defined for simple graphs"));
        }
        let tour = Digraph::tour(self.n())?;
        let edges = tour
            .edges
            .keys()
            .filter(|e| !self.edges.contains_key(e))
            .copied();
        Digraph::from_edges(self.n(), edges)
    }

    /// Induced subgraph on the labels not in `removed`. With `relabel` the
    /// survivors are renumbered `1..` in increasing order.
    pub fn delete_vertices(&self, removed: &BTreeSet<Label>, relabel: bool) -> Result<Self> {
        if let Some(bad) = removed.iter().find(|&&l| !self.contains_label(l)) {
            return Err(invalid!("label {bad} is not a vertex"));
        }
        if removed.len() == self.n() {
            return Err(invalid!("cannot delete every vertex"));
        }
        let keep: Vec<Label> = self
            .labels
            .iter()
            .copied()
            .filter(|l| !removed.contains(l))
            .collect();
        let edges = self
            .edge_list()
            .into_iter()
            .filter(|(u, v)| !removed.contains(u) && !removed.contains(v));
        let g = Digraph::with_labels(keep, edges)?;
        Ok(if relabel { g.compress_labels() } else { g })
    }

    /// Renumbers vertices `1..=n` preserving their order.
    pub fn compress_labels(&self) -> Self {
        let rank = |l: Label| self.index_of(l) as Label + 1;
        let mut edges = BTreeMap::new();
        for (&(u, v), &m) in &self.edges {
            edges.insert((rank(u), rank(v)), m);
        }
        Digraph {
            labels: (1..=self.n() as Label).collect(),
            edges,
        }
    }

    /// Applies a relabeling of a `1..n` graph: vertex `v` becomes
    /// `relabel(v)`.
    pub fn relabel(&self, relabel: &crate::Permutation) -> Result<Self> {
        self.require_standard("relabel")?;
        if relabel.n() != self.n() {
            return Err(invalid!(
                "relabeling has size {} but graph has {} vertices",
                relabel.n(),
                self.n()
            ));
        }
        let mut edges = BTreeMap::new();
        for (&(u, v), &m) in &self.edges {
            edges.insert((relabel.at(u), relabel.at(v)), m);
        }
        Ok(Digraph {
            labels: self.labels.clone(),
            edges,
        })
    }

    /// Contraction `X^{uv}` along an edge `u -> v`: vertex `v` is removed,
    /// edges `i -> v` become `i -> u` and `v -> j` become `u -> j`.
    /// Edges between `u` and `v` (either direction) are dropped.
    pub fn contract(&self, u: Label, v: Label) -> Result<Self> {
        if u == v {
            return Err(invalid!("cannot contract a vertex into itself"));
        }
        if !self.has_edge(u, v) {
            return Err(invalid!("graph has no edge {u}->{v} to contract"));
        }
        let keep = self.labels.iter().copied().filter(|&l| l != v);
        let mut g = Digraph::with_labels(keep, [])?;
        for (&(p, q), &m) in &self.edges {
            if (p == u && q == v) || (p == v && q == u) {
                continue;
            }
            let p = if p == v { u } else { p };
            let q = if q == v { u } else { q };
            *g.edges.entry((p, q)).or_insert(0) += m;
        }
        Ok(g)
    }

    /// Checks the set-equivalence conditions of `set`. Only presence of
    /// edges matters, not multiplicity.
    pub fn equivalence_check(&self, set: &BTreeSet<Label>, kind: EquivalenceKind) -> Result<bool> {
        if set.is_empty() {
            return Err(invalid!("equivalence check needs a nonempty set"));
        }
        if let Some(bad) = set.iter().find(|&&l| !self.contains_label(l)) {
            return Err(invalid!("label {bad} is not a vertex"));
        }
        let uniform = |f: &dyn Fn(Label) -> bool| -> (bool, bool) {
            let hits = set.iter().filter(|&&s| f(s)).count();
            (hits == set.len(), hits == 0)
        };
        for &t in self.labels.iter().filter(|t| !set.contains(t)) {
            let (all_to, none_to) = uniform(&|s| self.has_edge(s, t));
            let (all_from, none_from) = uniform(&|s| self.has_edge(t, s));
            let ok = match kind {
                EquivalenceKind::Sink => all_to || none_to,
                EquivalenceKind::Source => all_from || none_from,
                // sink and source together; on graphs without antiparallel
                // edges this is the three-case condition
                EquivalenceKind::SelfEquivalent => (all_to || none_to) && (all_from || none_from),
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Convenience wrapper for two-element sets.
    pub fn pair_is(&self, a: Label, b: Label, kind: EquivalenceKind) -> Result<bool> {
        self.equivalence_check(&[a, b].into_iter().collect(), kind)
    }
}
