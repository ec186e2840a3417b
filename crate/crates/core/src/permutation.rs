//! The symmetric group `S_n` and the descent-type statistics counted on it.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::{Digraph, Label};
use crate::error::invalid;
use crate::{Limits, Result};

/// A bijection of `1..=n`; position `i` (1-based) holds `σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<Label>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as Label).collect())
    }

    /// Checks that `images` is a bijection of `1..=images.len()`.
    pub fn from_images(images: Vec<Label>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(invalid!("permutation must have at least one entry"));
        }
        let mut seen = alloc::vec![false; n];
        for &v in &images {
            let i = v as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(invalid!("{images:?} is not a permutation of 1..{n}"));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(images))
    }

    /// Parses a one-line word such as `"231"` (only for `n <= 9`).
    pub fn from_word(word: &str) -> Result<Self> {
        let images = word
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| invalid!("bad permutation word {word:?}"))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn at(&self, i: Label) -> Label {
        self.0[i as usize - 1]
    }

    pub fn images(&self) -> &[Label] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as Label + 1;
        }
        Permutation(inv)
    }

    /// `σ ∘ (a b)`: the images at positions `a` and `b` swapped.
    pub fn swap_positions(&self, a: Label, b: Label) -> Self {
        let mut images = self.0.clone();
        images.swap(a as usize - 1, b as usize - 1);
        Permutation(images)
    }

    /// One-line word (`"231"`) for `n <= 9`, comma separated otherwise.
    pub fn word(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let sep = if self.n() <= 9 { "" } else { "," };
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                s.push_str(sep);
            }
            let _ = write!(s, "{v}");
        }
        s
    }

    /// Position of this permutation in lexicographic order of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller_after = self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// Advances `images` to its lexicographic successor; false at the last one.
pub(crate) fn next_permutation(images: &mut [Label]) -> bool {
    let n = images.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && images[i - 1] >= images[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while images[j] <= images[i - 1] {
        j -= 1;
    }
    images.swap(i - 1, j);
    images[i..].reverse();
    true
}

/// Calls `visit` on every permutation of `1..=n` in lexicographic order
/// without allocating per item.
pub(crate) fn for_each_images(n: usize, mut visit: impl FnMut(&[Label])) {
    let mut images: Vec<Label> = (1..=n as Label).collect();
    loop {
        visit(&images);
        if !next_permutation(&mut images) {
            break;
        }
    }
}

/// Lexicographic stream over `S_n`.
#[derive(Clone, Debug)]
pub struct LexPermutations {
    next: Option<Vec<Label>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation(current))
    }
}

/// All `n!` permutations of `1..=n`, lexicographic in their image sequences.
pub fn enumerate(n: usize, limits: &Limits) -> Result<LexPermutations> {
    if n == 0 {
        return Err(invalid!("n must be positive"));
    }
    Limits::check("permutation enumeration", n, limits.enumerate)?;
    Ok(LexPermutations {
        next: Some((1..=n as Label).collect()),
    })
}

pub fn descent_count(sigma: &Permutation) -> usize {
    sigma.0.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn excedance_count(sigma: &Permutation) -> usize {
    sigma
        .0
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize > i + 1)
        .count()
}

/// Undirected adjacency read off a digraph on `1..n`, direction forgotten.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedAdjacency {
    n: usize,
    adj: Vec<bool>,
}

impl UndirectedAdjacency {
    pub fn from_digraph(g: &Digraph) -> Result<Self> {
        if !g.has_standard_labels() {
            return Err(invalid!("adjacency graph must be labeled 1..n"));
        }
        let n = g.n();
        let mut adj = alloc::vec![false; n * n];
        for ((u, v), _) in g.edges() {
            let (u, v) = (u as usize - 1, v as usize - 1);
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(UndirectedAdjacency { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: Label, v: Label) -> bool {
        self.adj[(u as usize - 1) * self.n + v as usize - 1]
    }

    pub(crate) fn g_descents(&self, images: &[Label], cyclic: bool) -> usize {
        let is_desc = |p: Label, q: Label| p > q && self.adjacent(p, q);
        let linear = images.windows(2).filter(|w| is_desc(w[0], w[1])).count();
        let wrap = cyclic && is_desc(images[images.len() - 1], images[0]);
        linear + wrap as usize
    }
}

fn adjacency_for(sigma: &Permutation, g: &Digraph) -> Result<UndirectedAdjacency> {
    if g.n() != sigma.n() {
        return Err(invalid!(
            "permutation on {} points but graph has {} vertices",
            sigma.n(),
            g.n()
        ));
    }
    UndirectedAdjacency::from_digraph(g)
}

/// Descents `σ(i) > σ(i+1)` whose two values are adjacent in `g`.
pub fn g_descent_count(sigma: &Permutation, g: &Digraph) -> Result<usize> {
    Ok(adjacency_for(sigma, g)?.g_descents(&sigma.0, false))
}

/// As [`g_descent_count`] with the wrap-around position `n` included.
pub fn g_cyclic_descent_count(sigma: &Permutation, g: &Digraph) -> Result<usize> {
    if sigma.n() < 2 {
        return Err(invalid!("cyclic descents need n >= 2"));
    }
    Ok(adjacency_for(sigma, g)?.g_descents(&sigma.0, true))
}
