//! Perfect elimination orderings and the sink-equivalent edge sequence from
//! `Tour_n` down to a graph whose complement is a perfect elimination
//! ordering.

use alloc::vec::Vec;

use crate::digraph::{Digraph, EquivalenceKind, Label};
use crate::error::{domain, invalid};
use crate::permutation::{for_each_images, Permutation};
use crate::{Limits, Result};

/// True when `1..n` is a perfect elimination ordering of `x`: every edge
/// `j -> i` forces `b -> a` for all `j >= b > a >= i`.
pub fn is_peo(x: &Digraph) -> Result<bool> {
    if !x.has_standard_labels() {
        return Err(invalid!("perfect elimination check needs labels 1..n"));
    }
    if !x.is_labeled_acyclic() {
        return Err(domain!(
            "perfect elimination orderings are defined for labeled acyclic graphs"
        ));
    }
    Ok(peo_holds(x))
}

fn peo_holds(x: &Digraph) -> bool {
    x.edges()
        .all(|((j, i), _)| (i..=j).all(|b| (i..b).all(|a| x.has_edge(b, a))))
}

/// First relabeling (lexicographic) that makes `x` labeled acyclic with
/// `1..n` a perfect elimination ordering. The returned permutation sends
/// old label `v` to new label `π(v)`.
pub fn find_chordal_labeling(x: &Digraph, limits: &Limits) -> Result<Option<Permutation>> {
    if !x.has_standard_labels() {
        return Err(invalid!("chordal labeling search needs labels 1..n"));
    }
    if !x.is_acyclic() {
        return Err(domain!("chordal labelings exist only for acyclic graphs"));
    }
    Limits::check("chordal labeling search", x.n(), limits.chordal_search)?;
    let edges: Vec<(Label, Label)> = x.edges().map(|(e, _)| e).collect();
    let mut found = None;
    for_each_images(x.n(), |images| {
        if found.is_some() {
            return;
        }
        let at = |l: Label| images[l as usize - 1];
        if edges.iter().any(|&(u, v)| at(u) < at(v)) {
            return;
        }
        let relabeled = Digraph::from_edges(x.n(), edges.iter().map(|&(u, v)| (at(u), at(v))))
            .expect("relabeling keeps labels in range");
        if peo_holds(&relabeled) {
            found = Some(Permutation::from_images(images.to_vec()).expect("valid images"));
        }
    });
    Ok(found)
}

/// One graph of a [`ChordalSequence`] with the certificates checked on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalStep {
    pub graph: Digraph,
    /// Edge `b -> a` (`b > a`) present here and absent from the next graph;
    /// `None` on the last step.
    pub removed: Option<(Label, Label)>,
    /// `{a, b}` is sink-equivalent in this graph (vacuously true on the
    /// last step). The same answer holds in the next graph since the two
    /// differ only by the edge inside the pair.
    pub sink_equivalent: bool,
    pub complement_peo: bool,
}

/// `Tour_n = X_0, X_1, ..., X_k = X`, each step removing one edge whose
/// endpoints form a sink-equivalent pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalSequence {
    pub steps: Vec<ChordalStep>,
}

impl ChordalSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn all_certified(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.sink_equivalent && s.complement_peo)
    }
}

/// Builds the sequence greedily from `x` upwards: in the current complement
/// take `a` the smallest vertex with positive indegree and `b` the largest
/// vertex with an edge to `a`, then add `b -> a` back.
///
/// Requires `x` labeled acyclic, simple, and `1..n` a perfect elimination
/// ordering of its complement.
pub fn chordal_sequence(x: &Digraph) -> Result<ChordalSequence> {
    if !x.has_standard_labels() {
        return Err(invalid!("chordal sequence needs labels 1..n"));
    }
    if !x.is_labeled_acyclic() || !x.is_simple() {
        return Err(domain!(
            "chordal sequence needs a simple labeled acyclic graph"
        ));
    }
    let comp = x.complement()?;
    if !peo_holds(&comp) {
        return Err(domain!(
            "certificate failed: 1..n is not a perfect elimination ordering of the complement"
        ));
    }

    let mut rev = Vec::new();
    let mut current = x.clone();
    let mut comp = comp;
    rev.push(ChordalStep {
        graph: current.clone(),
        removed: None,
        sink_equivalent: true,
        complement_peo: true,
    });
    while comp.edge_count() > 0 {
        let a = comp
            .edges()
            .map(|((_, to), _)| to)
            .min()
            .expect("nonempty complement");
        let b = comp
            .edges()
            .filter(|&((_, to), _)| to == a)
            .map(|((from, _), _)| from)
            .max()
            .expect("a has an in-edge");
        let prev = current.with_edge(b, a)?;
        let prev_comp = comp.without_edge(b, a)?;
        let sink_equivalent = prev.pair_is(a, b, EquivalenceKind::Sink)?;
        let complement_peo = peo_holds(&prev_comp);
        if !sink_equivalent {
            return Err(domain!(
                "certificate failed: {{{a}, {b}}} is not sink-equivalent"
            ));
        }
        if !complement_peo {
            return Err(domain!("certificate failed: complement after adding {b}->{a} is not a perfect elimination ordering"));
        }
        rev.push(ChordalStep {
            graph: prev.clone(),
            removed: Some((b, a)),
            sink_equivalent,
            complement_peo,
        });
        current = prev;
        comp = prev_comp;
    }
    rev.reverse();
    Ok(ChordalSequence { steps: rev })
}
