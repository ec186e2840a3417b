//! Executable checks of the structural theorems and Worpitzky-type
//! identities for outdegree polynomials.
//!
//! Every verifier evaluates both sides exactly. A failed identity is not an
//! error: it comes back as a [`Verdict`] with `holds == false` and the first
//! counterexample. Errors are reserved for violated preconditions and
//! resource bounds.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Display;

use num_bigint::BigInt;

use crate::chordal::{find_chordal_labeling, is_peo};
use crate::chromatic::ChromaticCache;
use crate::digraph::{Digraph, EquivalenceKind, Label};
use crate::error::{domain, invalid};
use crate::{
    eulerian_poly, expand_over_one_minus_x, generalized_eulerian_poly, materialize, odp,
    odp_assign_slice, odp_edge_slice, Limits, Permutation, Polynomial, Result, SeriesPrefix,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification. `holds == false` always comes with a
/// counterexample whose two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub checked_range: String,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    fn pass(checked_range: String) -> Self {
        Verdict {
            holds: true,
            checked_range,
            counterexample: None,
        }
    }

    fn fail(checked_range: String, inputs: String, lhs: String, rhs: String) -> Self {
        Verdict {
            holds: false,
            checked_range,
            counterexample: Some(Counterexample { inputs, lhs, rhs }),
        }
    }

    fn compare<T: PartialEq + Display>(
        checked_range: String,
        inputs: String,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        if lhs == rhs {
            Verdict::pass(checked_range)
        } else {
            Verdict::fail(checked_range, inputs, lhs.to_string(), rhs.to_string())
        }
    }
}

fn edges_str(g: &Digraph) -> String {
    let parts: Vec<String> = g
        .edge_list()
        .iter()
        .map(|(u, v)| format!("{u}->{v}"))
        .collect();
    format!("n={} {{{}}}", g.n(), parts.join(", "))
}

fn pair_inputs(x: &Digraph, y: &Digraph) -> String {
    format!("X: {}; Y: {}", edges_str(x), edges_str(y))
}

/// `σ -> σ⁻¹` maps `DFS(X, Y)` onto `DFS(Y, X)` preserving multiplicity.
pub fn verify_automorphism(x: &Digraph, y: &Digraph, limits: &Limits) -> Result<Verdict> {
    let forward = materialize(x, y, limits)?;
    let backward = materialize(y, x, limits)?;
    let range = format!(
        "all {} vertices of DFS(X,Y) and DFS(Y,X)",
        forward.vertices().len()
    );

    let tally = |g: &crate::MaterializedDfs, invert: bool| {
        let mut map: BTreeMap<(Permutation, Permutation), u64> = BTreeMap::new();
        for w in g.witnesses() {
            let key = if invert {
                (w.source.inverse(), w.target.inverse())
            } else {
                (w.source.clone(), w.target.clone())
            };
            *map.entry(key).or_insert(0) += w.multiplicity as u64;
        }
        map
    };
    let mapped = tally(&forward, true);
    let actual = tally(&backward, false);
    if mapped == actual {
        return Ok(Verdict::pass(range));
    }
    let keys: alloc::collections::BTreeSet<_> = mapped.keys().chain(actual.keys()).collect();
    let (s, t) = keys
        .into_iter()
        .find(|k| mapped.get(k) != actual.get(k))
        .expect("maps differ somewhere");
    Ok(Verdict::fail(
        range,
        format!("{}; edge {s} -> {t} in DFS(Y,X)", pair_inputs(x, y)),
        format!(
            "{}",
            mapped.get(&(s.clone(), t.clone())).copied().unwrap_or(0)
        ),
        format!(
            "{}",
            actual.get(&(s.clone(), t.clone())).copied().unwrap_or(0)
        ),
    ))
}

/// `f(σ) = Σ i·σ(i)`.
pub fn potential(sigma: &Permutation) -> u64 {
    sigma
        .images()
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as u64 + 1) * v as u64)
        .sum()
}

/// For labeled acyclic `X` and `Y`: `f` strictly decreases along every
/// edge of `DFS(X, Y)` and the graph has no directed cycle.
pub fn verify_acyclic_potential(x: &Digraph, y: &Digraph, limits: &Limits) -> Result<Verdict> {
    if !x.is_labeled_acyclic() || !y.is_labeled_acyclic() {
        return Err(domain!("potential argument needs X and Y labeled acyclic"));
    }
    let g = materialize(x, y, limits)?;
    let range = format!("all {} witnesses of DFS(X,Y)", g.witnesses().count());
    for w in g.witnesses() {
        let (fs, ft) = (potential(&w.source), potential(&w.target));
        if fs <= ft {
            return Ok(Verdict::fail(
                range,
                format!("{}; edge {} -> {}", pair_inputs(x, y), w.source, w.target),
                format!("f = {fs}"),
                format!("f = {ft}"),
            ));
        }
    }
    if !g.is_acyclic() {
        return Ok(Verdict::fail(
            range,
            pair_inputs(x, y),
            "cycle".into(),
            "acyclic".into(),
        ));
    }
    Ok(Verdict::pass(range))
}

fn require_edge(x: &Digraph, a: Label, b: Label) -> Result<()> {
    if x.has_edge(a, b) {
        Ok(())
    } else {
        Err(invalid!("X has no edge {a}->{b}"))
    }
}

/// Removing one copy of `a -> b` from `X`:
/// `x·ODP(X', Y) = x·ODP(X, Y) - (x - 1)·ODP(X, Y)_{a->b}`.
pub fn verify_edge_removal(
    x: &Digraph,
    y: &Digraph,
    a: Label,
    b: Label,
    limits: &Limits,
) -> Result<Verdict> {
    require_edge(x, a, b)?;
    let reduced = x.without_edge(a, b)?;
    let lhs = odp(&reduced, y, limits)?.mul_x();
    let slice = odp_edge_slice(x, y, a, b, limits)?;
    let rhs = &odp(x, y, limits)?.mul_x() - &(&Polynomial::from_i64s(&[-1, 1]) * &slice);
    let inputs = format!("{}; edge {a}->{b}", pair_inputs(x, y));
    Ok(Verdict::compare(format!("S_{}", x.n()), inputs, &lhs, &rhs))
}

/// For a self-equivalent pair with `a -> b` in `X`:
/// `ODP(X, Y)_{a->b} = x·ODP(X, Y)_{b->a}`.
pub fn verify_self_equivalent_slice(
    x: &Digraph,
    y: &Digraph,
    a: Label,
    b: Label,
    limits: &Limits,
) -> Result<Verdict> {
    require_edge(x, a, b)?;
    if !x.pair_is(a, b, EquivalenceKind::SelfEquivalent)? {
        return Err(domain!(
            "certificate failed: {{{a}, {b}}} is not self-equivalent in X"
        ));
    }
    let lhs = odp_edge_slice(x, y, a, b, limits)?;
    let rhs = odp_edge_slice(x, y, b, a, limits)?.mul_x();
    let inputs = format!("{}; pair {a}->{b}", pair_inputs(x, y));
    Ok(Verdict::compare(format!("S_{}", x.n()), inputs, &lhs, &rhs))
}

/// Right-hand side of the point-squishing identity:
/// `x · Σ_{u->v in Y} ODP(X - b, Y^{uv})_{σ(a)=u}`, parallel edges counted
/// separately, labels aligned by the order-preserving bijections onto
/// `1..n-1`.
pub fn point_squish_rhs(
    x: &Digraph,
    y: &Digraph,
    a: Label,
    b: Label,
    limits: &Limits,
) -> Result<Polynomial> {
    if x.n() < 2 {
        return Err(invalid!("point squishing needs at least two vertices"));
    }
    let reduced = x.delete_vertices(&[b].into_iter().collect(), false)?;
    let a_rank = reduced
        .labels()
        .binary_search(&a)
        .map_err(|_| invalid!("label {a} is not a vertex"))? as Label
        + 1;
    let reduced = reduced.compress_labels();
    let mut sum = Polynomial::zero();
    for ((u, v), mult) in y.edges() {
        if u == v {
            continue;
        }
        let contracted = y.contract(u, v)?;
        let u_rank = contracted.labels().binary_search(&u).expect("u survives") as Label + 1;
        let slice = odp_assign_slice(
            &reduced,
            &contracted.compress_labels(),
            a_rank,
            u_rank,
            limits,
        )?;
        sum = &sum + &slice.scale(&BigInt::from(mult));
    }
    Ok(sum.mul_x())
}

/// For a sink-equivalent pair with `a -> b` in `X`:
/// `ODP(X, Y)_{a->b} = x · Σ_{u->v in Y} ODP(X - b, Y^{uv})_{σ(a)=u}`.
pub fn verify_point_squish(
    x: &Digraph,
    y: &Digraph,
    a: Label,
    b: Label,
    limits: &Limits,
) -> Result<Verdict> {
    require_edge(x, a, b)?;
    if a == b {
        return Err(invalid!("point squishing needs a != b"));
    }
    if !x.pair_is(a, b, EquivalenceKind::Sink)? {
        return Err(domain!(
            "certificate failed: {{{a}, {b}}} is not sink-equivalent in X"
        ));
    }
    let lhs = odp_edge_slice(x, y, a, b, limits)?;
    let rhs = point_squish_rhs(x, y, a, b, limits)?;
    let inputs = format!("{}; pair {a}->{b}", pair_inputs(x, y));
    Ok(Verdict::compare(
        format!("S_{} and S_{}", x.n(), x.n() - 1),
        inputs,
        &lhs,
        &rhs,
    ))
}

/// Both sides of a Worpitzky-type identity for one graph, with the
/// chordality certificates that bear on its hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesIdentityReport {
    pub verdict: Verdict,
    pub graph: Digraph,
    pub odp: Polynomial,
    pub lhs: SeriesPrefix,
    pub rhs: SeriesPrefix,
    pub first_bad_m: Option<usize>,
    /// First relabeling making `X` a perfect elimination ordering, if any.
    pub chordal_labeling: Option<Permutation>,
    /// `1..n` is a perfect elimination ordering of the complement of `X`.
    pub complement_peo: bool,
}

/// Which Worpitzky-type identity a sweep checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesIdentity {
    /// `ODP(X, Path_n)/(1-x)^{n+1} = (-1)^n Σ χ_{X̄}(-m-1) x^m`.
    Path,
    /// `ODP(X, Cycle_n)/(1-x)^n = (-1)^n n Σ (χ_{X̄}(-m)/m) x^m`.
    Cycle,
}

fn require_simple_labeled_acyclic(x: &Digraph) -> Result<()> {
    if !x.has_standard_labels() {
        return Err(invalid!("identity needs X labeled 1..n"));
    }
    if !x.is_labeled_acyclic() || !x.is_simple() {
        return Err(domain!("identity needs X simple and labeled acyclic"));
    }
    Ok(())
}

fn series_report(
    x: &Digraph,
    m: usize,
    which: SeriesIdentity,
    limits: &Limits,
    cache: &mut ChromaticCache,
) -> Result<SeriesIdentityReport> {
    require_simple_labeled_acyclic(x)?;
    let n = x.n();
    Limits::check("identity verification", n, limits.verify)?;
    let comp = x.complement()?;
    let chi = cache.chromatic(&comp);
    let sign = BigInt::from(if n.is_multiple_of(2) { 1 } else { -1 });
    let (poly, lhs, rhs_vals): (Polynomial, SeriesPrefix, Vec<BigInt>) = match which {
        SeriesIdentity::Path => {
            let poly = odp(x, &Digraph::path(n)?, limits)?;
            let lhs = expand_over_one_minus_x(&poly, n + 1, m);
            let rhs = (0..=m as i64)
                .map(|k| &sign * chi.eval_i64(-k - 1))
                .collect();
            (poly, lhs, rhs)
        }
        SeriesIdentity::Cycle => {
            if n < 2 {
                return Err(invalid!("cycle identity needs n >= 2"));
            }
            let poly = odp(x, &Digraph::cycle(n)?, limits)?;
            let lhs = expand_over_one_minus_x(&poly, n, m);
            // χ(-t)/t as a polynomial in t, so that t = 0 is its value there
            let quotient = chi.negate_variable().divide_by_x()?;
            let factor = &sign * BigInt::from(n);
            let rhs = (0..=m as i64)
                .map(|k| &factor * quotient.eval_i64(k))
                .collect();
            (poly, lhs, rhs)
        }
    };
    let rhs = SeriesPrefix::from_integers(rhs_vals)?;
    let first_bad_m = lhs.first_difference(&rhs);
    let range = format!("S_{n}, m = 0..{m}");
    let verdict = match first_bad_m {
        None => Verdict::pass(range),
        Some(k) => Verdict::fail(
            range,
            format!("X: {}; m = {k}", edges_str(x)),
            lhs.coeffs()[k].to_string(),
            rhs.coeffs()[k].to_string(),
        ),
    };
    Ok(SeriesIdentityReport {
        verdict,
        graph: x.clone(),
        odp: poly,
        lhs,
        rhs,
        first_bad_m,
        chordal_labeling: find_chordal_labeling(x, limits)?,
        complement_peo: is_peo(&comp)?,
    })
}

/// Prefix comparison of `ODP(X, Path_n)/(1-x)^{n+1}` against
/// `(-1)^n χ_{X̄}(-m-1)`. Runs for every simple labeled acyclic `X`; the
/// certificates are reported, not required.
pub fn verify_path_identity(
    x: &Digraph,
    m: usize,
    limits: &Limits,
) -> Result<SeriesIdentityReport> {
    series_report(
        x,
        m,
        SeriesIdentity::Path,
        limits,
        &mut ChromaticCache::new(),
    )
}

/// Prefix comparison of `ODP(X, Cycle_n)/(1-x)^n` against
/// `(-1)^n n χ_{X̄}(-m)/m`, where `χ(-m)/m` is read as the polynomial
/// `χ(-t)/t` evaluated at `t = m` (so `m = 0` is defined).
pub fn verify_cycle_identity(
    x: &Digraph,
    m: usize,
    limits: &Limits,
) -> Result<SeriesIdentityReport> {
    series_report(
        x,
        m,
        SeriesIdentity::Cycle,
        limits,
        &mut ChromaticCache::new(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBaseReport {
    pub verdict: Verdict,
    pub n: usize,
    pub odp: Polynomial,
    pub lhs: SeriesPrefix,
    pub rhs: SeriesPrefix,
    /// `ODP(Tour_n, Cycle_n) = n·x·A_{n-1}(x)`; not applicable for `n = 1`.
    pub intermediate: Option<bool>,
}

/// `ODP(Tour_n, Cycle_n)/(1-x)^n = n Σ m^{n-1} x^m` with `0^0 = 1`.
/// `Cycle_1` does not exist; for `n = 1` the left side is `1/(1-x)`.
pub fn verify_cycle_base(n: usize, m: usize, limits: &Limits) -> Result<CycleBaseReport> {
    if n == 0 {
        return Err(invalid!("n must be positive"));
    }
    Limits::check("identity verification", n, limits.verify)?;
    let tour = Digraph::tour(n)?;
    let seats = if n == 1 {
        Digraph::empty(1)?
    } else {
        Digraph::cycle(n)?
    };
    let poly = odp(&tour, &seats, limits)?;
    let lhs = expand_over_one_minus_x(&poly, n, m);
    let rhs = SeriesPrefix::from_integers((0..=m).map(|k| {
        let pow = if n == 1 {
            BigInt::from(1)
        } else {
            num_traits::pow(BigInt::from(k), n - 1)
        };
        BigInt::from(n) * pow
    }))?;
    let intermediate = if n >= 2 {
        let expected = eulerian_poly(n - 1, limits)?
            .scale(&BigInt::from(n))
            .mul_x();
        Some(poly == expected)
    } else {
        None
    };
    let range = format!("S_{n}, m = 0..{m}");
    let inputs = format!("n = {n}");
    let verdict = match (lhs.first_difference(&rhs), intermediate) {
        (Some(k), _) => Verdict::fail(
            range,
            format!("{inputs}; m = {k}"),
            lhs.coeffs()[k].to_string(),
            rhs.coeffs()[k].to_string(),
        ),
        (None, Some(false)) => Verdict::fail(
            range,
            format!("{inputs}; ODP(Tour_n, Cycle_n) against n*x*A_(n-1)"),
            poly.to_string(),
            eulerian_poly(n - 1, limits)?
                .scale(&BigInt::from(n))
                .mul_x()
                .to_string(),
        ),
        _ => Verdict::pass(range),
    };
    Ok(CycleBaseReport {
        verdict,
        n,
        odp: poly,
        lhs,
        rhs,
        intermediate,
    })
}

/// Orientation of the undirected graph underlying `g` with every edge
/// pointing from the larger label to the smaller.
pub fn labeled_acyclic_orientation(g: &Digraph) -> Result<Digraph> {
    if !g.has_standard_labels() {
        return Err(invalid!("graph must be labeled 1..n"));
    }
    let pairs: alloc::collections::BTreeSet<(Label, Label)> = g
        .edges()
        .filter(|&((u, v), _)| u != v)
        .map(|((u, v), _)| (u.max(v), u.min(v)))
        .collect();
    Digraph::from_edges(g.n(), pairs)
}

/// `A_G = ODP(Path_n, X_G)` (or `C_G = ODP(Cycle_n, X_G)` when `cyclic`),
/// with `X_G` the labeled acyclic orientation of `G`.
pub fn verify_generalized_equals_odp(
    g: &Digraph,
    cyclic: bool,
    limits: &Limits,
) -> Result<Verdict> {
    let n = g.n();
    Limits::check("identity verification", n, limits.verify)?;
    let oriented = labeled_acyclic_orientation(g)?;
    let lhs = generalized_eulerian_poly(g, cyclic, limits)?;
    let seats = if cyclic {
        Digraph::cycle(n)?
    } else {
        Digraph::path(n)?
    };
    let rhs = odp(&seats, &oriented, limits)?;
    let what = if cyclic { "C_G" } else { "A_G" };
    Ok(Verdict::compare(
        format!("S_{n}"),
        format!("{what}; G: {}", edges_str(g)),
        &lhs,
        &rhs,
    ))
}

/// One graph of a sweep, keyed by its tournament-edge bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub graph_id: u64,
    pub report: SeriesIdentityReport,
}

/// Checks one identity on every simple labeled acyclic graph on `n`
/// vertices, ordered by graph id.
pub fn sweep(n: usize, m: usize, which: SeriesIdentity, limits: &Limits) -> Result<Vec<SweepRow>> {
    Limits::check("labeled acyclic sweep", n, limits.sweep)?;
    if which == SeriesIdentity::Cycle && n < 2 {
        return Err(invalid!("cycle identity needs n >= 2"));
    }
    let mut cache = ChromaticCache::new();
    Digraph::labeled_acyclic_family(n)?
        .map(|(graph_id, x)| {
            Ok(SweepRow {
                graph_id,
                report: series_report(&x, m, which, limits, &mut cache)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const LIM: Limits = Limits::DEFAULT;

    fn g(n: usize, e: &[(Label, Label)]) -> Digraph {
        Digraph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn ints(s: &SeriesPrefix) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn automorphism_examples() {
        let t3 = Digraph::tour(3).unwrap();
        let p3 = Digraph::path(3).unwrap();
        let c3 = Digraph::cycle(3).unwrap();
        assert!(verify_automorphism(&t3, &p3, &LIM).unwrap().holds);
        assert!(verify_automorphism(&c3, &c3, &LIM).unwrap().holds);
        assert!(
            verify_automorphism(&t3, &Digraph::empty(3).unwrap(), &LIM)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn potential_examples() {
        let t3 = Digraph::tour(3).unwrap();
        assert!(verify_acyclic_potential(&t3, &t3, &LIM).unwrap().holds);
        let p = |w| Permutation::from_word(w).unwrap();
        assert_eq!(potential(&p("123")), 14);
        assert_eq!(potential(&p("213")), 13);
        let x = g(3, &[(1, 2), (2, 3), (3, 1)]);
        let y = g(3, &[(1, 2), (2, 3), (1, 3)]);
        assert!(matches!(
            verify_acyclic_potential(&x, &y, &LIM),
            Err(crate::Error::Domain(_))
        ));
        assert!(
            verify_acyclic_potential(&Digraph::empty(3).unwrap(), &t3, &LIM)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn edge_removal_examples() {
        let t3 = Digraph::tour(3).unwrap();
        let p3 = Digraph::path(3).unwrap();
        assert!(verify_edge_removal(&t3, &p3, 3, 1, &LIM).unwrap().holds);
        let reduced = t3.without_edge(3, 1).unwrap();
        assert_eq!(
            odp(&reduced, &p3, &LIM).unwrap(),
            Polynomial::from_i64s(&[3, 2, 1])
        );
        assert!(
            verify_edge_removal(&t3, &Digraph::empty(3).unwrap(), 2, 1, &LIM)
                .unwrap()
                .holds
        );
        assert!(verify_edge_removal(&t3, &p3, 1, 3, &LIM).is_err());
    }

    #[test]
    fn self_slice_examples() {
        let t3 = Digraph::tour(3).unwrap();
        assert!(
            verify_self_equivalent_slice(&t3, &Digraph::path(3).unwrap(), 2, 1, &LIM)
                .unwrap()
                .holds
        );
        assert!(
            verify_self_equivalent_slice(&t3, &Digraph::empty(3).unwrap(), 2, 1, &LIM)
                .unwrap()
                .holds
        );
        let x = g(3, &[(2, 1), (3, 1)]);
        assert!(matches!(
            verify_self_equivalent_slice(&x, &t3, 2, 1, &LIM),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn squish_examples() {
        let t3 = Digraph::tour(3).unwrap();
        let v = verify_point_squish(&t3, &Digraph::path(3).unwrap(), 2, 1, &LIM).unwrap();
        assert!(v.holds);
        let t2 = Digraph::tour(2).unwrap();
        assert!(
            verify_point_squish(&t2, &Digraph::cycle(2).unwrap(), 2, 1, &LIM)
                .unwrap()
                .holds
        );
        let rhs = point_squish_rhs(&t3, &Digraph::empty(3).unwrap(), 2, 1, &LIM).unwrap();
        assert!(rhs.is_zero());
        assert!(
            verify_point_squish(&t3, &Digraph::empty(3).unwrap(), 2, 1, &LIM)
                .unwrap()
                .holds
        );
        assert!(matches!(
            verify_point_squish(&Digraph::path(3).unwrap(), &t3, 1, 2, &LIM),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn path_identity_examples() {
        for n in 1..=5 {
            let r = verify_path_identity(&Digraph::tour(n).unwrap(), 5, &LIM).unwrap();
            assert!(r.verdict.holds);
            let expected: Vec<i64> = (0..=5).map(|m| (m + 1i64).pow(n as u32)).collect();
            assert_eq!(ints(&r.rhs), expected);
        }
        let r = verify_path_identity(&g(3, &[(3, 1)]), 2, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(r.odp, Polynomial::from_i64s(&[4, 2]));
        assert_eq!(ints(&r.lhs), vec![4, 18, 48]);

        let r = verify_path_identity(&g(4, &[(3, 1), (4, 2)]), 2, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(r.odp, Polynomial::from_i64s(&[14, 8, 2]));
        assert_eq!(ints(&r.lhs), vec![14, 78, 252]);
        assert!(!r.complement_peo);
        assert!(r.chordal_labeling.is_some());
    }

    #[test]
    fn path_identity_failure_is_data() {
        let r = verify_path_identity(&g(3, &[(2, 1), (3, 2)]), 4, &LIM).unwrap();
        assert!(!r.verdict.holds);
        assert_eq!(r.first_bad_m, Some(0));
        let ce = r.verdict.counterexample.unwrap();
        assert_eq!((ce.lhs.as_str(), ce.rhs.as_str()), ("3", "2"));
    }

    #[test]
    fn cycle_base_examples() {
        let r = verify_cycle_base(3, 3, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(r.odp, Polynomial::from_i64s(&[0, 3, 3]));
        assert_eq!(ints(&r.lhs), vec![0, 3, 12, 27]);
        assert_eq!(r.intermediate, Some(true));

        let r = verify_cycle_base(2, 3, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(r.odp, Polynomial::from_i64s(&[0, 2]));
        assert_eq!(ints(&r.lhs), vec![0, 2, 4, 6]);

        let r = verify_cycle_base(1, 3, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(ints(&r.lhs), vec![1, 1, 1, 1]);
        assert_eq!(r.intermediate, None);
    }

    #[test]
    fn cycle_identity_examples() {
        let r = verify_cycle_identity(&Digraph::tour(3).unwrap(), 3, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(ints(&r.rhs), vec![0, 3, 12, 27]);

        let r = verify_cycle_identity(&g(3, &[(3, 1)]), 2, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(r.odp, Polynomial::from_i64s(&[3, 3]));
        assert_eq!(ints(&r.lhs), vec![3, 12, 27]);

        let r = verify_cycle_identity(&Digraph::empty(3).unwrap(), 2, &LIM).unwrap();
        assert!(r.verdict.holds);
        assert!(verify_cycle_identity(&Digraph::empty(1).unwrap(), 2, &LIM).is_err());
    }

    #[test]
    fn generalized_examples() {
        for n in 1..=6 {
            assert!(
                verify_generalized_equals_odp(&Digraph::tour(n).unwrap(), false, &LIM)
                    .unwrap()
                    .holds
            );
        }
        for cyclic in [false, true] {
            assert!(
                verify_generalized_equals_odp(&Digraph::empty(3).unwrap(), cyclic, &LIM)
                    .unwrap()
                    .holds
            );
        }
        let single = g(3, &[(1, 3)]);
        assert!(
            verify_generalized_equals_odp(&single, false, &LIM)
                .unwrap()
                .holds
        );
        assert_eq!(
            generalized_eulerian_poly(&single, false, &LIM).unwrap(),
            Polynomial::from_i64s(&[4, 2])
        );
    }

    #[test]
    fn sweep_is_ordered_and_bounded() {
        let rows = sweep(3, 10, SeriesIdentity::Path, &LIM).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.windows(2).all(|w| w[0].graph_id < w[1].graph_id));
        let failing: Vec<u64> = rows
            .iter()
            .filter(|r| !r.report.verdict.holds)
            .map(|r| r.graph_id)
            .collect();
        // only {2->1, 3->2}
        assert_eq!(failing, vec![0b101]);
        assert!(matches!(
            sweep(5, 3, SeriesIdentity::Path, &LIM),
            Err(crate::Error::Resource { .. })
        ));
    }
}
