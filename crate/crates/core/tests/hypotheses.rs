//! Where the series and slice identities hold on small graphs.

mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seatgraph_core::*;

const LIM: Limits = Limits::DEFAULT;

fn adjacent_pairs(x: &Digraph, kind: EquivalenceKind) -> Vec<(Label, Label)> {
    x.edge_list()
        .into_iter()
        .filter(|&(a, b)| x.pair_is(a, b, kind).unwrap())
        .collect()
}

#[test]
fn series_identities_hold_when_complement_is_peo() {
    for n in 2..=4 {
        for which in [SeriesIdentity::Path, SeriesIdentity::Cycle] {
            for row in sweep(n, 12, which, &LIM).unwrap() {
                let r = &row.report;
                if r.complement_peo {
                    assert!(
                        r.verdict.holds,
                        "{which:?} id {} {:?}",
                        row.graph_id, r.verdict
                    );
                }
            }
        }
    }
}

#[test]
fn path_and_cycle_identities_fail_together() {
    for n in 2..=4 {
        let path = sweep(n, 12, SeriesIdentity::Path, &LIM).unwrap();
        let cycle = sweep(n, 12, SeriesIdentity::Cycle, &LIM).unwrap();
        for (p, c) in path.iter().zip(&cycle) {
            assert_eq!(p.graph_id, c.graph_id);
            assert_eq!(
                p.report.verdict.holds, c.report.verdict.holds,
                "id {}",
                p.graph_id
            );
        }
    }
}

#[test]
fn chordal_x_is_not_enough() {
    let x = Digraph::from_edges(3, [(2, 1), (3, 2)]).unwrap();
    assert!(is_peo(&x).unwrap());
    let r = verify_path_identity(&x, 12, &LIM).unwrap();
    assert_eq!(r.odp, Polynomial::from_i64s(&[3, 2, 1]));
    assert!(!r.verdict.holds);
    assert!(!r.complement_peo);
    assert!(!verify_cycle_identity(&x, 12, &LIM).unwrap().verdict.holds);
}

#[test]
fn point_squish_on_paths_and_cycles() {
    for n in 2..=4 {
        let seats = [Digraph::path(n).unwrap(), Digraph::cycle(n).unwrap()];
        for (_, x) in Digraph::labeled_acyclic_family(n).unwrap() {
            for (a, b) in adjacent_pairs(&x, EquivalenceKind::Sink) {
                for y in &seats {
                    let v = verify_point_squish(&x, y, a, b, &LIM).unwrap();
                    assert!(v.holds, "{:?}", v.counterexample);
                }
            }
        }
    }
}

#[test]
fn point_squish_on_self_equivalent_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 2..=4 {
        let mut ys = vec![
            Digraph::path(n).unwrap(),
            Digraph::cycle(n).unwrap(),
            Digraph::tour(n).unwrap(),
        ];
        ys.extend((0..10).map(|_| random_simple(&mut rng, n, 0.5)));
        for (_, x) in Digraph::labeled_acyclic_family(n).unwrap() {
            for (a, b) in adjacent_pairs(&x, EquivalenceKind::SelfEquivalent) {
                for y in &ys {
                    let v = verify_point_squish(&x, y, a, b, &LIM).unwrap();
                    assert!(v.holds, "{:?}", v.counterexample);
                }
            }
        }
    }
}

#[test]
fn self_slice_with_acyclic_seats() {
    for n in 2..=4 {
        let ys: Vec<Digraph> = Digraph::labeled_acyclic_family(n)
            .unwrap()
            .map(|(_, y)| y)
            .collect();
        for (_, x) in Digraph::labeled_acyclic_family(n).unwrap() {
            for (a, b) in adjacent_pairs(&x, EquivalenceKind::SelfEquivalent) {
                for y in ys.iter().chain([&Digraph::path(n).unwrap()]) {
                    let v = verify_self_equivalent_slice(&x, y, a, b, &LIM).unwrap();
                    assert!(v.holds, "{:?}", v.counterexample);
                }
            }
        }
    }
}

#[test]
fn self_slice_breaks_on_two_cycles() {
    let v = verify_self_equivalent_slice(
        &Digraph::tour(2).unwrap(),
        &Digraph::cycle(2).unwrap(),
        2,
        1,
        &LIM,
    )
    .unwrap();
    assert!(!v.holds);
    let ce = v.counterexample.unwrap();
    assert_eq!((ce.lhs.as_str(), ce.rhs.as_str()), ("2*x", "2*x^2"));
}

#[test]
fn four_cycle_orientation() {
    let x = Digraph::from_edges(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
    let y = Digraph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
    let p = |w: &str| Permutation::from_word(w).unwrap();
    let cyc = [p("123"), p("213"), p("312"), p("321")];
    let inverse = [p("123"), p("213"), p("231"), p("321")];
    let yx = materialize(&y, &x, &LIM).unwrap();
    let xy = materialize(&x, &y, &LIM).unwrap();
    assert!(yx.contains_cycle_through(&cyc));
    assert!(xy.contains_cycle_through(&inverse));
    assert!(!xy.is_acyclic() && !yx.is_acyclic());
}
