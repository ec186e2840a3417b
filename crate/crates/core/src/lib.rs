//! Directed friends-and-seats graphs and the Eulerian-type polynomials they
//! carry.
//!
//! Everything here is exact: polynomial coefficients are arbitrary precision
//! integers and power-series prefixes are exact rationals. Sums over the
//! symmetric group are computed by streaming permutations, so the
//! `n!`-vertex graph `DFS(X, Y)` is only built on request ([`materialize`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! any IO live in the `seatgraph` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chordal;
pub mod chromatic;
pub mod dfsgraph;
pub mod digraph;
mod error;
pub mod identities;
mod limits;
pub mod permutation;
pub mod polynomial;

pub use chordal::{chordal_sequence, find_chordal_labeling, is_peo, ChordalSequence, ChordalStep};
pub use chromatic::{chromatic_poly, ChromaticCache};
pub use dfsgraph::{
    materialize, odp, odp_assign_slice, odp_edge_slice, out_neighbors, outdegree, DfsEdgeWitness,
    MaterializedDfs,
};
pub use digraph::{Digraph, EquivalenceKind, Label};
pub use error::{Error, Result};
pub use identities::{
    labeled_acyclic_orientation, point_squish_rhs, potential, sweep, verify_acyclic_potential,
    verify_automorphism, verify_cycle_base, verify_cycle_identity, verify_edge_removal,
    verify_generalized_equals_odp, verify_path_identity, verify_point_squish,
    verify_self_equivalent_slice, Counterexample, CycleBaseReport, SeriesIdentity,
    SeriesIdentityReport, SweepRow, Verdict,
};
pub use limits::Limits;
pub use permutation::Permutation;
pub use polynomial::{
    eulerian_poly, expand_over_one_minus_x, generalized_eulerian_poly, Polynomial, SeriesPrefix,
};
