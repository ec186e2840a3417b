use crate::{Error, Result};

/// Upper bounds on `n` for the factorial-time operations.
///
/// The defaults keep every call at desk scale (seconds). `UNBOUNDED` lifts
/// all checks and is what the CLI's `--unsafe-bounds` switches to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Raw permutation streams.
    pub enumerate: usize,
    /// Sums over `S_n`: outdegree polynomials, slices, Eulerian polynomials.
    pub odp: usize,
    /// Explicit `DFS(X, Y)` construction.
    pub materialize: usize,
    /// Exhaustive relabeling search for chordal labelings.
    pub chordal_search: usize,
    /// Worpitzky-type identity verifiers.
    pub verify: usize,
    /// Sweeps over all labeled acyclic graphs on `n` vertices.
    pub sweep: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        enumerate: 12,
        odp: 10,
        materialize: 7,
        chordal_search: 8,
        verify: 8,
        sweep: 4,
    };

    pub const UNBOUNDED: Limits = Limits {
        enumerate: usize::MAX,
        odp: usize::MAX,
        materialize: usize::MAX,
        chordal_search: usize::MAX,
        verify: usize::MAX,
        sweep: usize::MAX,
    };

    pub(crate) fn check(what: &'static str, n: usize, bound: usize) -> Result<()> {
        if n > bound {
            Err(Error::Resource { what, n, bound })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
