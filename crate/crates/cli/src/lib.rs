//! File formats and the command-line front end for `seatgraph-core`.

pub mod cli;
pub mod format;
