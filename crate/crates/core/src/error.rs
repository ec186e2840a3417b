use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad labels, size mismatch, missing edge.
    InvalidArgument(String),
    /// Input is well formed but outside the domain of the operation
    /// (e.g. complement of a graph that is not labeled acyclic).
    Domain(String),
    /// The request would enumerate more than the configured bound allows.
    Resource {
        what: &'static str,
        n: usize,
        bound: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Resource { what, n, bound } => write!(
                f,
                "resource bound exceeded: {what} requested for n = {n}, bound is {bound}"
            ),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::Error::InvalidArgument(alloc::format!($($arg)*))
    };
}

macro_rules! domain {
    ($($arg:tt)*) => {
        $crate::Error::Domain(alloc::format!($($arg)*))
    };
}

pub(crate) use domain;
pub(crate) use invalid;
