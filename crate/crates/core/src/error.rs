use std::fmt;
use std::io;

/// Errors produced by graph generation, model construction, and simulation.
#[derive(Debug)]
pub enum Error {
    /// A parameter failed validation (value outside its documented range).
    InvalidParameter(String),
    /// A graph metric required a connected graph and the graph was not.
    Disconnected { unreachable: usize },
    /// A video with no outgoing recommendations in a catalog larger than one.
    ZeroOutDegree(u32),
    /// Power iteration did not reach the residual tolerance.
    NoConvergence { residual: f64, iterations: usize },
    /// A cache policy emitted an action the engine contract forbids.
    PolicyContract(String),
    /// A serialized graph or config file could not be parsed.
    Format(String),
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Disconnected { unreachable } => {
                write!(f, "graph is disconnected: {unreachable} unreachable node(s)")
            }
            Error::ZeroOutDegree(id) => {
                write!(f, "video {id} has no outgoing recommendations")
            }
            Error::NoConvergence { residual, iterations } => write!(
                f,
                "power iteration did not converge: residual {residual:e} after {iterations} iterations"
            ),
            Error::PolicyContract(msg) => write!(f, "cache policy contract violation: {msg}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
            Error::Io(err) => write!(f, "io error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(err: io::Error) -> Self {
        Error::Io(err)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
