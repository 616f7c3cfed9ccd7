//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while constructing graphs, running solvers
/// or evaluating predictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge `(v, v)` was supplied; simple graphs have no self-loops.
    SelfLoop { vertex: usize },
    /// A vertex index is not `< order`.
    VertexOutOfRange { vertex: usize, order: usize },
    /// The same edge appeared twice in an input edge list (multigraphs are
    /// rejected at construction).
    DuplicateEdge { u: usize, v: usize },
    /// The requested order exceeds [`crate::set::MAX_VERTICES`].
    TooManyVertices { order: usize, max: usize },
    /// A connected-variant operation was asked about a disconnected graph.
    DisconnectedGraph,
    /// The operation is undefined on the empty graph.
    EmptyGraph,
    /// The solver ran out of its candidate budget before certifying a value.
    /// `best_upper_bound` is the size of the best feasible set seen so far,
    /// if any; a bottom-up search that has not yet reached a feasible size
    /// reports `None`.
    BudgetExceeded {
        candidates_checked: u64,
        best_upper_bound: Option<usize>,
    },
    /// The max-leaf number is undefined for graphs with at most two vertices.
    MaxLeafUndefined { order: usize },
    /// An enumeration-only oracle was asked about a graph above its size cap.
    EnumerationCap { order: usize, max: usize },
    /// A family or product constructor got parameters outside its domain.
    InvalidParameter {
        what: &'static str,
        message: String,
    },
    /// A generalized corona was given the wrong number of attachment graphs.
    OperandCountMismatch { expected: usize, got: usize },
    /// A rooted-product root index is not a vertex of the rooted graph.
    RootOutOfRange { root: usize, order: usize },
    /// The input to a tree-only formula is not a tree on >= 3 vertices.
    NotATree,
    /// A constructive witness failed its own verification; surfaced rather
    /// than silently ignored.
    WitnessVerificationFailed { p: usize, q: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::TooManyVertices { order, max } => {
                write!(f, "order {order} exceeds the supported maximum {max}")
            }
            Error::DisconnectedGraph => write!(f, "graph is not connected"),
            Error::EmptyGraph => write!(f, "graph has no vertices"),
            Error::BudgetExceeded {
                candidates_checked,
                best_upper_bound,
            } => {
                write!(f, "budget exceeded after {candidates_checked} candidates")?;
                match best_upper_bound {
                    Some(ub) => write!(f, " (best upper bound so far: {ub})"),
                    None => write!(f, " (no feasible set found yet)"),
                }
            }
            Error::MaxLeafUndefined { order } => {
                write!(f, "max-leaf number undefined for order {order} (need n > 2)")
            }
            Error::EnumerationCap { order, max } => {
                write!(f, "enumeration oracle capped at order {max}, got {order}")
            }
            Error::InvalidParameter { what, message } => {
                write!(f, "invalid parameter for {what}: {message}")
            }
            Error::OperandCountMismatch { expected, got } => {
                write!(f, "expected {expected} attachment graphs, got {got}")
            }
            Error::RootOutOfRange { root, order } => {
                write!(f, "root {root} out of range for graph of order {order}")
            }
            Error::NotATree => write!(f, "input is not a tree on at least 3 vertices"),
            Error::WitnessVerificationFailed { p, q } => {
                write!(f, "constructed witness for the {p} x {q} grid failed verification")
            }
        }
    }
}

impl core::error::Error for Error {}
