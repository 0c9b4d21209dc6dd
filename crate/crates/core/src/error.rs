use thiserror::Error;

/// Everything that can go wrong while validating input or computing a region,
/// bound or spectrum. Indices carried by variants are 1-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { n: usize, row: usize, len: usize },

    #[error("matrix entry ({i}, {j}) is not finite")]
    NonFinite { i: usize, j: usize },

    #[error("negative entry at ({i}, {j}): {value}")]
    NegativeEntry { i: usize, j: usize, value: f64 },

    #[error("row {i} sums to {sum}, not 1")]
    RowSumViolation { i: usize, sum: f64 },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("order {n} is too small (need at least {min})")]
    OrderTooSmall { n: usize, min: usize },

    #[error("disc union has a center off the real axis")]
    ComplexCenters,

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is not regular (degrees {min}..{max})")]
    NotRegular { min: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("matrix is not symmetric: |a({i},{j}) - a({j},{i})| = {gap}")]
    NotSymmetric { i: usize, j: usize, gap: f64 },

    #[error("eigensolver did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("no eigenvalue within {tol} of 1")]
    PerronNotFound { tol: f64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// True for errors caused by the caller's input rather than by a numerical
    /// failure inside the library.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::NoConvergence { .. } | Error::PerronNotFound { .. }
        )
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
