use thiserror::Error;

/// Errors reported by the counting and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A backtracking request was larger than the configured cell budget.
    /// The transfer-matrix route handles larger boards.
    #[error(
        "{rows}x{cols} board ({} cells) exceeds the backtracking limit of {limit} cells; \
         use the transfer method for boards this large",
        rows * cols
    )]
    CellLimitExceeded {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    /// A partition-matrix request was larger than the configured per-side guard.
    #[error(
        "partition matrix for a {rows}x{cols} block exceeds the per-side limit of {limit}; \
         use the transfer method instead"
    )]
    PartitionLimitExceeded {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    /// A transfer-matrix request had more rows than the configured guard.
    #[error("transfer matrix for {rows} rows exceeds the limit of {limit} rows")]
    TransferLimitExceeded { rows: usize, limit: usize },

    /// Matrix product with incompatible shapes.
    #[error("cannot multiply a {lhs_rows}x{lhs_cols} matrix by a {rhs_rows}x{rhs_cols} matrix")]
    ShapeMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// A dimension pair outside the domain of the requested formula or recipe.
    #[error("no {what} for a {rows}x{cols} board")]
    OutOfDomain {
        what: &'static str,
        rows: usize,
        cols: usize,
    },

    /// Grid construction with a tile list that does not fill the board.
    #[error("expected {expected} tiles for a {rows}x{cols} board, got {got}")]
    TileCountMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    /// Boundary requirement lists whose lengths do not match the board.
    #[error("boundary side lengths do not match a {rows}x{cols} board")]
    BoundaryMismatch { rows: usize, cols: usize },

    /// An operation that requires a suitably connected grid was given one
    /// with a mismatched interior edge.
    #[error("grid is not suitably connected")]
    NotSuitablyConnected,

    /// A requirement pair that can never be satisfied.
    #[error("constraint forbids both edges carrying connection points, but both are must-o")]
    ContradictoryConstraint,

    /// A connection word that does not fit where it was used.
    #[error("invalid word: {reason}")]
    InvalidWord { reason: String },

    /// A custom tile table whose signature multiset breaks the 1/6/4 split.
    #[error("tile table must contain the blank signature once, each two-point signature once, and the four-point signature four times")]
    InvalidTileTable,

    /// Text that does not parse back into a grid.
    #[error("cannot parse mosaic text: {reason}")]
    AsciiParse { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
