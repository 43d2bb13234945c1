//! Exact enumeration of knot mosaics.
//!
//! A mosaic is a rectangular board of the eleven standard tiles; it
//! represents a knot or link diagram when side-by-side tiles agree about
//! the connection point on every shared edge and the outer boundary is
//! blank. This crate counts such boards exactly, three independent ways:
//!
//! * constrained backtracking over whole boards ([`grid`]),
//! * partition matrices over boundary connection words, composed by
//!   multiplication and entrywise squaring ([`partition`]),
//! * a column transfer matrix whose powers count arbitrary widths
//!   ([`transfer`]), together with closed forms for up to three rows and
//!   exact-rational growth bounds.
//!
//! All routes agree wherever they overlap; [`verify`] packages the full
//! cross-check suite. Counts are unbounded integers throughout.

pub mod ascii;
pub mod error;
pub mod grid;
pub mod partition;
pub mod report;
pub mod tiles;
pub mod transfer;
pub mod verify;
pub mod word;

pub use ascii::{parse_ascii, render_ascii};
pub use error::{Error, Result};
pub use grid::{
    count_constrained, count_constrained_with, enumerate_constrained, is_knot_mosaic,
    is_suitably_connected, q33_center_class_counts, q33_center_word_counts, twofold_extensions,
    type_counts, BoundarySpec, CenterClassCounts, MosaicGrid, SearchOptions, DEFAULT_CELL_LIMIT,
};
pub use partition::{
    d_via_partition, entrywise_square, grand_sum, multiply, partition_matrix, CountMatrix,
    PartitionMatrix, DEFAULT_PARTITION_LIMIT,
};
pub use report::{CountReport, Method};
pub use tiles::{Edge, EdgeConstraint, Signature, Tile, TileId, TileSet};
pub use transfer::{
    bounds, closed_form_d, column_transfer_matrix, knot_count_transfer, TransferMatrix,
    DEFAULT_TRANSFER_LIMIT,
};
pub use word::{EdgeRequirement, EdgeState, EdgeWord};
