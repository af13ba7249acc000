//! Edit distance between strings that are given as straight-line programs
//! (SLPs), computed without expanding the full dynamic-programming grid.
//!
//! The grid of the classic edit-distance recurrence is tiled into blocks
//! whose row and column substrings are each generated by a single grammar
//! variable. Every distinct pair of variables gets one [`DistTable`]
//! (boundary-to-boundary shortest paths), built recursively by Monge
//! min-plus merges. Values then flow from block to block through the
//! boundaries, each block costing a linear number of [`smawk`] queries.
//!
//! The crate also ships:
//!
//! * a Four-Russians variant over fixed-length chunks of raw strings
//!   ([`four_russians_distance`]),
//! * the quadratic row-rolling oracle ([`naive_edit_distance`]),
//! * encoders from raw text, LZ78 and run-length parses into SLPs,
//! * the text formats for SLPs and scoring schemes.
//!
//! ```
//! use slp_edit::{block_edit_distance, slp_from_lz78, BlockConfig, ScoringScheme};
//!
//! let scheme = ScoringScheme::levenshtein(b"ab").unwrap();
//! let a = slp_from_lz78(b"abababababab").unwrap();
//! let b = slp_from_lz78(b"abababbabababa").unwrap();
//! let (distance, stats) = block_edit_distance(&a, &b, &scheme, &BlockConfig::default()).unwrap();
//! assert_eq!(distance.value(), Some(2));
//! assert!(stats.tables_built <= stats.n_a * stats.n_b);
//! ```

pub mod bench;
pub mod commands;
pub mod cost;
pub mod dist;
pub mod engine;
pub mod error;
pub mod gen;
pub mod partition;
pub mod scoring;
pub mod slp;
pub mod smawk;
pub mod verify;

pub use cost::Cost;
pub use dist::DistTable;
pub use engine::{
    block_edit_distance, choose_x, four_russians_distance, naive_edit_distance, BlockConfig, BuildStrategy,
    Repository, RepositoryMode, RunStats, XMode,
};
pub use error::{Error, Result};
pub use partition::{cover_string, make_partition_plan, CoverPiece, PartitionPlan};
pub use scoring::{OpKind, ScoringScheme};
pub use slp::{slp_from_lz78, slp_from_rle, slp_from_text, Rule, Slp, VarId};
