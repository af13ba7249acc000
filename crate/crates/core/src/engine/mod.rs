//! End-to-end distance computations.

mod block;
mod four_russians;
mod naive;
mod params;
mod repository;

pub use block::{block_edit_distance, BlockConfig};
pub use four_russians::four_russians_distance;
pub use naive::naive_edit_distance;
pub use params::{choose_x, four_russians_x, XMode};
pub use repository::{
    build_content_repository, build_repository, BuildStrategy, RepoKey, Repository, RepositoryMode,
};

use crate::cost::Cost;

/// Instrumentation of a single distance computation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunStats {
    pub distance: Cost,
    pub n_a: usize,
    pub n_b: usize,
    pub len_a: u64,
    pub len_b: u64,
    pub x: u64,
    pub y_a: usize,
    pub y_b: usize,
    /// All tables constructed, including intermediate merge results.
    pub tables_built: usize,
    /// Distinct tables referenced by the partition's blocks.
    pub repository_keys: usize,
    pub merge_ops: u64,
    pub smawk_queries: u64,
    /// DP cells of direct constructions, entries of merged tables, and
    /// boundary values produced by the sweep.
    pub dp_cells_touched: u64,
    pub wall_millis: f64,
}

/// [`naive_edit_distance`] with timing and the cell count filled in.
pub fn naive_with_stats(
    a: &[u8],
    b: &[u8],
    scheme: &crate::scoring::ScoringScheme,
) -> crate::error::Result<(Cost, RunStats)> {
    let started = std::time::Instant::now();
    let distance = naive_edit_distance(a, b, scheme)?;
    let stats = RunStats {
        distance,
        len_a: a.len() as u64,
        len_b: b.len() as u64,
        dp_cells_touched: a.len() as u64 * b.len() as u64,
        wall_millis: started.elapsed().as_secs_f64() * 1e3,
        ..Default::default()
    };
    Ok((distance, stats))
}
