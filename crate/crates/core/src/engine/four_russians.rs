use std::time::Instant;

use super::block::sweep;
use super::params::four_russians_x;
use super::repository::build_content_repository;
use super::RunStats;
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::scoring::ScoringScheme;

/// Edit distance over fixed-length chunks of the raw strings.
///
/// Both strings are cut into consecutive chunks of `x` symbols (the last
/// chunk may be shorter). Over an alphabet of size σ there are at most
/// σ^x distinct chunks, so with the default `x = ⌊½ log_σ N⌋` the
/// repository holds O(N) small tables, each built directly, and the sweep
/// costs O(N²/x). Works for any integer scoring scheme.
pub fn four_russians_distance(
    a: &[u8],
    b: &[u8],
    scheme: &ScoringScheme,
    x: Option<u64>,
) -> Result<(Cost, RunStats)> {
    let started = Instant::now();
    let longest = a.len().max(b.len()) as u64;
    let x = x.unwrap_or_else(|| four_russians_x(longest, scheme.alphabet_size()));
    if x == 0 {
        return Err(Error::XOutOfRange { x: 0, max: longest as usize });
    }
    let mut stats = RunStats { len_a: a.len() as u64, len_b: b.len() as u64, x, ..Default::default() };
    if a.is_empty() || b.is_empty() {
        // no grid blocks: the distance is a plain sum of indels
        let d = super::naive_edit_distance(a, b, scheme)?;
        stats.distance = d;
        stats.wall_millis = started.elapsed().as_secs_f64() * 1e3;
        return Ok((d, stats));
    }
    scheme.path_bound(a.len(), b.len()).ok_or(Error::Overflow("four-russians distance"))?;
    let chunks_a: Vec<&[u8]> = a.chunks(x as usize).collect();
    let chunks_b: Vec<&[u8]> = b.chunks(x as usize).collect();
    let repo = build_content_repository(&chunks_a, &chunks_b, scheme)?;
    let mut work = repo.work();
    let distance = sweep(&repo, scheme, &mut work)?;
    stats.distance = distance;
    stats.y_a = chunks_a.len();
    stats.y_b = chunks_b.len();
    stats.tables_built = repo.tables_built();
    stats.repository_keys = repo.len();
    stats.smawk_queries = work.smawk_queries;
    stats.dp_cells_touched = work.dp_cells;
    stats.wall_millis = started.elapsed().as_secs_f64() * 1e3;
    Ok((distance, stats))
}
