use std::time::Instant;

use super::params::{choose_x, XMode};
use super::repository::{build_repository, BuildStrategy, Repository};
use super::RunStats;
use crate::cost::Cost;
use crate::dist::{propagate_into, WorkCounters};
use crate::error::{Error, Result};
use crate::partition::make_partition_plan;
use crate::scoring::ScoringScheme;
use crate::slp::Slp;

#[derive(Debug, Clone, Default)]
pub struct BlockConfig {
    /// Block width; chosen by `x_mode` when absent.
    pub x: Option<u64>,
    /// Defaults to `MergeRepo` for the merge strategy and `DirectRepo` for
    /// direct construction.
    pub x_mode: Option<XMode>,
    pub strategy: BuildStrategy,
}

impl BlockConfig {
    pub fn with_x(x: u64) -> Self {
        BlockConfig { x: Some(x), ..Default::default() }
    }

    pub fn resolve_x(&self, a: &Slp, b: &Slp) -> u64 {
        self.x.unwrap_or_else(|| {
            let mode = self.x_mode.unwrap_or(match self.strategy {
                BuildStrategy::RecursiveMerge => XMode::MergeRepo,
                BuildStrategy::Direct => XMode::DirectRepo,
            });
            choose_x(a.size(), b.size(), a.len(), b.len(), mode)
        })
    }
}

/// Edit distance of the strings generated by two SLPs.
///
/// 1. build the repository of DIST tables for the partition;
/// 2. fill row 0 and column 0 of the grid from the base rules;
/// 3. sweep the blocks top-to-bottom, left-to-right, turning each block's
///    input boundary into its output boundary;
/// 4. report the bottom-right value.
pub fn block_edit_distance(
    a: &Slp,
    b: &Slp,
    scheme: &ScoringScheme,
    config: &BlockConfig,
) -> Result<(Cost, RunStats)> {
    let started = Instant::now();
    let x = config.resolve_x(a, b);
    scheme.path_bound(a.len() as usize, b.len() as usize).ok_or(Error::Overflow("block edit distance"))?;
    let plan = make_partition_plan(a, b, x)?;
    let repo = build_repository(a, b, &plan, scheme, config.strategy)?;
    let mut work = repo.work();
    let distance = sweep(&repo, scheme, &mut work)?;
    let stats = RunStats {
        distance,
        n_a: a.size(),
        n_b: b.size(),
        len_a: a.len(),
        len_b: b.len(),
        x,
        y_a: plan.y_a(),
        y_b: plan.y_b(),
        tables_built: repo.tables_built(),
        repository_keys: repo.len(),
        merge_ops: work.merges,
        smawk_queries: work.smawk_queries,
        dp_cells_touched: work.dp_cells,
        wall_millis: started.elapsed().as_secs_f64() * 1e3,
    };
    Ok((distance, stats))
}

/// Pushes boundary values through every block of `repo` and returns the
/// value of the bottom-right grid vertex.
///
/// Only the horizontal frontier (one full grid row) and the left column of
/// the current block are kept.
pub(crate) fn sweep(repo: &Repository, scheme: &ScoringScheme, work: &mut WorkCounters) -> Result<Cost> {
    let (ya, yb) = (repo.block_rows(), repo.block_cols());
    let symbol = |s: u8| scheme.symbol_index(s).expect("repository strings are in the alphabet") as u8;

    // row 0: insertions only
    let mut frontier = vec![0u64];
    for t in 0..yb {
        for &s in repo.block(0, t).col_str() {
            let last = *frontier.last().unwrap();
            frontier.push(last + scheme.ins_idx(symbol(s)));
        }
    }
    let mut frontier: Vec<Cost> = frontier.into_iter().map(Cost::finite).collect();

    let mut left: Vec<Cost> = Vec::new();
    let mut inputs: Vec<Cost> = Vec::new();
    let mut outputs: Vec<Cost> = Vec::new();
    for s in 0..ya {
        // column 0 of this block row: deletions only
        let rows = repo.block(s, 0).row_str();
        left.clear();
        left.push(frontier[0]);
        for &c in rows {
            let last = left.last().unwrap().value().unwrap();
            left.push(Cost::finite(last + scheme.del_idx(symbol(c))));
        }
        let mut col = 0;
        for t in 0..yb {
            let table = repo.block(s, t);
            let (p, q) = (table.p(), table.q());
            debug_assert_eq!(left.len(), p + 1);
            inputs.clear();
            inputs.extend(left.iter().rev());
            inputs.extend_from_slice(&frontier[col + 1..=col + q]);
            outputs.clear();
            outputs.resize(p + q + 1, Cost::ZERO);
            propagate_into(table, &inputs, &mut outputs, work)?;
            frontier[col..=col + q].copy_from_slice(&outputs[..=q]);
            // right column, bottom to top, becomes the next block's left column
            for r in 0..p {
                left[r] = outputs[p + q - r];
            }
            left[p] = outputs[q];
            work.dp_cells += (p + q + 1) as u64;
            col += q;
        }
    }
    Ok(*frontier.last().unwrap())
}
