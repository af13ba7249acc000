//! Size ladders that run the algorithms one after another and record
//! their counters as CSV.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use crate::cost::Cost;
use crate::engine::{block_edit_distance, four_russians_distance, naive_with_stats, BlockConfig, RunStats};
use crate::error::Result;
use crate::gen::{fibonacci_with, random_text};
use crate::scoring::ScoringScheme;

pub const CSV_HEADER: &str =
    "algo,N_a,N_b,n_a,n_b,x,y,distance,tables_built,dp_cells,smawk_queries,wall_millis";

/// One algorithm run. `y` is the larger of the two piece counts.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algo: String,
    pub len_a: u64,
    pub len_b: u64,
    pub n_a: usize,
    pub n_b: usize,
    pub x: u64,
    pub y: usize,
    pub distance: Cost,
    pub tables_built: usize,
    pub dp_cells: u64,
    pub smawk_queries: u64,
    pub wall_millis: f64,
}

impl BenchRecord {
    pub fn from_stats(algo: &str, stats: &RunStats) -> Self {
        BenchRecord {
            algo: algo.to_string(),
            len_a: stats.len_a,
            len_b: stats.len_b,
            n_a: stats.n_a,
            n_b: stats.n_b,
            x: stats.x,
            y: stats.y_a.max(stats.y_b),
            distance: stats.distance,
            tables_built: stats.tables_built,
            dp_cells: stats.dp_cells_touched,
            smawk_queries: stats.smawk_queries,
            wall_millis: stats.wall_millis,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{:.3}",
            self.algo,
            self.len_a,
            self.len_b,
            self.n_a,
            self.n_b,
            self.x,
            self.y,
            self.distance,
            self.tables_built,
            self.dp_cells,
            self.smawk_queries,
            self.wall_millis
        )
    }
}

pub fn write_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    FibScaling,
    FrScaling,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fib-scaling" => Ok(Suite::FibScaling),
            "fr-scaling" => Ok(Suite::FrScaling),
            _ => Err(format!("unknown suite {s:?} (expected fib-scaling or fr-scaling)")),
        }
    }
}

/// Fibonacci word of order `k` against the same word with its two letters
/// exchanged, for each `k` in `orders`: block mode always, naive DP while
/// `k <= naive_max`.
pub fn fib_scaling(
    orders: RangeInclusive<u32>,
    naive_max: u32,
    mut sink: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>> {
    let scheme = ScoringScheme::levenshtein(b"ab")?;
    let mut records = Vec::new();
    let mut push = |r: BenchRecord, records: &mut Vec<BenchRecord>| {
        sink(&r);
        records.push(r);
    };
    for k in orders {
        let a = fibonacci_with(k, b'b', b'a')?;
        let b = fibonacci_with(k, b'a', b'b')?;
        let (_, stats) = block_edit_distance(&a, &b, &scheme, &BlockConfig::default())?;
        push(BenchRecord::from_stats("block", &stats), &mut records);
        if k <= naive_max {
            let (ta, tb) = (a.expand()?, b.expand()?);
            let (_, mut stats) = naive_with_stats(&ta, &tb, &scheme)?;
            stats.n_a = a.size();
            stats.n_b = b.size();
            push(BenchRecord::from_stats("naive", &stats), &mut records);
        }
    }
    Ok(records)
}

/// Random 4-letter strings of length `2^e` for each `e` in `log_lens`:
/// naive DP and Four-Russians with the default chunk length.
pub fn fr_scaling(
    log_lens: RangeInclusive<u32>,
    seed: u64,
    mut sink: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>> {
    let scheme = ScoringScheme::levenshtein(b"acgt")?;
    let mut records = Vec::new();
    for e in log_lens {
        let len = 1usize << e;
        let a = random_text(len, b"acgt", seed.wrapping_add(2 * e as u64))?;
        let b = random_text(len, b"acgt", seed.wrapping_add(2 * e as u64 + 1))?;
        let (_, stats) = naive_with_stats(&a, &b, &scheme)?;
        let r = BenchRecord::from_stats("naive", &stats);
        sink(&r);
        records.push(r);
        let (_, stats) = four_russians_distance(&a, &b, &scheme, None)?;
        let r = BenchRecord::from_stats("four-russians", &stats);
        sink(&r);
        records.push(r);
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_is_stable() {
        assert_eq!(
            CSV_HEADER,
            "algo,N_a,N_b,n_a,n_b,x,y,distance,tables_built,dp_cells,smawk_queries,wall_millis"
        );
    }

    #[test]
    fn small_ladders_agree() {
        let fib = fib_scaling(8..=12, 12, |_| {}).unwrap();
        assert_eq!(fib.len(), 10);
        for pair in fib.chunks(2) {
            assert_eq!(pair[0].distance, pair[1].distance);
            assert_eq!(pair[0].len_a, pair[1].len_a);
        }
        assert!(fib.windows(2).all(|w| w[0].len_a <= w[1].len_a));
        let fr = fr_scaling(6..=8, 3, |_| {}).unwrap();
        for pair in fr.chunks(2) {
            assert_eq!(pair[0].distance, pair[1].distance);
        }
    }
}
