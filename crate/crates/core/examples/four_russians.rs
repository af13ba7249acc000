//! Four-Russians chunking on random DNA against the row-rolling DP.

use slp_edit::engine::{four_russians_x, naive_with_stats};
use slp_edit::gen::random_text;
use slp_edit::{four_russians_distance, ScoringScheme};

fn main() -> slp_edit::Result<()> {
    let scheme = ScoringScheme::levenshtein(b"acgt")?;
    for log in 8..=12 {
        let len = 1usize << log;
        let a = random_text(len, b"acgt", 2 * log as u64)?;
        let b = random_text(len, b"acgt", 2 * log as u64 + 1)?;
        let (d, fr) = four_russians_distance(&a, &b, &scheme, None)?;
        let (e, naive) = naive_with_stats(&a, &b, &scheme)?;
        assert_eq!(d, e);
        println!(
            "N={len:>5} x={} keys={:>4} distance={d:>5} four-russians {:>8.1} ms naive {:>8.1} ms",
            four_russians_x(len as u64, 4),
            fr.repository_keys,
            fr.wall_millis,
            naive.wall_millis
        );
    }
    Ok(())
}
