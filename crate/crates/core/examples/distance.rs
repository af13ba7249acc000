//! Block edit distance between two compressed strings, checked against
//! the quadratic DP.

use slp_edit::gen::{fibonacci_with, motif};
use slp_edit::{block_edit_distance, naive_edit_distance, BlockConfig, ScoringScheme, XMode};

fn main() -> slp_edit::Result<()> {
    let scheme = ScoringScheme::parse("alphabet ab\ndefault_indel 2\ndefault_sub 3\nsub a b 1\n")?;
    let a = fibonacci_with(18, b'b', b'a')?;
    let b = fibonacci_with(18, b'a', b'b')?;
    let expected = naive_edit_distance(&a.expand()?, &b.expand()?, &scheme)?;
    for mode in [XMode::MergeRepo, XMode::DirectRepo, XMode::PaperRational] {
        let cfg = BlockConfig { x_mode: Some(mode), ..Default::default() };
        let (d, stats) = block_edit_distance(&a, &b, &scheme, &cfg)?;
        assert_eq!(d, expected);
        println!(
            "{mode:?}: distance {d} x={} blocks={}x{} tables={} cells={} ({:.1} ms)",
            stats.x, stats.y_a, stats.y_b, stats.tables_built, stats.dp_cells_touched, stats.wall_millis
        );
    }

    let levenshtein = ScoringScheme::levenshtein(b"acgt")?;
    let a = motif(b"acgtt", 400)?;
    let b = motif(b"acgt", 500)?;
    let (d, stats) = block_edit_distance(&a, &b, &levenshtein, &BlockConfig::with_x(8))?;
    println!("(acgtt)^400 vs (acgt)^500: {d} with {} tables", stats.tables_built);
    Ok(())
}
