//! Build, merge and apply DIST tables for short strings.

use slp_edit::dist::{build_dist_direct, merge_horizontal, propagate};
use slp_edit::{Cost, ScoringScheme};

fn main() -> slp_edit::Result<()> {
    let s = ScoringScheme::levenshtein(b"abc")?;
    let left = build_dist_direct(b"abc", b"ca", &s)?;
    let right = build_dist_direct(b"abc", b"b", &s)?;
    println!("DIST(abc, ca):\n{}", left.dump());
    let merged = merge_horizontal(&left, &right)?;
    assert_eq!(merged, build_dist_direct(b"abc", b"cab", &s)?);
    println!("DIST(abc, cab) by merge:\n{}", merged.dump());

    // boundary of the whole grid: first column bottom-up, then first row
    let inputs: Vec<Cost> = [3, 2, 1, 0, 1, 2, 3].into_iter().map(Cost::finite).collect();
    let outputs = propagate(&merged, &inputs)?;
    println!("edit distance abc -> cab = {}", outputs[3]);
    Ok(())
}
