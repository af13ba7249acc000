mod common;

use std::cell::Cell;

use rand::Rng;
use slp_edit::smawk::{column_minima, row_minima, scan_column_minima, scan_row_minima, FnMatrix};

#[test]
fn random_monge_matches_scan() {
    let mut rng = common::rng(11);
    for _ in 0..150 {
        let rows = rng.gen_range(1..120);
        let cols = rng.gen_range(1..120);
        let m = common::monge(&mut rng, rows, cols);
        let view = FnMatrix::new(rows, cols, |r: usize, c: usize| m[r][c]);
        assert_eq!(column_minima(&view), scan_column_minima(&view));
        assert_eq!(row_minima(&view), scan_row_minima(&view));
    }
}

#[test]
fn query_count_is_linear() {
    let mut rng = common::rng(12);
    for side in [64, 100, 256, 511] {
        let m = common::monge(&mut rng, side, side);
        let calls = Cell::new(0u64);
        let view = FnMatrix::new(side, side, |r: usize, c: usize| {
            calls.set(calls.get() + 1);
            m[r][c]
        });
        column_minima(&view);
        assert!(calls.get() <= 10 * 2 * side as u64, "side {side}: {} queries", calls.get());
    }
}

#[test]
fn wide_and_tall() {
    let mut rng = common::rng(13);
    for (rows, cols) in [(1, 300), (300, 1), (3, 200), (200, 3)] {
        let m = common::monge(&mut rng, rows, cols);
        let view = FnMatrix::new(rows, cols, |r: usize, c: usize| m[r][c]);
        assert_eq!(column_minima(&view), scan_column_minima(&view));
        assert_eq!(row_minima(&view), scan_row_minima(&view));
    }
}
