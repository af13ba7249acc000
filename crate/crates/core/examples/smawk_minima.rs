//! Column minima of an implicit Monge matrix with a query counter.

use std::cell::Cell;

use slp_edit::smawk::{column_minima, scan_column_minima, FnMatrix};

fn main() {
    let n = 2000;
    let queries = Cell::new(0u64);
    // (r - c)^2 plus a row offset is Monge
    let m = FnMatrix::new(n, n, |r: usize, c: usize| {
        queries.set(queries.get() + 1);
        let d = r as i64 - 3 * c as i64 / 2;
        d * d + (r as i64 % 7)
    });
    let fast = column_minima(&m);
    let smawk_queries = queries.replace(0);
    let slow = scan_column_minima(&m);
    assert_eq!(fast, slow);
    println!("{n}x{n}: smawk {smawk_queries} queries, scan {}", queries.get());
    for c in [0, n / 2, n - 1] {
        println!("column {c}: min {} at row {}", fast[c].value, fast[c].index);
    }
}
