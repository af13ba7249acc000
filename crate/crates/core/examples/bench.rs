//! Small Fibonacci-word scaling run written as CSV to stdout.

use slp_edit::bench::{fib_scaling, write_csv};

fn main() -> slp_edit::Result<()> {
    let records = fib_scaling(14..=20, 20, |r| eprintln!("{} N={} done", r.algo, r.len_a))?;
    write_csv(std::io::stdout().lock(), &records)?;
    Ok(())
}
