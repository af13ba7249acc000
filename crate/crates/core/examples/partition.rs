//! Cover two grammars by pieces of length about x and print the plan.

use slp_edit::gen::fibonacci_with;
use slp_edit::make_partition_plan;

fn main() -> slp_edit::Result<()> {
    let a = fibonacci_with(14, b'b', b'a')?;
    let b = fibonacci_with(13, b'a', b'b')?;
    for x in [4, 16, 64] {
        let plan = make_partition_plan(&a, &b, x)?;
        println!(
            "x={x:>3}: y_a={:>4} y_b={:>4} blocks={:>6} distinct pairs={:>3}",
            plan.y_a(),
            plan.y_b(),
            plan.block_count(),
            plan.distinct_pairs()
        );
    }
    let plan = make_partition_plan(&a, &b, 64)?;
    print!("{}", plan.to_csv().lines().take(8).collect::<Vec<_>>().join("\n"));
    println!();
    Ok(())
}
