//! Encode a text three ways and print the grammar sizes.
//!
//! cargo run --example compress -- "some text to compress"

use slp_edit::slp::serialize_slp;
use slp_edit::{slp_from_lz78, slp_from_rle, slp_from_text};

fn main() -> slp_edit::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "abracadabra".repeat(20));
    let text = text.as_bytes();
    for (name, slp) in
        [("naive", slp_from_text(text)?), ("lz78", slp_from_lz78(text)?), ("rle", slp_from_rle(text)?)]
    {
        assert_eq!(slp.expand()?, text);
        println!(
            "{name:>6}: n={} N={} depth={} ratio={:.2}",
            slp.size(),
            slp.len(),
            slp.depth(),
            slp.len() as f64 / slp.size() as f64
        );
    }
    println!("\n{}", serialize_slp(&slp_from_rle(b"aaaabbb")?));
    Ok(())
}
