//! Benchmark and test input generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::slp::{slp_from_lz78, Slp, SlpBuilder};

/// Fibonacci word SLP of order `k >= 1` with `k` rules:
/// `F1 = first`, `F2 = second`, `Fk = F(k-1) F(k-2)`.
///
/// `fibonacci_with(k, b'b', b'a')` is the standard word `abaababa...`.
pub fn fibonacci_with(k: u32, first: u8, second: u8) -> Result<Slp> {
    if k == 0 || k > 90 {
        return Err(Error::Invalid(format!("fibonacci order {k} out of range 1..=90")));
    }
    if first == second {
        return Err(Error::Invalid("fibonacci terminals must differ".into()));
    }
    let mut b = SlpBuilder::new();
    let f1 = b.terminal(first);
    if k == 1 {
        return Ok(b.finish(f1)?);
    }
    let mut prev = f1;
    let mut cur = b.terminal(second);
    for _ in 3..=k {
        let next = b.concat(cur, prev);
        prev = cur;
        cur = next;
    }
    Ok(b.finish(cur)?)
}

pub fn fibonacci(k: u32) -> Result<Slp> {
    fibonacci_with(k, b'b', b'a')
}

/// `a^len` by repeated doubling: one rule per power of two up to the
/// highest set bit, plus one rule per additional set bit.
pub fn power(symbol: u8, len: u64) -> Result<Slp> {
    if len == 0 {
        return Err(Error::EmptyInput);
    }
    let mut b = SlpBuilder::new();
    let mut powers = vec![b.terminal(symbol)];
    for _ in 1..(64 - len.leading_zeros()) {
        let last = *powers.last().unwrap();
        powers.push(b.concat(last, last));
    }
    let mut acc = None;
    for bit in (0..powers.len()).rev() {
        if len >> bit & 1 == 1 {
            acc = Some(match acc {
                None => powers[bit],
                Some(v) => b.concat(v, powers[bit]),
            });
        }
    }
    Ok(b.finish(acc.unwrap())?)
}

/// `motif` repeated `reps` times, encoded with LZ78.
pub fn motif(motif: &[u8], reps: usize) -> Result<Slp> {
    if motif.is_empty() || reps == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(slp_from_lz78(&motif.repeat(reps))?)
}

/// Uniform random text over `alphabet`.
pub fn random_text(len: usize, alphabet: &[u8], seed: u64) -> Result<Vec<u8>> {
    if alphabet.is_empty() {
        return Err(Error::Invalid("empty alphabet".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect())
}

/// The first `size` letters of `acgt` followed by the rest of the lowercase
/// and uppercase Latin alphabet.
pub fn alphabet(size: usize) -> Result<Vec<u8>> {
    const LETTERS: &[u8] = b"acgtbdefhijklmnopqrsuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if size == 0 || size > LETTERS.len() {
        return Err(Error::Invalid(format!("alphabet size {size} out of range 1..={}", LETTERS.len())));
    }
    Ok(LETTERS[..size].to_vec())
}
