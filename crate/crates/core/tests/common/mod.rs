#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slp_edit::verify::random_scheme;
use slp_edit::ScoringScheme;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn text(rng: &mut impl Rng, alphabet: &[u8], len: usize) -> Vec<u8> {
    (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()
}

/// Random text with a length drawn from `lens`.
pub fn text_in(rng: &mut impl Rng, alphabet: &[u8], lens: std::ops::Range<usize>) -> Vec<u8> {
    let len = rng.gen_range(lens);
    text(rng, alphabet, len)
}

/// Levenshtein or a random 0..=9 scheme, evenly.
pub fn scheme(rng: &mut impl Rng, alphabet: &[u8]) -> ScoringScheme {
    if rng.gen_bool(0.5) {
        ScoringScheme::levenshtein(alphabet).unwrap()
    } else {
        random_scheme(rng, alphabet)
    }
}

/// Random Monge matrix: negated 2-D prefix sums of non-negative weights plus
/// arbitrary row and column offsets.
pub fn monge(rng: &mut impl Rng, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            let w = if rng.gen_bool(0.3) { 0 } else { rng.gen_range(0..4) };
            let up = if i > 0 { m[i - 1][j] } else { 0 };
            let left = if j > 0 { m[i][j - 1] } else { 0 };
            let diag = if i > 0 && j > 0 { m[i - 1][j - 1] } else { 0 };
            m[i][j] = up + left - diag - w;
        }
    }
    let row_off: Vec<i64> = (0..rows).map(|_| rng.gen_range(-50..50)).collect();
    let col_off: Vec<i64> = (0..cols).map(|_| rng.gen_range(-50..50)).collect();
    for i in 0..rows {
        for j in 0..cols {
            m[i][j] += row_off[i] + col_off[j];
        }
    }
    m
}

/// Reference edit distance by exhaustive recursion with memoisation over
/// suffix pairs, written independently of the library's DP.
pub fn reference_distance(a: &[u8], b: &[u8], s: &ScoringScheme) -> u64 {
    use slp_edit::OpKind;
    let cost = |k, x: u8, y: Option<u8>| s.cost(k, x, y).unwrap().value().unwrap();
    let mut memo = std::collections::HashMap::new();
    fn go(
        i: usize,
        j: usize,
        a: &[u8],
        b: &[u8],
        cost: &dyn Fn(OpKind, u8, Option<u8>) -> u64,
        memo: &mut std::collections::HashMap<(usize, usize), u64>,
    ) -> u64 {
        if let Some(&v) = memo.get(&(i, j)) {
            return v;
        }
        let v = match (i == a.len(), j == b.len()) {
            (true, true) => 0,
            (true, false) => cost(OpKind::Insert, b[j], None) + go(i, j + 1, a, b, cost, memo),
            (false, true) => cost(OpKind::Delete, a[i], None) + go(i + 1, j, a, b, cost, memo),
            (false, false) => (cost(OpKind::Delete, a[i], None) + go(i + 1, j, a, b, cost, memo))
                .min(cost(OpKind::Insert, b[j], None) + go(i, j + 1, a, b, cost, memo))
                .min(cost(OpKind::Substitute, a[i], Some(b[j])) + go(i + 1, j + 1, a, b, cost, memo)),
        };
        memo.insert((i, j), v);
        v
    }
    go(0, 0, a, b, &cost, &mut memo)
}
