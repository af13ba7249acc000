/// How to pick the block width `x` when none is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum XMode {
    /// Balances an O(n²x²) merge-built repository against the O(N·nN/x)
    /// sweep: `x = (N²/n)^(1/3)`.
    #[default]
    MergeRepo,
    /// Same balance for O(n²x³) direct construction: `x = (N²/n)^(1/4)`.
    DirectRepo,
    /// `x = N^(2/3) / (n lg N)^(1/3)`, tuned for arbitrary scoring.
    PaperArbitrary,
    /// `x = N^0.8 / n^0.4`, tuned for rational scoring with fast merges.
    PaperRational,
}

/// Block width for grammars of sizes `n_a`, `n_b` generating strings of
/// lengths `len_a`, `len_b`, clamped to `[1, max(len_a, len_b)]`.
pub fn choose_x(n_a: usize, n_b: usize, len_a: u64, len_b: u64, mode: XMode) -> u64 {
    let n = n_a.max(n_b).max(1) as f64;
    let big_n = len_a.max(len_b).max(1);
    let nn = big_n as f64;
    let raw = match mode {
        XMode::MergeRepo => (nn * nn / n).cbrt(),
        XMode::DirectRepo => (nn * nn / n).sqrt().sqrt(),
        XMode::PaperArbitrary => nn.powf(2.0 / 3.0) / (n * nn.log2().max(1.0)).cbrt(),
        XMode::PaperRational => nn.powf(0.8) / n.powf(0.4),
    };
    // absorb rounding noise on exact powers before taking the ceiling
    let x = (raw - 1e-9).ceil();
    if x.is_nan() || x < 1.0 {
        1
    } else {
        (x as u64).min(big_n)
    }
}

/// Four-Russians chunk length: the largest `x` with `σ^(2x) <= N`, at
/// least 1. A unary alphabet is treated as binary.
pub fn four_russians_x(len: u64, alphabet_size: usize) -> u64 {
    let sigma = alphabet_size.max(2) as u128;
    let mut x = 0u64;
    let mut power = 1u128;
    while power * sigma * sigma <= len as u128 {
        power *= sigma * sigma;
        x += 1;
    }
    x.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_repo_example() {
        // (65536² / 64)^(1/3) = 2^(26/3) ≈ 406.37
        assert_eq!(choose_x(64, 64, 65536, 65536, XMode::MergeRepo), 407);
        assert_eq!(choose_x(64, 1, 64, 1, XMode::MergeRepo), 4);
    }

    #[test]
    fn paper_rational_example() {
        // 2^16 / 2^2.4 = 2^13.6 ≈ 12416.75
        assert_eq!(choose_x(64, 64, 1 << 20, 1 << 20, XMode::PaperRational), 12417);
    }

    #[test]
    fn clamps() {
        assert_eq!(choose_x(1000, 1000, 10, 10, XMode::DirectRepo), 1);
        assert_eq!(choose_x(1, 1, 1, 1, XMode::MergeRepo), 1);
        // 5^0.8 ≈ 3.62
        assert_eq!(choose_x(1, 1, 5, 3, XMode::PaperRational), 4);
        assert_eq!(choose_x(1, 1, 2, 2, XMode::MergeRepo), 2);
        for mode in [XMode::MergeRepo, XMode::DirectRepo, XMode::PaperArbitrary, XMode::PaperRational] {
            for (n, len) in [(1, 1), (5, 3), (300, 300), (10, 100000)] {
                let x = choose_x(n, n, len, len, mode);
                assert!((1..=len).contains(&x), "{mode:?} n={n} N={len} x={x}");
            }
        }
    }

    #[test]
    fn four_russians_default() {
        assert_eq!(four_russians_x(65536, 4), 4);
        assert_eq!(four_russians_x(4096, 4), 3);
        assert_eq!(four_russians_x(32768, 4), 3);
        assert_eq!(four_russians_x(3, 4), 1);
        assert_eq!(four_russians_x(1 << 20, 2), 10);
        assert_eq!(four_russians_x(100, 1), 3);
    }
}
