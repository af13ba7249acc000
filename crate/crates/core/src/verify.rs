//! Randomized cross-checks of every distance routine against the naive DP.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{block_edit_distance, four_russians_distance, naive_edit_distance, BlockConfig};
use crate::error::Result;
use crate::gen::alphabet;
use crate::scoring::ScoringScheme;
use crate::slp::{slp_from_lz78, slp_from_rle, slp_from_text, Slp};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub cases: usize,
    pub seed: u64,
    /// Longest generated string.
    pub max_n: usize,
    pub alphabet_sizes: Vec<usize>,
    /// Block widths tried on every case; `None` stands for the automatic
    /// choice. Widths longer than both strings are skipped.
    pub widths: Vec<Option<u64>>,
    /// Adds 1 to every block result, to check that mismatches are caught.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cases: 500,
            seed: 1,
            max_n: 300,
            alphabet_sizes: vec![2, 4, 20],
            widths: vec![Some(2), Some(5), Some(17), None],
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoder {
    Naive,
    Lz78,
    Rle,
}

impl Encoder {
    pub const ALL: [Encoder; 3] = [Encoder::Naive, Encoder::Lz78, Encoder::Rle];

    pub fn name(self) -> &'static str {
        match self {
            Encoder::Naive => "naive",
            Encoder::Lz78 => "lz78",
            Encoder::Rle => "rle",
        }
    }

    pub fn encode(self, text: &[u8]) -> Result<Slp> {
        Ok(match self {
            Encoder::Naive => slp_from_text(text)?,
            Encoder::Lz78 => slp_from_lz78(text)?,
            Encoder::Rle => slp_from_rle(text)?,
        })
    }
}

/// One generated input pair.
#[derive(Debug, Clone)]
pub struct Case {
    pub index: usize,
    pub seed: u64,
    pub a: Vec<u8>,
    pub b: Vec<u8>,
    pub scheme: ScoringScheme,
    pub encoder: Encoder,
}

/// Random scheme over `alphabet`: costs drawn from 0..=9, identity
/// substitutions free.
pub fn random_scheme(rng: &mut impl Rng, alphabet: &[u8]) -> ScoringScheme {
    let k = alphabet.len();
    let del = (0..k).map(|_| rng.gen_range(0..=9)).collect();
    let ins = (0..k).map(|_| rng.gen_range(0..=9)).collect();
    let sub = (0..k * k).map(|i| if i / k == i % k { 0 } else { rng.gen_range(0..=9) }).collect();
    ScoringScheme::new(alphabet, del, ins, sub, 1).expect("well-formed tables")
}

/// Case `index` of a run seeded with `seed`; independent of the other cases.
pub fn generate_case(config: &VerifyConfig, index: usize) -> Result<Case> {
    let seed = config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = config.alphabet_sizes[rng.gen_range(0..config.alphabet_sizes.len())];
    let letters = alphabet(size)?;
    let scheme = if rng.gen_bool(0.3) {
        ScoringScheme::levenshtein(&letters)?
    } else {
        random_scheme(&mut rng, &letters)
    };
    let encoder = Encoder::ALL[rng.gen_range(0..3)];
    let text = |rng: &mut ChaCha8Rng| -> Vec<u8> {
        let len = rng.gen_range(1..=config.max_n.max(1));
        // mix uniform text with repetitive text so the grammars share structure
        if rng.gen_bool(0.5) {
            (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
        } else {
            let period = rng.gen_range(1..=8.min(len));
            let motif: Vec<u8> = (0..period).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
            let mut t: Vec<u8> = motif.iter().copied().cycle().take(len).collect();
            for _ in 0..rng.gen_range(0..4) {
                let at = rng.gen_range(0..len);
                t[at] = letters[rng.gen_range(0..letters.len())];
            }
            t
        }
    };
    let a = text(&mut rng);
    let b = text(&mut rng);
    Ok(Case { index, seed, a, b, scheme, encoder })
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub case: Case,
    pub run_seed: u64,
    pub algorithm: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.case;
        writeln!(f, "counterexample: run seed {} case {} (case seed {})", self.run_seed, c.index, c.seed)?;
        writeln!(f, "algorithm: {}", self.algorithm)?;
        writeln!(f, "expected: {}", self.expected)?;
        writeln!(f, "got: {}", self.got)?;
        writeln!(f, "encoder: {}", c.encoder.name())?;
        writeln!(f, "A ({}): {}", c.a.len(), String::from_utf8_lossy(&c.a))?;
        writeln!(f, "B ({}): {}", c.b.len(), String::from_utf8_lossy(&c.b))?;
        writeln!(f, "scheme:")?;
        write!(f, "{}", c.scheme.serialize())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub cases: usize,
    pub comparisons: usize,
    pub failure: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => writeln!(f, "ok: {} cases, {} comparisons, all equal", self.cases, self.comparisons),
            Some(c) => {
                writeln!(f, "FAILED after {} cases, {} comparisons", self.cases, self.comparisons)?;
                write!(f, "{c}")
            }
        }
    }
}

/// Runs the configured cases and stops at the first disagreement.
pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let mut comparisons = 0;
    for index in 0..config.cases {
        let case = generate_case(config, index)?;
        if let Some((algorithm, expected, got)) = check_case(&case, config, &mut comparisons)? {
            return Ok(VerifyReport {
                cases: index + 1,
                comparisons,
                failure: Some(Counterexample { case, run_seed: config.seed, algorithm, expected, got }),
            });
        }
    }
    Ok(VerifyReport { cases: config.cases, comparisons, failure: None })
}

type Mismatch = (String, String, String);

fn check_case(case: &Case, config: &VerifyConfig, comparisons: &mut usize) -> Result<Option<Mismatch>> {
    let expected = naive_edit_distance(&case.a, &case.b, &case.scheme)?;
    let sa = case.encoder.encode(&case.a)?;
    let sb = case.encoder.encode(&case.b)?;
    let longest = sa.len().max(sb.len());
    let mut mismatch = |name: String, got: crate::Cost| {
        *comparisons += 1;
        (got != expected).then(|| (name, expected.to_string(), got.to_string()))
    };
    for &w in &config.widths {
        if w.is_some_and(|x| x > longest) {
            continue;
        }
        let cfg = BlockConfig { x: w, ..Default::default() };
        let (mut got, stats) = block_edit_distance(&sa, &sb, &case.scheme, &cfg)?;
        if config.inject_fault {
            got = crate::Cost::finite(got.value().unwrap_or(0) + 1);
        }
        if let Some(m) = mismatch(format!("block x={}", stats.x), got) {
            return Ok(Some(m));
        }
    }
    for w in [None, Some(3)] {
        let (got, stats) = four_russians_distance(&case.a, &case.b, &case.scheme, w)?;
        if let Some(m) = mismatch(format!("four-russians x={}", stats.x), got) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let config = VerifyConfig { cases: 20, max_n: 40, ..Default::default() };
        let report = run_verify(&config).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.comparisons, 20 * 6 - skipped(&config));
    }

    fn skipped(config: &VerifyConfig) -> usize {
        (0..config.cases)
            .map(|i| {
                let c = generate_case(config, i).unwrap();
                let longest = c.a.len().max(c.b.len()) as u64;
                config.widths.iter().filter(|w| w.is_some_and(|x| x > longest)).count()
            })
            .sum()
    }

    #[test]
    fn injected_fault_is_reported() {
        let config = VerifyConfig { cases: 5, max_n: 20, inject_fault: true, ..Default::default() };
        let report = run_verify(&config).unwrap();
        let text = report.to_string();
        assert!(!report.passed());
        assert!(text.contains("run seed 1 case 0"), "{text}");
        assert!(text.contains("alphabet"), "{text}");
    }

    #[test]
    fn cases_are_reproducible() {
        let config = VerifyConfig::default();
        let a = generate_case(&config, 17).unwrap();
        let b = generate_case(&config, 17).unwrap();
        assert_eq!((a.a, a.b, a.seed), (b.a, b.b, b.seed));
    }
}
