//! Scoring schemes: per-symbol delete/insert costs and a substitution matrix.
//!
//! Costs are exact nonnegative integers. A scheme may declare a `scale`
//! denominator, in which case every stored integer stands for
//! `value / scale`; the algorithms never look at the scale.
//!
//! Text format (line oriented, `#` starts a comment):
//!
//! ```text
//! alphabet ACGT
//! scale 1
//! default_indel 1
//! default_sub 1
//! del A 2
//! ins T 3
//! sub A G 1
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::cost::Cost;

const NO_SYMBOL: u16 = u16::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScoringError {
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("substitution needs a second symbol")]
    MissingSubstitute,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: negative cost {value}")]
    NegativeCost { line: usize, value: i128 },
    #[error("missing `alphabet` declaration")]
    MissingAlphabet,
    #[error("scale must be positive")]
    InvalidScale,
    #[error("cost table has wrong size: expected {expected}, got {got}")]
    TableSize { expected: usize, got: usize },
}

/// Kind of elementary edit operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    Delete,
    Insert,
    Substitute,
}

#[derive(Clone, PartialEq, Eq)]
pub struct ScoringScheme {
    alphabet: Vec<u8>,
    index: [u16; 256],
    del: Vec<u64>,
    ins: Vec<u64>,
    /// Row-major `sub[a * k + b]`.
    sub: Vec<u64>,
    scale: u64,
}

impl std::fmt::Debug for ScoringScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScoringScheme")
            .field("alphabet", &String::from_utf8_lossy(&self.alphabet))
            .field("del", &self.del)
            .field("ins", &self.ins)
            .field("sub", &self.sub)
            .field("scale", &self.scale)
            .finish()
    }
}

fn build_index(alphabet: &[u8]) -> Result<[u16; 256], ScoringError> {
    if alphabet.is_empty() {
        return Err(ScoringError::EmptyAlphabet);
    }
    let mut index = [NO_SYMBOL; 256];
    for (i, &s) in alphabet.iter().enumerate() {
        if index[s as usize] != NO_SYMBOL {
            return Err(ScoringError::DuplicateSymbol(s as char));
        }
        index[s as usize] = i as u16;
    }
    Ok(index)
}

impl ScoringScheme {
    /// Unit costs for every operation, free identity substitutions.
    pub fn levenshtein(alphabet: &[u8]) -> Result<Self, ScoringError> {
        let k = alphabet.len();
        let sub = (0..k * k).map(|i| u64::from(i / k != i % k)).collect();
        Self::new(alphabet, vec![1; k], vec![1; k], sub, 1)
    }

    pub fn new(
        alphabet: &[u8],
        del: Vec<u64>,
        ins: Vec<u64>,
        sub: Vec<u64>,
        scale: u64,
    ) -> Result<Self, ScoringError> {
        let index = build_index(alphabet)?;
        let k = alphabet.len();
        for (got, expected) in [(del.len(), k), (ins.len(), k), (sub.len(), k * k)] {
            if got != expected {
                return Err(ScoringError::TableSize { expected, got });
            }
        }
        if scale == 0 {
            return Err(ScoringError::InvalidScale);
        }
        Ok(ScoringScheme { alphabet: alphabet.to_vec(), index, del, ins, sub, scale })
    }

    pub fn alphabet(&self) -> &[u8] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    #[inline]
    pub fn symbol_index(&self, symbol: u8) -> Option<usize> {
        match self.index[symbol as usize] {
            NO_SYMBOL => None,
            i => Some(i as usize),
        }
    }

    fn require(&self, symbol: u8) -> Result<usize, ScoringError> {
        self.symbol_index(symbol).ok_or(ScoringError::UnknownSymbol(symbol as char))
    }

    /// Exact lookup of one edit cost.
    pub fn cost(&self, kind: OpKind, a: u8, b: Option<u8>) -> Result<Cost, ScoringError> {
        let ia = self.require(a)?;
        let v = match (kind, b) {
            (OpKind::Delete, _) => self.del[ia],
            (OpKind::Insert, _) => self.ins[ia],
            (OpKind::Substitute, Some(b)) => self.sub[ia * self.alphabet.len() + self.require(b)?],
            (OpKind::Substitute, None) => return Err(ScoringError::MissingSubstitute),
        };
        Ok(Cost::finite(v))
    }

    /// Translate a string into dense symbol indices.
    pub fn encode(&self, text: &[u8]) -> Result<Vec<u8>, ScoringError> {
        text.iter().map(|&s| self.require(s).map(|i| i as u8)).collect()
    }

    #[inline]
    pub(crate) fn del_idx(&self, a: u8) -> u64 {
        self.del[a as usize]
    }

    #[inline]
    pub(crate) fn ins_idx(&self, b: u8) -> u64 {
        self.ins[b as usize]
    }

    #[inline]
    pub(crate) fn sub_row(&self, a: u8) -> &[u64] {
        let k = self.alphabet.len();
        &self.sub[a as usize * k..(a as usize + 1) * k]
    }

    /// Largest single-operation cost in the scheme.
    pub fn max_cost(&self) -> u64 {
        self.del.iter().chain(&self.ins).chain(&self.sub).copied().max().unwrap_or(0)
    }

    /// Upper bound on any path weight over a grid whose two sides have the
    /// given lengths, or `None` if it does not fit.
    pub(crate) fn path_bound(&self, rows: usize, cols: usize) -> Option<u64> {
        let steps = (rows as u64).checked_add(cols as u64)?;
        self.max_cost().checked_mul(steps).filter(|&v| v < Cost::MAX_FINITE / 4)
    }

    pub fn parse(text: &str) -> Result<Self, ScoringError> {
        Parser::default().run(text)
    }

    /// Text form accepted by [`ScoringScheme::parse`]; only entries that
    /// differ from the implicit defaults are written.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet {}", String::from_utf8_lossy(&self.alphabet));
        if self.scale != 1 {
            let _ = writeln!(out, "scale {}", self.scale);
        }
        for (i, &s) in self.alphabet.iter().enumerate() {
            if self.del[i] != 1 {
                let _ = writeln!(out, "del {} {}", s as char, self.del[i]);
            }
            if self.ins[i] != 1 {
                let _ = writeln!(out, "ins {} {}", s as char, self.ins[i]);
            }
        }
        let k = self.alphabet.len();
        for (i, &a) in self.alphabet.iter().enumerate() {
            for (j, &b) in self.alphabet.iter().enumerate() {
                let default = u64::from(i != j);
                if self.sub[i * k + j] != default {
                    let _ = writeln!(out, "sub {} {} {}", a as char, b as char, self.sub[i * k + j]);
                }
            }
        }
        out
    }
}

enum Override {
    Del(u8, u64),
    Ins(u8, u64),
    Sub(u8, u8, u64),
}

#[derive(Default)]
struct Parser {
    alphabet: Option<Vec<u8>>,
    scale: Option<u64>,
    default_indel: Option<u64>,
    default_sub: Option<u64>,
    overrides: Vec<(usize, Override)>,
}

fn strip_comment(line: &str) -> Vec<&str> {
    line.split_whitespace().take_while(|t| !t.starts_with('#')).collect()
}

fn syntax(line: usize, msg: impl Into<String>) -> ScoringError {
    ScoringError::Syntax { line, msg: msg.into() }
}

fn parse_cost(line: usize, tok: &str) -> Result<u64, ScoringError> {
    let v: i128 = tok.parse().map_err(|_| syntax(line, format!("bad integer {tok:?}")))?;
    if v < 0 {
        return Err(ScoringError::NegativeCost { line, value: v });
    }
    u64::try_from(v)
        .ok()
        .filter(|&v| v <= Cost::MAX_FINITE)
        .ok_or_else(|| syntax(line, format!("cost {tok} too large")))
}

fn parse_symbol(line: usize, tok: &str) -> Result<u8, ScoringError> {
    match tok.as_bytes() {
        [s] => Ok(*s),
        _ => Err(syntax(line, format!("expected a single-byte symbol, got {tok:?}"))),
    }
}

impl Parser {
    fn run(mut self, text: &str) -> Result<ScoringScheme, ScoringError> {
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let toks = strip_comment(raw);
            let Some((&head, args)) = toks.split_first() else { continue };
            if self.alphabet.is_none() && head != "alphabet" {
                return Err(ScoringError::MissingAlphabet);
            }
            let arity = |n: usize| {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(syntax(line, format!("`{head}` takes {n} argument(s)")))
                }
            };
            match head {
                "alphabet" => {
                    arity(1)?;
                    if self.alphabet.is_some() {
                        return Err(syntax(line, "alphabet declared twice"));
                    }
                    self.alphabet = Some(args[0].as_bytes().to_vec());
                }
                "scale" => {
                    arity(1)?;
                    let s = parse_cost(line, args[0])?;
                    if s == 0 {
                        return Err(ScoringError::InvalidScale);
                    }
                    self.scale = Some(s);
                }
                "default_indel" => {
                    arity(1)?;
                    self.default_indel = Some(parse_cost(line, args[0])?);
                }
                "default_sub" => {
                    arity(1)?;
                    self.default_sub = Some(parse_cost(line, args[0])?);
                }
                "del" | "ins" => {
                    arity(2)?;
                    let s = parse_symbol(line, args[0])?;
                    let c = parse_cost(line, args[1])?;
                    let o = if head == "del" { Override::Del(s, c) } else { Override::Ins(s, c) };
                    self.overrides.push((line, o));
                }
                "sub" => {
                    arity(3)?;
                    let a = parse_symbol(line, args[0])?;
                    let b = parse_symbol(line, args[1])?;
                    let c = parse_cost(line, args[2])?;
                    self.overrides.push((line, Override::Sub(a, b, c)));
                }
                other => return Err(syntax(line, format!("unknown directive {other:?}"))),
            }
        }

        let alphabet = self.alphabet.ok_or(ScoringError::MissingAlphabet)?;
        let index = build_index(&alphabet)?;
        let k = alphabet.len();
        let indel = self.default_indel.unwrap_or(1);
        let dsub = self.default_sub.unwrap_or(1);
        let mut del = vec![indel; k];
        let mut ins = vec![indel; k];
        let mut sub: Vec<u64> = (0..k * k).map(|i| if i / k == i % k { 0 } else { dsub }).collect();
        let lookup = |s: u8| match index[s as usize] {
            NO_SYMBOL => Err(ScoringError::UnknownSymbol(s as char)),
            i => Ok(i as usize),
        };
        for (_, o) in self.overrides {
            match o {
                Override::Del(s, c) => del[lookup(s)?] = c,
                Override::Ins(s, c) => ins[lookup(s)?] = c,
                Override::Sub(a, b, c) => sub[lookup(a)? * k + lookup(b)?] = c,
            }
        }
        ScoringScheme::new(&alphabet, del, ins, sub, self.scale.unwrap_or(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levenshtein_costs() {
        let s = ScoringScheme::levenshtein(b"ab").unwrap();
        assert_eq!(s.cost(OpKind::Substitute, b'a', Some(b'a')).unwrap(), Cost::ZERO);
        assert_eq!(s.cost(OpKind::Substitute, b'a', Some(b'b')).unwrap(), Cost::finite(1));
        assert_eq!(s.cost(OpKind::Delete, b'a', None).unwrap(), Cost::finite(1));
        assert_eq!(s.cost(OpKind::Delete, b'b', None).unwrap(), Cost::finite(1));
        assert_eq!(s.scale(), 1);
    }

    #[test]
    fn single_symbol_alphabet() {
        let s = ScoringScheme::levenshtein(b"x").unwrap();
        assert_eq!(s.cost(OpKind::Insert, b'x', None).unwrap(), Cost::finite(1));
    }

    #[test]
    fn bad_alphabets() {
        assert_eq!(ScoringScheme::levenshtein(b""), Err(ScoringError::EmptyAlphabet));
        assert_eq!(ScoringScheme::levenshtein(b"aba"), Err(ScoringError::DuplicateSymbol('a')));
    }

    #[test]
    fn strict_lookups() {
        let s = ScoringScheme::levenshtein(b"ab").unwrap();
        assert_eq!(s.cost(OpKind::Delete, b'z', None), Err(ScoringError::UnknownSymbol('z')));
        assert_eq!(s.cost(OpKind::Substitute, b'a', None), Err(ScoringError::MissingSubstitute));
    }

    #[test]
    fn custom_delete_cost() {
        let s = ScoringScheme::parse("alphabet abc\ndel c 7\n").unwrap();
        assert_eq!(s.cost(OpKind::Delete, b'c', None).unwrap(), Cost::finite(7));
        assert_eq!(s.cost(OpKind::Insert, b'c', None).unwrap(), Cost::finite(1));
    }

    #[test]
    fn defaults_reproduce_levenshtein() {
        let s = ScoringScheme::parse("# unit costs\nalphabet ab\ndefault_indel 1\ndefault_sub 1\n").unwrap();
        assert_eq!(s, ScoringScheme::levenshtein(b"ab").unwrap());
    }

    #[test]
    fn sub_override_is_directional() {
        let s = ScoringScheme::parse("alphabet ab\nsub a b 3\n").unwrap();
        assert_eq!(s.cost(OpKind::Substitute, b'a', Some(b'b')).unwrap(), Cost::finite(3));
        assert_eq!(s.cost(OpKind::Substitute, b'b', Some(b'a')).unwrap(), Cost::finite(1));
        assert_eq!(ScoringScheme::parse(&s.serialize()).unwrap(), s);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(ScoringScheme::parse("alphabet ab\nsub a Z 1\n"), Err(ScoringError::UnknownSymbol('Z')));
        assert_eq!(ScoringScheme::parse("del a 1\n"), Err(ScoringError::MissingAlphabet));
        assert_eq!(ScoringScheme::parse("# nothing\n"), Err(ScoringError::MissingAlphabet));
        assert_eq!(
            ScoringScheme::parse("alphabet ab\ndel a -2\n"),
            Err(ScoringError::NegativeCost { line: 2, value: -2 })
        );
        assert!(matches!(
            ScoringScheme::parse("alphabet ab\n\nsub a b\n"),
            Err(ScoringError::Syntax { line: 3, .. })
        ));
        assert_eq!(ScoringScheme::parse("alphabet ab\nscale 0\n"), Err(ScoringError::InvalidScale));
    }

    #[test]
    fn scale_and_nonzero_identity_survive_round_trip() {
        let s = ScoringScheme::parse("alphabet xyz\nscale 4\nsub x x 2\nins z 0 # free\n").unwrap();
        assert_eq!(s.scale(), 4);
        assert_eq!(s.cost(OpKind::Substitute, b'x', Some(b'x')).unwrap(), Cost::finite(2));
        assert_eq!(ScoringScheme::parse(&s.serialize()).unwrap(), s);
    }
}
