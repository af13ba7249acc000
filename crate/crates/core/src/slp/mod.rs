//! Straight-line programs: grammars in which every variable is either a
//! single symbol or the concatenation of two earlier variables, so that
//! the grammar generates exactly one string.

mod encode;
mod format;

use std::fmt;

use thiserror::Error;

pub use encode::{slp_from_lz78, slp_from_rle, slp_from_text, SlpBuilder};
pub use format::{parse_slp, serialize_slp};

/// Longest expansion accepted unless a different guard is configured.
pub const DEFAULT_EXPANSION_GUARD: u64 = 1 << 40;

/// Index of a rule; variables are numbered in rule order starting at 0.
/// The text format and `Display` use 1-based numbers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u32);

impl VarId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}", self.0 + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Rule {
    Terminal(u8),
    Concat(VarId, VarId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    EmptyRules,
    SelfReference { var: VarId },
    ForwardReference { var: VarId, target: VarId },
    DanglingReference { var: VarId, target: VarId },
    BadStart { start: VarId },
    ExpansionOverflow { var: VarId, guard: u64 },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::EmptyRules => f.write_str("empty rule list"),
            ValidationIssue::SelfReference { var } => write!(f, "{var} refers to itself"),
            ValidationIssue::ForwardReference { var, target } => {
                write!(f, "{var} has a forward reference to {target}")
            }
            ValidationIssue::DanglingReference { var, target } => {
                write!(f, "{var} refers to undefined {target}")
            }
            ValidationIssue::BadStart { start } => write!(f, "start {start} is not defined"),
            ValidationIssue::ExpansionOverflow { var, guard } => {
                write!(f, "{var} expands to more than {guard} symbols")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlpError {
    #[error("invalid SLP: {}", .0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<ValidationIssue>),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `start` line")]
    MissingStart,
    #[error("range {offset}+{len} out of bounds for {var} of length {length}")]
    RangeOutOfBounds { var: VarId, offset: u64, len: u64, length: u64 },
    #[error("expansion of {len} symbols exceeds guard {guard}")]
    ExpansionGuard { len: u64, guard: u64 },
    #[error("variable {0} does not exist")]
    UnknownVar(VarId),
    #[error("empty text")]
    EmptyText,
}

/// A validated straight-line program with cached lengths and depths.
#[derive(Clone, PartialEq, Eq)]
pub struct Slp {
    rules: Vec<Rule>,
    start: VarId,
    lengths: Vec<u64>,
    depths: Vec<u32>,
    guard: u64,
}

impl fmt::Debug for Slp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Slp")
            .field("n", &self.rules.len())
            .field("len", &self.len())
            .field("depth", &self.depth())
            .field("start", &self.start)
            .finish()
    }
}

/// Check every structural invariant of a rule list. Returns all issues found.
pub fn validate(rules: &[Rule], start: VarId, guard: u64) -> Vec<ValidationIssue> {
    let mut issues = Vec::new();
    if rules.is_empty() {
        issues.push(ValidationIssue::EmptyRules);
        return issues;
    }
    let n = rules.len();
    for (i, rule) in rules.iter().enumerate() {
        let var = VarId(i as u32);
        if let Rule::Concat(l, r) = *rule {
            for target in [l, r] {
                if target.index() == i {
                    issues.push(ValidationIssue::SelfReference { var });
                } else if target.index() >= n {
                    issues.push(ValidationIssue::DanglingReference { var, target });
                } else if target.index() > i {
                    issues.push(ValidationIssue::ForwardReference { var, target });
                }
            }
        }
    }
    if start.index() >= n {
        issues.push(ValidationIssue::BadStart { start });
    }
    if issues.is_empty() {
        let mut lengths = vec![0u64; n];
        for (i, rule) in rules.iter().enumerate() {
            let len = match *rule {
                Rule::Terminal(_) => Some(1),
                Rule::Concat(l, r) => lengths[l.index()].checked_add(lengths[r.index()]),
            };
            match len.filter(|&l| l <= guard) {
                Some(l) => lengths[i] = l,
                None => {
                    issues.push(ValidationIssue::ExpansionOverflow { var: VarId(i as u32), guard });
                    break;
                }
            }
        }
    }
    issues
}

impl Slp {
    pub fn new(rules: Vec<Rule>, start: VarId) -> Result<Self, SlpError> {
        Self::with_guard(rules, start, DEFAULT_EXPANSION_GUARD)
    }

    pub fn with_guard(rules: Vec<Rule>, start: VarId, guard: u64) -> Result<Self, SlpError> {
        let issues = validate(&rules, start, guard);
        if !issues.is_empty() {
            return Err(SlpError::Invalid(issues));
        }
        let mut lengths = Vec::with_capacity(rules.len());
        let mut depths: Vec<u32> = Vec::with_capacity(rules.len());
        for rule in &rules {
            let (len, depth) = match *rule {
                Rule::Terminal(_) => (1, 1),
                Rule::Concat(l, r) => {
                    (lengths[l.index()] + lengths[r.index()], 1 + depths[l.index()].max(depths[r.index()]))
                }
            };
            lengths.push(len);
            depths.push(depth);
        }
        Ok(Slp { rules, start, lengths, depths, guard })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, var: VarId) -> Rule {
        self.rules[var.index()]
    }

    pub fn start(&self) -> VarId {
        self.start
    }

    /// Number of rules (the grammar size n).
    pub fn size(&self) -> usize {
        self.rules.len()
    }

    /// Length of the generated string (N).
    pub fn len(&self) -> u64 {
        self.lengths[self.start.index()]
    }

    /// Always false: every variable generates at least one symbol.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parse-tree depth of the start variable; a terminal has depth 1.
    pub fn depth(&self) -> u32 {
        self.depths[self.start.index()]
    }

    #[inline]
    pub fn var_len(&self, var: VarId) -> u64 {
        self.lengths[var.index()]
    }

    #[inline]
    pub fn var_depth(&self, var: VarId) -> u32 {
        self.depths[var.index()]
    }

    pub fn guard(&self) -> u64 {
        self.guard
    }

    fn check_var(&self, var: VarId) -> Result<(), SlpError> {
        if var.index() < self.rules.len() {
            Ok(())
        } else {
            Err(SlpError::UnknownVar(var))
        }
    }

    /// The full string generated by the start variable.
    pub fn expand(&self) -> Result<Vec<u8>, SlpError> {
        self.expand_var(self.start)
    }

    pub fn expand_var(&self, var: VarId) -> Result<Vec<u8>, SlpError> {
        self.check_var(var)?;
        self.expand_range(var, 0, self.var_len(var))
    }

    /// `len` symbols of `var`'s expansion starting at 0-based `offset`.
    pub fn expand_range(&self, var: VarId, offset: u64, len: u64) -> Result<Vec<u8>, SlpError> {
        self.check_var(var)?;
        let length = self.var_len(var);
        if offset.checked_add(len).is_none_or(|end| end > length) {
            return Err(SlpError::RangeOutOfBounds { var, offset, len, length });
        }
        // a larger guard admits longer grammars, never longer materialisations
        let cap = self.guard.min(DEFAULT_EXPANSION_GUARD);
        if len > cap || usize::try_from(len).is_err() {
            return Err(SlpError::ExpansionGuard { len, guard: cap });
        }
        let mut out = Vec::with_capacity(len as usize);
        if len == 0 {
            return Ok(out);
        }
        // (variable, lo, hi): emit symbols [lo, hi) of that variable.
        let mut stack = vec![(var, offset, offset + len)];
        while let Some((v, lo, hi)) = stack.pop() {
            match self.rules[v.index()] {
                Rule::Terminal(s) => out.push(s),
                Rule::Concat(l, r) => {
                    let split = self.lengths[l.index()];
                    if hi > split {
                        stack.push((r, lo.saturating_sub(split), hi - split));
                    }
                    if lo < split {
                        stack.push((l, lo, hi.min(split)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Distinct terminal symbols in order of first appearance.
    pub fn terminal_symbols(&self) -> Vec<u8> {
        let mut seen = [false; 256];
        let mut out = Vec::new();
        for r in &self.rules {
            if let Rule::Terminal(s) = *r {
                if !std::mem::replace(&mut seen[s as usize], true) {
                    out.push(s);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: u8) -> Rule {
        Rule::Terminal(s)
    }
    fn c(l: u32, r: u32) -> Rule {
        Rule::Concat(VarId(l), VarId(r))
    }

    #[test]
    fn two_rule_slp() {
        let s = Slp::new(vec![t(b'a'), c(0, 0)], VarId(1)).unwrap();
        assert_eq!((s.len(), s.size(), s.depth()), (2, 2, 2));
        assert_eq!(s.expand().unwrap(), b"aa");
    }

    #[test]
    fn forward_reference_rejected() {
        let err = Slp::new(vec![c(1, 1), t(b'a')], VarId(1)).unwrap_err();
        assert_eq!(
            err,
            SlpError::Invalid(vec![
                ValidationIssue::ForwardReference { var: VarId(0), target: VarId(1) },
                ValidationIssue::ForwardReference { var: VarId(0), target: VarId(1) },
            ])
        );
    }

    #[test]
    fn other_validation_errors() {
        assert_eq!(validate(&[], VarId(0), 10), vec![ValidationIssue::EmptyRules]);
        assert_eq!(
            validate(&[t(b'a'), c(1, 0)], VarId(1), 10),
            vec![ValidationIssue::SelfReference { var: VarId(1) }]
        );
        assert_eq!(
            validate(&[t(b'a'), c(0, 7)], VarId(1), 10),
            vec![ValidationIssue::DanglingReference { var: VarId(1), target: VarId(7) }]
        );
        assert_eq!(validate(&[t(b'a')], VarId(3), 10), vec![ValidationIssue::BadStart { start: VarId(3) }]);
    }

    #[test]
    fn expansion_guard() {
        // 2^50 via doubling
        let mut rules = vec![t(b'a')];
        for i in 0..50 {
            rules.push(c(i, i));
        }
        let err = Slp::new(rules.clone(), VarId(50)).unwrap_err();
        assert!(
            matches!(err, SlpError::Invalid(ref v) if matches!(v[0], ValidationIssue::ExpansionOverflow { .. }))
        );
        let ok = Slp::with_guard(rules, VarId(50), u64::MAX).unwrap();
        assert_eq!(ok.len(), 1 << 50);
        assert_eq!(ok.expand_range(VarId(50), 1 << 49, 4).unwrap(), b"aaaa");
        assert!(matches!(ok.expand(), Err(SlpError::ExpansionGuard { .. })));
    }

    #[test]
    fn fibonacci_lengths_match_expansion() {
        let mut rules = vec![t(b'b'), t(b'a')];
        for i in 2..25u32 {
            rules.push(c(i - 1, i - 2));
        }
        let s = Slp::new(rules, VarId(24)).unwrap();
        // fib(25) with fib(1) = fib(2) = 1
        assert_eq!(s.len(), 75025);
        assert_eq!(s.expand().unwrap().len(), 75025);
        assert_eq!(s.depth(), 24);
        assert!(s.depth() as usize <= s.size());
        for k in 3..12u32 {
            let v = VarId(k - 1);
            assert_eq!(s.var_len(v), s.expand_var(v).unwrap().len() as u64);
        }
    }

    #[test]
    fn range_errors() {
        let s = Slp::new(vec![t(b'a'), t(b'b'), c(0, 1)], VarId(2)).unwrap();
        assert_eq!(s.expand_range(VarId(2), 1, 1).unwrap(), b"b");
        assert!(matches!(s.expand_range(VarId(2), 1, 2), Err(SlpError::RangeOutOfBounds { .. })));
        assert!(matches!(s.expand_var(VarId(9)), Err(SlpError::UnknownVar(_))));
    }
}
