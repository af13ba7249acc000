//! Line-oriented SLP files:
//!
//! ```text
//! # "aa"
//! 1 = 'a'
//! 2 = 1 1
//! start 2
//! ```
//!
//! Rules are numbered consecutively from 1. `start` is the last line.
//! Terminals outside printable ASCII, and the backslash, are written as
//! `'\xHH'`.

use std::fmt::Write as _;

use super::{Rule, Slp, SlpError, VarId};

fn syntax(line: usize, msg: impl Into<String>) -> SlpError {
    SlpError::Syntax { line, msg: msg.into() }
}

fn is_rest_blank(rest: &str) -> bool {
    let rest = rest.trim_start();
    rest.is_empty() || rest.starts_with('#')
}

fn parse_id(line: usize, tok: &str) -> Result<VarId, SlpError> {
    let n: u32 = tok.parse().map_err(|_| syntax(line, format!("bad variable id {tok:?}")))?;
    if n == 0 {
        return Err(syntax(line, "variable ids start at 1"));
    }
    Ok(VarId(n - 1))
}

/// `x'` or `\xHH'`, optionally followed by a comment.
fn parse_terminal(quoted: &str) -> Option<u8> {
    let bytes = quoted.as_bytes();
    let (symbol, used) = match bytes {
        [b'\\', b'x', h, l, b'\'', ..] => {
            (u8::from_str_radix(std::str::from_utf8(&[*h, *l]).ok()?, 16).ok()?, 5)
        }
        [s, b'\'', ..] if s.is_ascii() => (*s, 2),
        _ => return None,
    };
    is_rest_blank(&quoted[used..]).then_some(symbol)
}

pub fn parse_slp(text: &str) -> Result<Slp, SlpError> {
    let mut rules = Vec::new();
    let mut start = None;
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if start.is_some() {
            return Err(syntax(line, "content after `start` line"));
        }
        if let Some(rest) = trimmed.strip_prefix("start") {
            let toks: Vec<&str> = rest.split_whitespace().take_while(|t| !t.starts_with('#')).collect();
            match toks.as_slice() {
                [id] => start = Some(parse_id(line, id)?),
                _ => return Err(syntax(line, "expected `start <id>`")),
            }
            continue;
        }
        let (lhs, rhs) = trimmed.split_once('=').ok_or_else(|| syntax(line, "expected `<id> = ...`"))?;
        let id = parse_id(line, lhs.trim())?;
        if id.index() != rules.len() {
            return Err(syntax(line, format!("expected rule {}, found {}", rules.len() + 1, id.index() + 1)));
        }
        let rhs = rhs.trim_start();
        let rule = if let Some(quoted) = rhs.strip_prefix('\'') {
            Rule::Terminal(
                parse_terminal(quoted)
                    .ok_or_else(|| syntax(line, "terminal must be a single byte in quotes"))?,
            )
        } else {
            let toks: Vec<&str> = rhs.split_whitespace().take_while(|t| !t.starts_with('#')).collect();
            match toks.as_slice() {
                [l, r] => Rule::Concat(parse_id(line, l)?, parse_id(line, r)?),
                _ => return Err(syntax(line, "expected `'<symbol>'` or two ids")),
            }
        };
        rules.push(rule);
    }
    let start = start.ok_or(SlpError::MissingStart)?;
    Slp::new(rules, start)
}

pub fn serialize_slp(slp: &Slp) -> String {
    let mut out = String::with_capacity(slp.size() * 12);
    for (i, rule) in slp.rules().iter().enumerate() {
        match *rule {
            Rule::Terminal(s) if (b' '..=b'~').contains(&s) && s != b'\\' => {
                let _ = writeln!(out, "{} = '{}'", i + 1, s as char);
            }
            Rule::Terminal(s) => {
                let _ = writeln!(out, "{} = '\\x{s:02x}'", i + 1);
            }
            Rule::Concat(l, r) => {
                let _ = writeln!(out, "{} = {} {}", i + 1, l.0 + 1, r.0 + 1);
            }
        }
    }
    let _ = writeln!(out, "start {}", slp.start().0 + 1);
    out
}
