use std::collections::HashMap;

use super::{Rule, Slp, SlpError, VarId};

/// Incremental SLP construction. Terminal rules are shared per symbol.
#[derive(Debug, Default, Clone)]
pub struct SlpBuilder {
    rules: Vec<Rule>,
    terminals: HashMap<u8, VarId>,
}

impl SlpBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terminal(&mut self, symbol: u8) -> VarId {
        if let Some(&v) = self.terminals.get(&symbol) {
            return v;
        }
        let v = self.push(Rule::Terminal(symbol));
        self.terminals.insert(symbol, v);
        v
    }

    pub fn concat(&mut self, left: VarId, right: VarId) -> VarId {
        self.push(Rule::Concat(left, right))
    }

    fn push(&mut self, rule: Rule) -> VarId {
        let v = VarId(self.rules.len() as u32);
        self.rules.push(rule);
        v
    }

    /// Joins `parts` left to right by pairing neighbours level by level;
    /// an odd element at the end of a level is carried up unchanged.
    pub fn balanced(&mut self, parts: &[VarId]) -> Option<VarId> {
        let mut level = parts.to_vec();
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            for pair in level.chunks(2) {
                match *pair {
                    [l, r] => next.push(self.concat(l, r)),
                    [single] => next.push(single),
                    _ => unreachable!(),
                }
            }
            level = next;
        }
        level.first().copied()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn finish(self, start: VarId) -> Result<Slp, SlpError> {
        Slp::new(self.rules, start)
    }
}

/// Height-balanced SLP whose parse tree is a near-complete binary tree over
/// the symbols of `text`. No repeats beyond shared terminals are exploited.
pub fn slp_from_text(text: &[u8]) -> Result<Slp, SlpError> {
    if text.is_empty() {
        return Err(SlpError::EmptyText);
    }
    let mut b = SlpBuilder::new();
    let leaves: Vec<VarId> = text.iter().map(|&s| b.terminal(s)).collect();
    let start = b.balanced(&leaves).expect("non-empty");
    b.finish(start)
}

/// LZ78 parse: each phrase is a previous phrase extended by one symbol and
/// becomes one concatenation rule. The phrase sequence is joined by a
/// balanced tree.
pub fn slp_from_lz78(text: &[u8]) -> Result<Slp, SlpError> {
    if text.is_empty() {
        return Err(SlpError::EmptyText);
    }
    let mut b = SlpBuilder::new();
    // trie edges: (phrase variable or None for the root, symbol) -> phrase variable
    let mut trie: HashMap<(Option<VarId>, u8), VarId> = HashMap::new();
    let mut phrases = Vec::new();
    let mut current: Option<VarId> = None;
    for &s in text {
        match trie.get(&(current, s)) {
            Some(&next) => current = Some(next),
            None => {
                let t = b.terminal(s);
                let phrase = match current {
                    None => t,
                    Some(prev) => b.concat(prev, t),
                };
                trie.insert((current, s), phrase);
                phrases.push(phrase);
                current = None;
            }
        }
    }
    if let Some(tail) = current {
        phrases.push(tail);
    }
    let start = b.balanced(&phrases).expect("non-empty");
    b.finish(start)
}

/// Run-length parse: a run `a^k` is generated by repeated doubling of `a`
/// and joining the powers named by the set bits of `k`. Powers and whole
/// runs are shared between runs of the same symbol.
pub fn slp_from_rle(text: &[u8]) -> Result<Slp, SlpError> {
    if text.is_empty() {
        return Err(SlpError::EmptyText);
    }
    let mut b = SlpBuilder::new();
    let mut powers: HashMap<u8, Vec<VarId>> = HashMap::new();
    let mut runs_cache: HashMap<(u8, usize), VarId> = HashMap::new();
    let mut runs = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let s = text[i];
        let k = text[i..].iter().take_while(|&&c| c == s).count();
        i += k;
        if let Some(&v) = runs_cache.get(&(s, k)) {
            runs.push(v);
            continue;
        }
        let bits = usize::BITS - k.leading_zeros();
        let t = b.terminal(s);
        let pw = powers.entry(s).or_insert_with(|| vec![t]);
        while pw.len() < bits as usize {
            let last = *pw.last().unwrap();
            let next = b.concat(last, last);
            pw.push(next);
        }
        // highest power first, then the lower set bits in decreasing order
        let mut acc: Option<VarId> = None;
        for bit in (0..bits).rev() {
            if k >> bit & 1 == 1 {
                let p = pw[bit as usize];
                acc = Some(match acc {
                    None => p,
                    Some(a) => b.concat(a, p),
                });
            }
        }
        let v = acc.expect("k >= 1");
        runs_cache.insert((s, k), v);
        runs.push(v);
    }
    let start = b.balanced(&runs).expect("non-empty");
    b.finish(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_encoder_shapes() {
        let s = slp_from_text(b"abcd").unwrap();
        assert_eq!((s.size(), s.depth()), (7, 3));
        let s = slp_from_text(b"abc").unwrap();
        assert_eq!(s.size(), 5);
        assert_eq!(s.expand().unwrap(), b"abc");
        let s = slp_from_text(b"a").unwrap();
        assert_eq!(s.rules(), &[Rule::Terminal(b'a')]);
    }

    #[test]
    fn lz78_phrases() {
        let s = slp_from_lz78(b"aaaa").unwrap();
        // terminal a (= phrase "a"), phrase "aa", then the tail "a" reuses phrase 1
        assert_eq!(
            s.rules(),
            &[
                Rule::Terminal(b'a'),
                Rule::Concat(VarId(0), VarId(0)),
                Rule::Concat(VarId(0), VarId(1)),
                Rule::Concat(VarId(2), VarId(0)),
            ]
        );
        assert_eq!(s.expand().unwrap(), b"aaaa");
        assert_eq!(slp_from_lz78(b"abracadabra").unwrap().expand().unwrap(), b"abracadabra");
        assert_eq!(slp_from_lz78(b"z").unwrap().size(), 1);
    }

    #[test]
    fn rle_doubling() {
        let s = slp_from_rle(b"aaaa").unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.expand().unwrap(), b"aaaa");
        let s = slp_from_rle(b"aabbb").unwrap();
        assert_eq!(s.expand().unwrap(), b"aabbb");
        assert!(s.size() <= 2 * (1 + 2) + 3);
        assert_eq!(slp_from_rle(b"a").unwrap().size(), 1);
    }

    #[test]
    fn rle_power_rule_count() {
        for n in [1usize, 2, 3, 7, 8, 100, 1023, 1024, 5000] {
            let text = vec![b'q'; n];
            let s = slp_from_rle(&text).unwrap();
            let lg = usize::BITS - (n - 1).leading_zeros(); // ceil(lg n)
            assert!(s.size() <= 2 * lg as usize + 2, "n={n} size={}", s.size());
            assert_eq!(s.len(), n as u64);
        }
        assert_eq!(slp_from_rle(&[b'a'; 1024]).unwrap().size(), 11);
    }

    #[test]
    fn empty_inputs_rejected() {
        assert_eq!(slp_from_text(b""), Err(SlpError::EmptyText));
        assert_eq!(slp_from_lz78(b""), Err(SlpError::EmptyText));
        assert_eq!(slp_from_rle(b""), Err(SlpError::EmptyText));
    }
}
