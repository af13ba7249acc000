//! Covers of a grammar-compressed string by variables of bounded length,
//! and the block structure of the grid they induce.
//!
//! The cover walks the parse tree top-down. A vertex generating at most `x`
//! symbols is emitted; a longer vertex whose two children are both shorter
//! than `x` is a key vertex and is emitted too (its length lies in
//! `(x, 2x)`); every other vertex is split into its children. The emitted
//! non-key vertices are exactly the subtrees hanging off the paths between
//! consecutive key vertices, so the piece count is at most
//! `(2d + 2)(N/x + 1)` for a parse tree of depth `d`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::slp::{Rule, Slp, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverPiece {
    pub var: VarId,
    /// 0-based offset of the piece in the generated string.
    pub start: u64,
    pub len: u64,
    /// Emitted as a key vertex (length in `(x, 2x)`).
    pub key: bool,
}

/// Pieces covering the string of `slp`, left to right.
pub fn cover_string(slp: &Slp, x: u64) -> Result<Vec<CoverPiece>> {
    if x == 0 || x > slp.len() {
        return Err(Error::XOutOfRange { x: x as usize, max: slp.len() as usize });
    }
    let mut pieces = Vec::new();
    let mut stack = vec![(slp.start(), 0u64)];
    while let Some((v, start)) = stack.pop() {
        let len = slp.var_len(v);
        if len <= x {
            pieces.push(CoverPiece { var: v, start, len, key: false });
            continue;
        }
        let Rule::Concat(l, r) = slp.rule(v) else { unreachable!("terminals have length 1") };
        let (ll, rl) = (slp.var_len(l), slp.var_len(r));
        if ll < x && rl < x {
            pieces.push(CoverPiece { var: v, start, len, key: true });
        } else {
            stack.push((r, start + ll));
            stack.push((l, start));
        }
    }
    Ok(pieces)
}

/// An xy-partition of the grid of two SLP strings.
///
/// Block `(s, t)` covers grid rows `[row_bounds[s], row_bounds[s+1]]` and
/// columns `[col_bounds[t], col_bounds[t+1]]`; neighbouring blocks share
/// their common boundary row or column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPlan {
    pub x: u64,
    pub cover_a: Vec<CoverPiece>,
    pub cover_b: Vec<CoverPiece>,
    pub depth_a: u32,
    pub depth_b: u32,
    /// Number of key pieces in each cover.
    pub keys_a: usize,
    pub keys_b: usize,
}

impl PartitionPlan {
    pub fn y_a(&self) -> usize {
        self.cover_a.len()
    }

    pub fn y_b(&self) -> usize {
        self.cover_b.len()
    }

    pub fn block_count(&self) -> usize {
        self.y_a() * self.y_b()
    }

    /// Distinct `(var in A, var in B)` pairs over all blocks.
    pub fn distinct_pairs(&self) -> usize {
        let a: HashSet<VarId> = self.cover_a.iter().map(|p| p.var).collect();
        let b: HashSet<VarId> = self.cover_b.iter().map(|p| p.var).collect();
        a.len() * b.len()
    }

    pub fn row_bounds(&self) -> Vec<u64> {
        bounds(&self.cover_a)
    }

    pub fn col_bounds(&self) -> Vec<u64> {
        bounds(&self.cover_b)
    }

    /// CSV dump: `string,piece_index,var,start,len`, with 1-based variable
    /// numbers and 0-based offsets.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("string,piece_index,var,start,len\n");
        for (name, cover) in [("A", &self.cover_a), ("B", &self.cover_b)] {
            for (k, piece) in cover.iter().enumerate() {
                let _ = writeln!(out, "{name},{k},{},{},{}", piece.var.0 + 1, piece.start, piece.len);
            }
        }
        out
    }
}

fn bounds(cover: &[CoverPiece]) -> Vec<u64> {
    std::iter::once(0).chain(cover.iter().map(|p| p.start + p.len)).collect()
}

/// Upper bound on the piece count for a parse tree of depth `depth`.
pub fn piece_bound(len: u64, x: u64, depth: u32) -> u64 {
    (2 * depth as u64 + 2) * (len / x + 1)
}

/// Covers both strings with the same `x`. An `x` larger than a string's
/// length turns that whole string into one piece.
pub fn make_partition_plan(a: &Slp, b: &Slp, x: u64) -> Result<PartitionPlan> {
    let longest = a.len().max(b.len());
    if x == 0 || x > longest {
        return Err(Error::XOutOfRange { x: x as usize, max: longest as usize });
    }
    let cover_a = cover_string(a, x.min(a.len()))?;
    let cover_b = cover_string(b, x.min(b.len()))?;
    Ok(PartitionPlan {
        x,
        keys_a: cover_a.iter().filter(|p| p.key).count(),
        keys_b: cover_b.iter().filter(|p| p.key).count(),
        cover_a,
        cover_b,
        depth_a: a.depth(),
        depth_b: b.depth(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slp::Rule::{Concat, Terminal};

    fn v(i: u32) -> VarId {
        VarId(i - 1)
    }

    pub(crate) fn abcabcab() -> Slp {
        Slp::new(
            vec![
                Terminal(b'A'),
                Terminal(b'B'),
                Terminal(b'C'),
                Concat(v(1), v(2)),
                Concat(v(4), v(3)),
                Concat(v(5), v(5)),
                Concat(v(6), v(4)),
            ],
            v(7),
        )
        .unwrap()
    }

    #[test]
    fn hand_traced_cover() {
        let a = abcabcab();
        let pieces = cover_string(&a, 3).unwrap();
        let vars: Vec<_> = pieces.iter().map(|p| p.var).collect();
        assert_eq!(vars, vec![v(5), v(5), v(4)]);
        let texts: Vec<_> = pieces.iter().map(|p| a.expand_var(p.var).unwrap()).collect();
        assert_eq!(texts, vec![b"ABC".to_vec(), b"ABC".to_vec(), b"AB".to_vec()]);
        assert_eq!(pieces.iter().map(|p| p.start).collect::<Vec<_>>(), vec![0, 3, 6]);
    }

    #[test]
    fn extreme_widths() {
        let a = abcabcab();
        let whole = cover_string(&a, 8).unwrap();
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].var, a.start());
        let unit = cover_string(&a, 1).unwrap();
        assert_eq!(unit.len(), 8);
        assert!(unit.iter().all(|p| matches!(a.rule(p.var), Terminal(_))));
        assert!(cover_string(&a, 0).is_err());
        assert!(cover_string(&a, 9).is_err());
    }

    #[test]
    fn key_vertices() {
        // "ABCAB" + "ABCAB": x = 4, children of X (len 5) are 3 and 2
        let a = Slp::new(
            vec![
                Terminal(b'A'),
                Terminal(b'B'),
                Terminal(b'C'),
                Concat(v(1), v(2)),
                Concat(v(4), v(3)),
                Concat(v(5), v(4)),
                Concat(v(6), v(6)),
            ],
            v(7),
        )
        .unwrap();
        let pieces = cover_string(&a, 4).unwrap();
        assert_eq!(pieces.len(), 2);
        assert!(pieces.iter().all(|p| p.key && p.len == 5));
    }

    #[test]
    fn plan_csv() {
        let a = abcabcab();
        let plan = make_partition_plan(&a, &a, 3).unwrap();
        assert_eq!(plan.block_count(), 9);
        assert_eq!(plan.row_bounds(), vec![0, 3, 6, 8]);
        assert_eq!(
            plan.to_csv(),
            "string,piece_index,var,start,len\nA,0,5,0,3\nA,1,5,3,3\nA,2,4,6,2\nB,0,5,0,3\nB,1,5,3,3\nB,2,4,6,2\n"
        );
    }
}
