use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::scoring::ScoringScheme;

/// Textbook edit-distance recurrence with a single rolling row over the
/// shorter string. Every other distance routine is checked against this.
pub fn naive_edit_distance(a: &[u8], b: &[u8], scheme: &ScoringScheme) -> Result<Cost> {
    let a = scheme.encode(a)?;
    let b = scheme.encode(b)?;
    scheme.path_bound(a.len(), b.len()).ok_or(Error::Overflow("naive edit distance"))?;
    let v = if b.len() <= a.len() {
        dp(&a, &b, |o| scheme.del_idx(o), |i| scheme.ins_idx(i), |o, i| scheme.sub_row(o)[i as usize])
    } else {
        // roles swapped: walking along `a` is now the inner direction
        dp(&b, &a, |o| scheme.ins_idx(o), |i| scheme.del_idx(i), |o, i| scheme.sub_row(i)[o as usize])
    };
    Ok(Cost::finite(v))
}

#[inline(always)]
fn dp(
    outer: &[u8],
    inner: &[u8],
    outer_step: impl Fn(u8) -> u64,
    inner_step: impl Fn(u8) -> u64,
    sub: impl Fn(u8, u8) -> u64,
) -> u64 {
    let inner_costs: Vec<u64> = inner.iter().map(|&c| inner_step(c)).collect();
    let mut row = Vec::with_capacity(inner.len() + 1);
    row.push(0u64);
    for &c in &inner_costs {
        row.push(row.last().unwrap() + c);
    }
    for &o in outer {
        let step = outer_step(o);
        let mut diag = row[0];
        let mut left = diag + step;
        row[0] = left;
        for ((cell, &ic), &ch) in row[1..].iter_mut().zip(&inner_costs).zip(inner) {
            let up = *cell;
            let v = (up + step).min(left + ic).min(diag + sub(o, ch));
            diag = up;
            left = v;
            *cell = v;
        }
    }
    *row.last().unwrap()
}
