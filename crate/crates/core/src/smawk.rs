//! Row and column minima of totally monotone matrices with the SMAWK
//! algorithm (Aggarwal, Klawe, Moran, Shor, Wilber).
//!
//! Matrices are implicit: anything implementing [`MatrixView`] works, and
//! [`FnMatrix`] wraps a closure. For an *m* × *n* input the algorithm
//! queries O(*m* + *n*) entries.
//!
//! Ties are broken toward the smallest index, which makes the returned
//! argmin sequence non-decreasing. Inputs that are not totally monotone
//! are not detected; [`column_minima_checked`] re-runs a full scan when
//! that matters.

/// Implicit matrix. `get` must be pure and defined on the whole rectangle.
pub trait MatrixView {
    type Value: Ord + Copy + Default;
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn get(&self, row: usize, col: usize) -> Self::Value;
}

/// A [`MatrixView`] backed by a closure.
pub struct FnMatrix<F> {
    nrows: usize,
    ncols: usize,
    f: F,
}

impl<F> FnMatrix<F> {
    pub fn new(nrows: usize, ncols: usize, f: F) -> Self {
        FnMatrix { nrows, ncols, f }
    }
}

impl<T: Ord + Copy + Default, F: Fn(usize, usize) -> T> MatrixView for FnMatrix<F> {
    type Value = T;
    fn nrows(&self) -> usize {
        self.nrows
    }
    fn ncols(&self) -> usize {
        self.ncols
    }
    #[inline]
    fn get(&self, row: usize, col: usize) -> T {
        (self.f)(row, col)
    }
}

/// Minimum of one row or column: the value and where it was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Minimum<T> {
    pub value: T,
    pub index: usize,
}

/// Column minima of a matrix that is totally monotone for columns: for
/// `r < r'` and `c < c'`, `M[r][c] > M[r'][c]` implies `M[r][c'] > M[r'][c']`.
pub fn column_minima<M: MatrixView>(m: &M) -> Vec<Minimum<M::Value>> {
    if m.ncols() == 0 {
        return Vec::new();
    }
    assert!(m.nrows() > 0, "column minima of a matrix without rows");
    row_minima_fn(m.ncols(), m.nrows(), &|c, r| m.get(r, c))
}

/// Row minima of a matrix that is totally monotone for rows: for `r < r'`
/// and `c < c'`, `M[r][c] > M[r][c']` implies `M[r'][c] > M[r'][c']`.
pub fn row_minima<M: MatrixView>(m: &M) -> Vec<Minimum<M::Value>> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    assert!(m.ncols() > 0, "row minima of a matrix without columns");
    row_minima_fn(m.nrows(), m.ncols(), &|r, c| m.get(r, c))
}

/// Exhaustive O(rows·cols) column minima with the same tie-breaking.
pub fn scan_column_minima<M: MatrixView>(m: &M) -> Vec<Minimum<M::Value>> {
    (0..m.ncols())
        .map(|c| {
            let mut best = Minimum { value: m.get(0, c), index: 0 };
            for r in 1..m.nrows() {
                let v = m.get(r, c);
                if v < best.value {
                    best = Minimum { value: v, index: r };
                }
            }
            best
        })
        .collect()
}

/// Exhaustive O(rows·cols) row minima with the same tie-breaking.
pub fn scan_row_minima<M: MatrixView>(m: &M) -> Vec<Minimum<M::Value>> {
    (0..m.nrows())
        .map(|r| {
            let mut best = Minimum { value: m.get(r, 0), index: 0 };
            for c in 1..m.ncols() {
                let v = m.get(r, c);
                if v < best.value {
                    best = Minimum { value: v, index: c };
                }
            }
            best
        })
        .collect()
}

/// Disagreement between SMAWK and the exhaustive scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub column: usize,
}

/// [`column_minima`] followed by a full scan. Use when the input is not
/// known to be totally monotone.
pub fn column_minima_checked<M: MatrixView>(m: &M) -> Result<Vec<Minimum<M::Value>>, Mismatch> {
    let fast = column_minima(m);
    let slow = scan_column_minima(m);
    match fast.iter().zip(&slow).position(|(a, b)| a != b) {
        Some(column) => Err(Mismatch { column }),
        None => Ok(fast),
    }
}

/// Row minima over the implicit matrix `f` with leftmost tie-breaking.
///
/// Narrow matrices are scanned directly; the recursion only pays off once
/// there are more than a handful of columns.
pub(crate) fn row_minima_fn<T, F>(nrows: usize, ncols: usize, f: &F) -> Vec<Minimum<T>>
where
    T: Ord + Copy + Default,
    F: Fn(usize, usize) -> T,
{
    let mut out = vec![Minimum { value: T::default(), index: 0 }; nrows];
    if nrows == 0 {
        return out;
    }
    if ncols <= 4 || nrows * ncols <= 64 {
        for (r, slot) in out.iter_mut().enumerate() {
            let mut best = Minimum { value: f(r, 0), index: 0 };
            for c in 1..ncols {
                let v = f(r, c);
                if v < best.value {
                    best = Minimum { value: v, index: c };
                }
            }
            *slot = best;
        }
        return out;
    }
    let cols: Vec<usize> = (0..ncols).collect();
    let mut held = Vec::with_capacity(nrows);
    solve(Rows { first: 0, step: 1, count: nrows }, &cols, f, &mut out, &mut held);
    out
}

/// Rows `first, first + step, ...`; every recursion level keeps the odd
/// positions, so the active rows always form such a progression.
#[derive(Clone, Copy)]
struct Rows {
    first: usize,
    step: usize,
    count: usize,
}

impl Rows {
    #[inline]
    fn at(self, k: usize) -> usize {
        self.first + k * self.step
    }

    fn odd(self) -> Rows {
        Rows { first: self.first + self.step, step: 2 * self.step, count: self.count / 2 }
    }
}

fn solve<T, F>(rows: Rows, cols: &[usize], f: &F, out: &mut [Minimum<T>], held: &mut Vec<T>)
where
    T: Ord + Copy,
    F: Fn(usize, usize) -> T,
{
    if rows.count == 0 {
        return;
    }
    let cols = reduce(rows, cols, f, held);

    solve(rows.odd(), &cols, f, out, held);

    // Interpolate the even rows between the argmins of their odd neighbours.
    let mut lo = 0;
    for i in (0..rows.count).step_by(2) {
        let hi = if i + 1 < rows.count {
            let next = out[rows.at(i + 1)].index;
            lo + cols[lo..].binary_search(&next).expect("argmin is a kept column")
        } else {
            cols.len() - 1
        };
        let r = rows.at(i);
        let mut best = Minimum { value: f(r, cols[lo]), index: cols[lo] };
        for &c in &cols[lo + 1..=hi] {
            let v = f(r, c);
            if v < best.value {
                best = Minimum { value: v, index: c };
            }
        }
        out[r] = best;
        lo = hi;
    }
}

/// Drops columns that cannot hold a leftmost row minimum, leaving at most
/// `rows.count` columns in their original order.
fn reduce<T, F>(rows: Rows, cols: &[usize], f: &F, held: &mut Vec<T>) -> Vec<usize>
where
    T: Ord + Copy,
    F: Fn(usize, usize) -> T,
{
    if cols.len() <= rows.count {
        return cols.to_vec();
    }
    let mut stack: Vec<usize> = Vec::with_capacity(rows.count);
    // value of each kept column at the row matching its stack slot
    held.clear();
    for &c in cols {
        // f(rows[stack.len()], c) once a pop has computed it
        let mut pending: Option<T> = None;
        while let Some(&top) = held.last() {
            let v = f(rows.at(held.len() - 1), c);
            if v < top {
                stack.pop();
                held.pop();
                pending = Some(v);
            } else {
                break;
            }
        }
        let k = stack.len();
        if k < rows.count {
            let v = match pending {
                Some(v) => v,
                None => f(rows.at(k), c),
            };
            stack.push(c);
            held.push(v);
        }
    }
    stack
}

#[cfg(test)]
mod tests {
    use std::cell::Cell;

    use super::*;

    #[test]
    fn constant_matrix_ties_to_first_row() {
        let m = FnMatrix::new(5, 5, |_, _| 0u64);
        let mins = column_minima(&m);
        assert!(mins.iter().all(|x| *x == Minimum { value: 0, index: 0 }));
    }

    #[test]
    fn squared_difference() {
        let m = FnMatrix::new(8, 8, |r, c| (r as i64 - c as i64).pow(2));
        assert_eq!(column_minima(&m), scan_column_minima(&m));
        assert_eq!(row_minima(&m), scan_row_minima(&m));
    }

    #[test]
    fn diagonal_row_minima() {
        let m = FnMatrix::new(3, 3, |r, c| u64::from(r != c));
        let mins = row_minima(&m);
        assert_eq!(mins.iter().map(|m| m.index).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn single_row() {
        let vals = [5u64, 3, 9, 3, 1, 4];
        let m = FnMatrix::new(1, vals.len(), |_, c| vals[c]);
        assert_eq!(row_minima(&m), vec![Minimum { value: 1, index: 4 }]);
        let cm = column_minima(&m);
        assert_eq!(cm.len(), vals.len());
    }

    #[test]
    fn rectangular_shapes() {
        for (r, c) in [(1, 7), (7, 1), (3, 17), (17, 3), (64, 5), (5, 64)] {
            let m = FnMatrix::new(r, c, |i, j| (i as i64 * 3 - j as i64 * 2).pow(2));
            assert_eq!(column_minima(&m), scan_column_minima(&m), "{r}x{c}");
            assert_eq!(row_minima(&m), scan_row_minima(&m), "{r}x{c}");
        }
    }

    #[test]
    fn counts_queries_linearly() {
        let calls = Cell::new(0usize);
        let m = FnMatrix::new(256, 256, |r, c| {
            calls.set(calls.get() + 1);
            (r as i64 - c as i64).pow(2)
        });
        column_minima(&m);
        assert!(calls.get() <= 10 * 256, "{} queries", calls.get());
    }

    #[test]
    fn checked_detects_non_monotone_input() {
        let good = FnMatrix::new(4, 4, |r, c| (r as i64 - c as i64).abs());
        assert!(column_minima_checked(&good).is_ok());
        // anti-Monge: column minima jump from the last row back to the first
        let bad = FnMatrix::new(16, 16, |r, c| -(r as i64 - c as i64).pow(2));
        let scan = scan_column_minima(&bad);
        assert_eq!(scan[0].index, 15);
        assert_eq!(scan[15].index, 0);
        let Err(Mismatch { column }) = column_minima_checked(&bad) else {
            panic!("non-monotone input accepted");
        };
        assert_ne!(column_minima(&bad)[column], scan[column]);
    }
}
