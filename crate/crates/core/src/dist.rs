//! DIST tables: shortest-path weights from every input vertex to every
//! output vertex of a rectangular block of the edit-distance grid.
//!
//! A block for row string `P` (length p) and column string `Q` (length q)
//! has local vertices `(r, c)` with `r in 0..=p` (top row 0) and
//! `c in 0..=q` (left column 0). Both boundaries are ordered from the
//! bottom-left corner towards the upper-right corner; with 0-based indices
//! and `x = p + q + 1`:
//!
//! * input `i <= p` is `(p - i, 0)`, input `i > p` is `(0, i - p)`;
//! * output `j <= q` is `(p, j)`, output `j > q` is `(p + q - j, q)`.
//!
//! Entry `(i, j)` is finite exactly when `i - p <= j <= i + q`.
//!
//! Downward edges delete a symbol of `P`, rightward edges insert a symbol
//! of `Q`, diagonal edges substitute.

use std::cell::Cell;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::scoring::ScoringScheme;
use crate::smawk;

/// Work done by table operations, for instrumentation.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct WorkCounters {
    pub smawk_queries: u64,
    pub dp_cells: u64,
    pub merges: u64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct DistTable {
    p: usize,
    q: usize,
    values: Vec<Cost>,
    max_finite: u64,
    row_str: Arc<[u8]>,
    col_str: Arc<[u8]>,
}

impl std::fmt::Debug for DistTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DistTable({}x{}):\n{}", self.p, self.q, self.dump())
    }
}

impl DistTable {
    /// Boundary size `p + q + 1`.
    #[inline]
    pub fn size(&self) -> usize {
        self.p + self.q + 1
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn row_str(&self) -> &[u8] {
        &self.row_str
    }

    pub fn col_str(&self) -> &[u8] {
        &self.col_str
    }

    /// Entry for 0-based input `i` and output `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Cost {
        self.values[i * self.size() + j]
    }

    pub fn row(&self, i: usize) -> &[Cost] {
        let x = self.size();
        &self.values[i * x..(i + 1) * x]
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u64 {
        self.max_finite
    }

    /// Whether `(i, j)` lies inside the reachability staircase.
    #[inline]
    pub fn reachable(&self, i: usize, j: usize) -> bool {
        j + self.p >= i && j <= i + self.q
    }

    /// Grid vertex of input `i`, as `(row, col)`.
    pub fn input_vertex(&self, i: usize) -> (usize, usize) {
        if i <= self.p {
            (self.p - i, 0)
        } else {
            (0, i - self.p)
        }
    }

    /// Grid vertex of output `j`, as `(row, col)`.
    pub fn output_vertex(&self, j: usize) -> (usize, usize) {
        if j <= self.q {
            (self.p, j)
        } else {
            (self.p + self.q - j, self.q)
        }
    }

    /// The same block seen with rows and columns swapped. Orderings reverse,
    /// so entry `(i, j)` moves to `(x-1-i, x-1-j)`.
    pub fn transpose(&self) -> DistTable {
        let x = self.size();
        let mut values = Vec::with_capacity(x * x);
        for i in (0..x).rev() {
            values.extend(self.row(i).iter().rev());
        }
        DistTable {
            p: self.q,
            q: self.p,
            values,
            max_finite: self.max_finite,
            row_str: self.col_str.clone(),
            col_str: self.row_str.clone(),
        }
    }

    /// Tab-separated rows, `inf` for unreachable entries.
    pub fn dump(&self) -> String {
        let x = self.size();
        let mut out = String::with_capacity(x * x * 3);
        for i in 0..x {
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    out.push('\t');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }

    fn from_parts(p: usize, q: usize, values: Vec<Cost>, row_str: Arc<[u8]>, col_str: Arc<[u8]>) -> Self {
        let max_finite = values.iter().filter_map(|v| v.value()).max().unwrap_or(0);
        DistTable { p, q, values, max_finite, row_str, col_str }
    }
}

/// Builds the table with one forward DP per input vertex, O(x·p·q).
pub fn build_dist_direct(p_str: &[u8], q_str: &[u8], scheme: &ScoringScheme) -> Result<DistTable> {
    build_dist_direct_counted(p_str, q_str, scheme, &mut WorkCounters::default())
}

pub(crate) fn build_dist_direct_counted(
    p_str: &[u8],
    q_str: &[u8],
    scheme: &ScoringScheme,
    work: &mut WorkCounters,
) -> Result<DistTable> {
    if p_str.is_empty() || q_str.is_empty() {
        return Err(Error::Dimension("DIST blocks need non-empty strings".into()));
    }
    let a = scheme.encode(p_str)?;
    let b = scheme.encode(q_str)?;
    scheme.path_bound(a.len(), b.len()).ok_or(Error::Overflow("DIST construction"))?;
    let (p, q) = (a.len(), b.len());
    let x = p + q + 1;
    let mut values = vec![Cost::UNREACHABLE; x * x];
    let mut row = vec![0u64; q + 1];
    for i in 0..x {
        let (r0, c0) = if i <= p { (p - i, 0) } else { (0, i - p) };
        let out = &mut values[i * x..(i + 1) * x];
        // first row of the reachable region: insertions only
        row[c0] = 0;
        for c in c0 + 1..=q {
            row[c] = row[c - 1] + scheme.ins_idx(b[c - 1]);
        }
        if r0 < p {
            out[p + q - r0] = Cost::finite(row[q]);
        }
        for r in r0 + 1..=p {
            let ar = a[r - 1];
            let del = scheme.del_idx(ar);
            let sub = scheme.sub_row(ar);
            let mut diag = row[c0];
            row[c0] += del;
            for c in c0 + 1..=q {
                let bc = b[c - 1];
                let up = row[c];
                let v = (up + del).min(row[c - 1] + scheme.ins_idx(bc)).min(diag + sub[bc as usize]);
                diag = up;
                row[c] = v;
            }
            if r < p {
                out[p + q - r] = Cost::finite(row[q]);
            }
        }
        for c in c0..=q {
            out[c] = Cost::finite(row[c]);
        }
        work.dp_cells += ((p - r0 + 1) * (q - c0 + 1)) as u64;
    }
    Ok(DistTable::from_parts(p, q, values, Arc::from(p_str), Arc::from(q_str)))
}

/// Sentinel for an unreachable entry in a staircase-shaped matrix. It is
/// larger than every finite value and grows with the distance from the
/// diagonal band, which keeps the matrix totally monotone.
#[inline]
fn sentinel(big: u64, span: usize, r: usize, c: usize) -> u64 {
    big * (1 + span as u64 + r.abs_diff(c) as u64)
}

fn sentinel_base(max_finite: u64, span: usize) -> Result<u64> {
    let big = max_finite.checked_add(1).ok_or(Error::Overflow("sentinel"))?;
    big.checked_mul(2 * span as u64 + 2)
        .filter(|&v| v < Cost::MAX_FINITE)
        .ok_or(Error::Overflow("sentinel"))?;
    Ok(big)
}

/// Boundary size up to which propagation scans the band directly.
const SMALL_BLOCK: usize = 16;

/// Output values of a block from its input values:
/// `O[j] = min_i I[i] + DIST[i][j]`, via column minima.
pub fn propagate(dist: &DistTable, inputs: &[Cost]) -> Result<Vec<Cost>> {
    let mut out = vec![Cost::ZERO; dist.size()];
    propagate_into(dist, inputs, &mut out, &mut WorkCounters::default())?;
    Ok(out)
}

pub(crate) fn propagate_into(
    dist: &DistTable,
    inputs: &[Cost],
    out: &mut [Cost],
    work: &mut WorkCounters,
) -> Result<()> {
    let x = dist.size();
    if inputs.len() != x || out.len() != x {
        return Err(Error::Dimension(format!(
            "block has {x} boundary vertices, got {} inputs",
            inputs.len()
        )));
    }
    if x <= SMALL_BLOCK {
        // tiny blocks: a direct min-plus pass over the finite band is cheaper
        if !inputs.iter().all(|v| v.is_finite()) {
            return Err(Error::Invalid("propagate needs finite inputs".into()));
        }
        let (p, q) = (dist.p, dist.q);
        for (j, o) in out.iter_mut().enumerate() {
            let band = j.saturating_sub(q)..=(j + p).min(x - 1);
            work.smawk_queries += band.clone().count() as u64;
            let mut best = u64::MAX;
            for i in band {
                best = best.min(inputs[i].raw().saturating_add(dist.values[i * x + j].raw()));
            }
            if best > Cost::MAX_FINITE {
                return Err(Error::Overflow("propagate"));
            }
            *o = Cost::finite(best);
        }
        return Ok(());
    }
    let mut lo = u64::MAX;
    let mut hi = 0;
    for v in inputs {
        let v = v.value().ok_or_else(|| Error::Invalid("propagate needs finite inputs".into()))?;
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let spread = hi - lo;
    let big = sentinel_base(spread.checked_add(dist.max_finite).ok_or(Error::Overflow("propagate"))?, x)?;
    let queries = Cell::new(0u64);
    let values = &dist.values;
    // transposed view: rows are outputs j, columns are inputs i
    let mins = smawk::row_minima_fn(x, x, &|j: usize, i: usize| {
        queries.set(queries.get() + 1);
        let d = values[i * x + j];
        if d.is_finite() {
            inputs[i].raw() - lo + d.raw()
        } else {
            sentinel(big, x, i, j)
        }
    });
    work.smawk_queries += queries.get();
    for (o, m) in out.iter_mut().zip(&mins) {
        *o = if m.value < big { Cost::finite(m.value + lo) } else { Cost::UNREACHABLE };
    }
    Ok(())
}

/// Table for `(P, Q1·Q2)` from the tables for `(P, Q1)` and `(P, Q2)`.
/// The right column of the left block is the left column of the right
/// block; paths crossing it are joined with a min-plus product whose
/// inner minimisation runs through SMAWK, O(x²) overall.
pub fn merge_horizontal(left: &DistTable, right: &DistTable) -> Result<DistTable> {
    merge_horizontal_counted(left, right, &mut WorkCounters::default())
}

pub(crate) fn merge_horizontal_counted(
    left: &DistTable,
    right: &DistTable,
    work: &mut WorkCounters,
) -> Result<DistTable> {
    if left.p != right.p || left.row_str != right.row_str {
        return Err(Error::Dimension("horizontal merge needs identical row strings".into()));
    }
    let p = left.p;
    let (q1, q2) = (left.q, right.q);
    let x1 = left.size();
    let x2 = right.size();
    let x = p + q1 + q2 + 1;
    let mut values = vec![Cost::UNREACHABLE; x * x];
    let big = sentinel_base(
        left.max_finite.checked_add(right.max_finite).ok_or(Error::Overflow("merge"))?,
        x2.max(p + 1),
    )?;
    let queries = Cell::new(0u64);
    let rv = &right.values;

    for i in 0..x1 {
        let lrow = left.row(i);
        let dst = &mut values[i * x..(i + 1) * x];
        dst[..q1].copy_from_slice(&lrow[..q1]);
        // shared column: left output q1+k is right input k, k in 0..=p
        let klo = i.saturating_sub(p + q1);
        let khi = i.min(p);
        let offsets = &lrow[q1 + klo..=q1 + khi];
        let mins = smawk::row_minima_fn(x2, khi - klo + 1, &|j: usize, kk: usize| {
            queries.set(queries.get() + 1);
            let k = klo + kk;
            let d = rv[k * x2 + j];
            if d.is_finite() {
                offsets[kk].raw() + d.raw()
            } else {
                sentinel(big, x2, k, j)
            }
        });
        for (slot, m) in dst[q1..].iter_mut().zip(&mins) {
            if m.value < big {
                *slot = Cost::finite(m.value);
            }
        }
    }
    for i in x1..x {
        values[i * x + q1..(i + 1) * x].copy_from_slice(right.row(i - q1));
    }
    work.smawk_queries += queries.get();
    work.merges += 1;
    work.dp_cells += (x * x) as u64;

    let cols: Vec<u8> = left.col_str.iter().chain(right.col_str.iter()).copied().collect();
    Ok(DistTable::from_parts(p, q1 + q2, values, left.row_str.clone(), Arc::from(cols)))
}

/// Table for `(P1·P2, Q)` from the tables for `(P1, Q)` on top and
/// `(P2, Q)` below. Runs the horizontal merge on the transposed blocks.
pub fn merge_vertical(top: &DistTable, bottom: &DistTable) -> Result<DistTable> {
    merge_vertical_counted(top, bottom, &mut WorkCounters::default())
}

pub(crate) fn merge_vertical_counted(
    top: &DistTable,
    bottom: &DistTable,
    work: &mut WorkCounters,
) -> Result<DistTable> {
    if top.q != bottom.q || top.col_str != bottom.col_str {
        return Err(Error::Dimension("vertical merge needs identical column strings".into()));
    }
    let merged = merge_horizontal_counted(&top.transpose(), &bottom.transpose(), work)?;
    Ok(merged.transpose())
}
