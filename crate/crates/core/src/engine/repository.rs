use std::collections::HashMap;
use std::sync::Arc;

use crate::dist::{
    build_dist_direct_counted, merge_horizontal_counted, merge_vertical_counted, DistTable, WorkCounters,
};
use crate::error::Result;
use crate::partition::PartitionPlan;
use crate::scoring::ScoringScheme;
use crate::slp::{Rule, Slp, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepositoryMode {
    /// Keyed by a pair of grammar variables.
    ByVariablePair,
    /// Keyed by the literal substring pair (Four-Russians chunks).
    ByContentPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BuildStrategy {
    /// Memoised recursion over rule pairs, assembling each table from the
    /// tables of the children by horizontal and vertical merges.
    #[default]
    RecursiveMerge,
    /// One direct DP construction per distinct block.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RepoKey {
    Vars(VarId, VarId),
    Content(Box<[u8]>, Box<[u8]>),
}

/// DIST tables for every distinct block of a partition.
///
/// Blocks are addressed by a dense `(row piece class, column piece class)`
/// pair, where a class is a distinct variable (or distinct chunk).
#[derive(Debug, Clone)]
pub struct Repository {
    mode: RepositoryMode,
    strategy: BuildStrategy,
    keys: Vec<RepoKey>,
    tables: Vec<Arc<DistTable>>,
    /// `grid[ra * cols + cb]` indexes `tables`.
    grid: Vec<usize>,
    cols: usize,
    pub(crate) row_class: Vec<usize>,
    pub(crate) col_class: Vec<usize>,
    tables_built: usize,
    work: WorkCounters,
}

impl Repository {
    pub fn mode(&self) -> RepositoryMode {
        self.mode
    }

    pub fn strategy(&self) -> BuildStrategy {
        self.strategy
    }

    /// Number of tables the partition's blocks refer to.
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn keys(&self) -> &[RepoKey] {
        &self.keys
    }

    pub fn get(&self, key: &RepoKey) -> Option<&DistTable> {
        self.keys.iter().position(|k| k == key).map(|i| &*self.tables[i])
    }

    /// Every table constructed along the way, intermediate ones included.
    pub fn tables_built(&self) -> usize {
        self.tables_built
    }

    pub fn work(&self) -> WorkCounters {
        self.work
    }

    /// Table for block `(s, t)` of the partition.
    #[inline]
    pub fn block(&self, s: usize, t: usize) -> &DistTable {
        &self.tables[self.grid[self.row_class[s] * self.cols + self.col_class[t]]]
    }

    pub fn block_rows(&self) -> usize {
        self.row_class.len()
    }

    pub fn block_cols(&self) -> usize {
        self.col_class.len()
    }
}

/// Dense class ids for a sequence of keys, in order of first appearance.
fn classes<K: std::hash::Hash + Eq + Clone>(items: &[K]) -> (Vec<usize>, Vec<K>) {
    let mut seen: HashMap<K, usize> = HashMap::new();
    let mut distinct = Vec::new();
    let ids = items
        .iter()
        .map(|k| {
            *seen.entry(k.clone()).or_insert_with(|| {
                distinct.push(k.clone());
                distinct.len() - 1
            })
        })
        .collect();
    (ids, distinct)
}

/// Builds one table per distinct `(piece of A, piece of B)` variable pair.
pub fn build_repository(
    a: &Slp,
    b: &Slp,
    plan: &PartitionPlan,
    scheme: &ScoringScheme,
    strategy: BuildStrategy,
) -> Result<Repository> {
    let (row_class, vars_a) = classes(&plan.cover_a.iter().map(|p| p.var).collect::<Vec<_>>());
    let (col_class, vars_b) = classes(&plan.cover_b.iter().map(|p| p.var).collect::<Vec<_>>());
    let mut work = WorkCounters::default();
    let mut keys = Vec::with_capacity(vars_a.len() * vars_b.len());
    let mut tables = Vec::with_capacity(vars_a.len() * vars_b.len());
    let tables_built = match strategy {
        BuildStrategy::Direct => {
            let strs_b: Vec<Vec<u8>> = vars_b.iter().map(|&v| b.expand_var(v)).collect::<Result<_, _>>()?;
            for &va in &vars_a {
                let sa = a.expand_var(va)?;
                for (&vb, sb) in vars_b.iter().zip(&strs_b) {
                    tables.push(Arc::new(build_dist_direct_counted(&sa, sb, scheme, &mut work)?));
                    keys.push(RepoKey::Vars(va, vb));
                }
            }
            tables.len()
        }
        BuildStrategy::RecursiveMerge => {
            let mut memo = MergeMemo { a, b, scheme, memo: HashMap::new(), work: &mut work };
            for &va in &vars_a {
                for &vb in &vars_b {
                    tables.push(memo.table(va, vb)?);
                    keys.push(RepoKey::Vars(va, vb));
                }
            }
            memo.memo.len()
        }
    };
    Ok(Repository {
        mode: RepositoryMode::ByVariablePair,
        strategy,
        keys,
        tables,
        grid: (0..vars_a.len() * vars_b.len()).collect(),
        cols: vars_b.len(),
        row_class,
        col_class,
        tables_built,
        work,
    })
}

/// Builds tables for every distinct pair of literal chunks by direct DP.
pub fn build_content_repository(
    chunks_a: &[&[u8]],
    chunks_b: &[&[u8]],
    scheme: &ScoringScheme,
) -> Result<Repository> {
    let (row_class, distinct_a) = classes(chunks_a);
    let (col_class, distinct_b) = classes(chunks_b);
    let mut work = WorkCounters::default();
    let mut keys = Vec::with_capacity(distinct_a.len() * distinct_b.len());
    let mut tables = Vec::with_capacity(distinct_a.len() * distinct_b.len());
    for &ca in &distinct_a {
        for &cb in &distinct_b {
            tables.push(Arc::new(build_dist_direct_counted(ca, cb, scheme, &mut work)?));
            keys.push(RepoKey::Content(ca.into(), cb.into()));
        }
    }
    Ok(Repository {
        mode: RepositoryMode::ByContentPair,
        strategy: BuildStrategy::Direct,
        tables_built: tables.len(),
        keys,
        tables,
        grid: (0..distinct_a.len() * distinct_b.len()).collect(),
        cols: distinct_b.len(),
        row_class,
        col_class,
        work,
    })
}

struct MergeMemo<'a> {
    a: &'a Slp,
    b: &'a Slp,
    scheme: &'a ScoringScheme,
    memo: HashMap<(VarId, VarId), Arc<DistTable>>,
    work: &'a mut WorkCounters,
}

impl MergeMemo<'_> {
    /// Pairs that must be present before `(x, y)` can be assembled.
    fn missing(&self, x: VarId, y: VarId, out: &mut Vec<(VarId, VarId)>) {
        let mut need = |p: (VarId, VarId)| {
            if !self.memo.contains_key(&p) {
                out.push(p);
            }
        };
        match (self.a.rule(x), self.b.rule(y)) {
            (Rule::Terminal(_), Rule::Terminal(_)) => {}
            (Rule::Terminal(_), Rule::Concat(ys, yt)) => {
                need((x, ys));
                need((x, yt));
            }
            (Rule::Concat(xp, xq), Rule::Terminal(_)) => {
                need((xp, y));
                need((xq, y));
            }
            (Rule::Concat(xp, xq), Rule::Concat(ys, yt)) => {
                for xh in [xp, xq] {
                    if !self.memo.contains_key(&(xh, y)) {
                        need((xh, ys));
                        need((xh, yt));
                    }
                }
            }
        }
    }

    /// Assembles `(x, y)` assuming its dependencies are memoised.
    fn assemble(&mut self, x: VarId, y: VarId) -> Result<Arc<DistTable>> {
        let t = match (self.a.rule(x), self.b.rule(y)) {
            (Rule::Terminal(sa), Rule::Terminal(sb)) => {
                build_dist_direct_counted(&[sa], &[sb], self.scheme, self.work)?
            }
            (Rule::Terminal(_), Rule::Concat(ys, yt)) => {
                merge_horizontal_counted(&self.memo[&(x, ys)], &self.memo[&(x, yt)], self.work)?
            }
            (Rule::Concat(xp, xq), Rule::Terminal(_)) => {
                merge_vertical_counted(&self.memo[&(xp, y)], &self.memo[&(xq, y)], self.work)?
            }
            (Rule::Concat(xp, xq), Rule::Concat(ys, yt)) => {
                let top = self.half(xp, y, ys, yt)?;
                let bottom = self.half(xq, y, ys, yt)?;
                merge_vertical_counted(&top, &bottom, self.work)?
            }
        };
        Ok(Arc::new(t))
    }

    /// `(xh, y)` for `y = ys yt`, merging the two quarter tables if needed.
    fn half(&mut self, xh: VarId, y: VarId, ys: VarId, yt: VarId) -> Result<Arc<DistTable>> {
        if let Some(t) = self.memo.get(&(xh, y)) {
            return Ok(t.clone());
        }
        let t = Arc::new(merge_horizontal_counted(&self.memo[&(xh, ys)], &self.memo[&(xh, yt)], self.work)?);
        self.memo.insert((xh, y), t.clone());
        Ok(t)
    }

    fn table(&mut self, x: VarId, y: VarId) -> Result<Arc<DistTable>> {
        let mut stack = vec![(x, y)];
        let mut deps = Vec::new();
        while let Some(&(u, v)) = stack.last() {
            if self.memo.contains_key(&(u, v)) {
                stack.pop();
                continue;
            }
            deps.clear();
            self.missing(u, v, &mut deps);
            if deps.is_empty() {
                let t = self.assemble(u, v)?;
                self.memo.insert((u, v), t);
                stack.pop();
            } else {
                stack.extend(deps.iter().copied());
            }
        }
        Ok(self.memo[&(x, y)].clone())
    }
}
