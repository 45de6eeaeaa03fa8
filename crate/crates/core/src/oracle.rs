//! Exhaustive ground truth for small graphs.
//!
//! Every shortest `(s, t)`-path is a walk through the BFS layers of `s` that
//! stays inside `I(s, t)`, so enumeration follows exactly those edges. All
//! routines here are exponential in the worst case and guarded by an
//! [`EnumerationBudget`].

use crate::error::{BudgetScope, Error, Result};
use crate::graph::Graph;
use crate::metric::{set_eccentricity, DistanceMatrix, VertexPath};

/// Caps on the number of enumerated paths. Exceeding either aborts with
/// [`Error::BudgetExceeded`]; results are never silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    max_paths: u64,
    max_total: u64,
}

impl EnumerationBudget {
    pub const DEFAULT_MAX_PATHS: u64 = 1_000_000;
    pub const DEFAULT_MAX_TOTAL: u64 = 100_000_000;

    pub fn new(max_paths: u64, max_total: u64) -> Result<Self> {
        if max_paths == 0 || max_total == 0 {
            return Err(Error::InvalidParameter(
                "enumeration caps must be positive".into(),
            ));
        }
        Ok(EnumerationBudget {
            max_paths,
            max_total,
        })
    }

    /// Cap per `(s, t)` pair (or per source for source-anchored enumeration).
    pub fn max_paths(&self) -> u64 {
        self.max_paths
    }

    /// Cap over a whole oracle call.
    pub fn max_total(&self) -> u64 {
        self.max_total
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_paths: Self::DEFAULT_MAX_PATHS,
            max_total: Self::DEFAULT_MAX_TOTAL,
        }
    }
}

struct Tally {
    budget: EnumerationBudget,
    scope_count: u64,
    total: u64,
}

impl Tally {
    fn new(budget: EnumerationBudget) -> Self {
        Tally {
            budget,
            scope_count: 0,
            total: 0,
        }
    }

    fn start_scope(&mut self) {
        self.scope_count = 0;
    }

    fn bump(&mut self) -> Result<()> {
        self.scope_count += 1;
        self.total += 1;
        if self.scope_count > self.budget.max_paths {
            return Err(Error::BudgetExceeded {
                scope: BudgetScope::PerPair,
                cap: self.budget.max_paths,
            });
        }
        if self.total > self.budget.max_total {
            return Err(Error::BudgetExceeded {
                scope: BudgetScope::Global,
                cap: self.budget.max_total,
            });
        }
        Ok(())
    }
}

/// Calls `visit` on every shortest `(s, t)`-path, each exactly once.
fn walk_pair(
    g: &Graph,
    d: &DistanceMatrix,
    s: usize,
    t: usize,
    tally: &mut Tally,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    let mut stack = vec![s];
    descend_pair(g, d, t, &mut stack, tally, visit)
}

fn descend_pair(
    g: &Graph,
    d: &DistanceMatrix,
    t: usize,
    stack: &mut Vec<usize>,
    tally: &mut Tally,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    let v = *stack.last().expect("stack starts non-empty");
    if v == t {
        tally.bump()?;
        visit(stack);
        return Ok(());
    }
    let to_t = d.get(v, t);
    for &w in g.neighbors(v) {
        if d.get(w, t) + 1 == to_t {
            stack.push(w);
            descend_pair(g, d, t, stack, tally, visit)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Calls `visit` on every forward-maximal shortest path starting at `s`: the
/// walk goes one BFS layer deeper per step and stops only where no deeper
/// neighbor exists.
fn walk_source(
    g: &Graph,
    d: &DistanceMatrix,
    s: usize,
    tally: &mut Tally,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    let mut stack = vec![s];
    descend_source(g, d.row(s), &mut stack, tally, visit)
}

fn descend_source(
    g: &Graph,
    from_s: &[u32],
    stack: &mut Vec<usize>,
    tally: &mut Tally,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    let v = *stack.last().expect("stack starts non-empty");
    let depth = from_s[v];
    let mut extended = false;
    for &w in g.neighbors(v) {
        if from_s[w] == depth + 1 {
            extended = true;
            stack.push(w);
            descend_source(g, from_s, stack, tally, visit)?;
            stack.pop();
        }
    }
    if !extended {
        tally.bump()?;
        visit(stack);
    }
    Ok(())
}

/// Every shortest `(s, t)`-path. For `s == t` this is the single one-vertex path.
pub fn enumerate_shortest_paths(
    g: &Graph,
    d: &DistanceMatrix,
    s: usize,
    t: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<VertexPath>> {
    let mut tally = Tally::new(*budget);
    let mut out = Vec::new();
    walk_pair(g, d, s, t, &mut tally, &mut |p| {
        out.push(VertexPath::shortest_unchecked(p.to_vec()))
    })?;
    Ok(out)
}

/// The best path found by an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub best_path: VertexPath,
    pub eccentricity: u32,
    pub paths_examined: u64,
}

struct Best {
    path: Vec<usize>,
    ecc: u32,
}

impl Best {
    fn offer(&mut self, d: &DistanceMatrix, path: &[usize]) {
        let ecc = set_eccentricity(d, path);
        if ecc < self.ecc {
            self.ecc = ecc;
            self.path = path.to_vec();
        }
    }

    fn finish(self, tally: &Tally) -> OracleResult {
        OracleResult {
            best_path: VertexPath::shortest_unchecked(self.path),
            eccentricity: self.ecc,
            paths_examined: tally.total,
        }
    }
}

/// Minimum eccentricity over all shortest paths of the graph, one-vertex
/// paths included (they only matter for `K1`).
pub fn exact_mesp(
    g: &Graph,
    d: &DistanceMatrix,
    budget: &EnumerationBudget,
) -> Result<OracleResult> {
    let n = g.vertex_count();
    let mut tally = Tally::new(*budget);
    let mut best = Best {
        path: Vec::new(),
        ecc: u32::MAX,
    };
    for v in 0..n {
        tally.start_scope();
        tally.bump()?;
        best.offer(d, &[v]);
    }
    for s in 0..n {
        for t in s + 1..n {
            tally.start_scope();
            walk_pair(g, d, s, t, &mut tally, &mut |p| best.offer(d, p))?;
            if best.ecc == 0 {
                return Ok(best.finish(&tally));
            }
        }
    }
    Ok(best.finish(&tally))
}

/// Minimum eccentricity over the shortest `(s, t)`-paths.
pub fn exact_pair_mesp(
    g: &Graph,
    d: &DistanceMatrix,
    s: usize,
    t: usize,
    budget: &EnumerationBudget,
) -> Result<OracleResult> {
    let mut tally = Tally::new(*budget);
    let mut best = Best {
        path: Vec::new(),
        ecc: u32::MAX,
    };
    walk_pair(g, d, s, t, &mut tally, &mut |p| best.offer(d, p))?;
    Ok(best.finish(&tally))
}

/// Minimum eccentricity over forward-maximal shortest paths that start at `s`.
pub fn exact_source_mesp(
    g: &Graph,
    d: &DistanceMatrix,
    s: usize,
    budget: &EnumerationBudget,
) -> Result<OracleResult> {
    let mut tally = Tally::new(*budget);
    let mut best = Best {
        path: Vec::new(),
        ecc: u32::MAX,
    };
    walk_source(g, d, s, &mut tally, &mut |p| best.offer(d, p))?;
    Ok(best.finish(&tally))
}

/// The projection gap: over every shortest path `P`, every vertex `x` and
/// every pair of members of `Pr(x, P)` with no member strictly between them,
/// the largest path distance between the pair, minus one, floored at zero.
pub fn exact_projection_gap(
    g: &Graph,
    d: &DistanceMatrix,
    budget: &EnumerationBudget,
) -> Result<u32> {
    let n = g.vertex_count();
    let mut tally = Tally::new(*budget);
    let mut gap = 0u32;
    for s in 0..n {
        for t in s + 1..n {
            // Gaps of size >= 1 need at least three path vertices.
            if d.get(s, t) < 2 {
                continue;
            }
            tally.start_scope();
            walk_pair(g, d, s, t, &mut tally, &mut |p| {
                gap = gap.max(path_projection_gap(d, p));
            })?;
        }
    }
    Ok(gap)
}

/// Largest `distance - 1` between consecutive projection members on one path.
pub(crate) fn path_projection_gap(d: &DistanceMatrix, path: &[usize]) -> u32 {
    let mut gap = 0;
    for x in 0..d.len() {
        let row = d.row(x);
        let min = path.iter().map(|&p| row[p]).min().unwrap_or(0);
        let mut prev: Option<usize> = None;
        for (i, &p) in path.iter().enumerate() {
            if row[p] == min {
                if let Some(j) = prev {
                    gap = gap.max((i - j - 1) as u32);
                }
                prev = Some(i);
            }
        }
    }
    gap
}
