//! Minimum eccentricity shortest paths for graphs whose projection gap is at
//! most `γ`, by dynamic programming over windows.
//!
//! Fix a source `s`. A window is a run of `γ + 1` vertices `v_j .. v_{j+γ}`
//! with `d(s, v_{j+i}) = j + i` and consecutive vertices adjacent, so it lies
//! on some shortest path from `s`; `j` is its depth. A window at depth `j - 1`
//! is compatible with one at depth `j` when it is the same run shifted one
//! step towards `s`: its last `γ` vertices are the other's first `γ`.
//!
//! `R_s(v)` is the set of vertices reachable from `v` by walking away from
//! `s` one layer at a time. The down-set of a window `Q` with deepest vertex
//! `z` holds every `x` with `d(x, Q) <= d(x, R_s(z))`: vertices that a longer
//! path beyond `Q` cannot bring closer. `ε(Q)` is the best achievable
//! coverage radius of the down-set by a shortest path from `s` ending in `Q`,
//! and follows the recurrence
//!
//! ```text
//! ε(Q_j) = min over compatible Q_i of
//!          max( max_{x in V↓(Q_j) \ V↓(Q_i)} min(d(x, Q_i), d(x, Q_j)), ε(Q_i) )
//! ```
//!
//! At a window that cannot be extended the down-set is all of `V`, so `ε` is
//! the eccentricity of the best path through it.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::Graph;
use crate::metric::{set_eccentricity, DistanceMatrix, VertexPath, UNREACHED};
use crate::solver::{Algorithm, Certificate, Guarantee, Scope, SolveResult};
use crate::structure::{GammaEstimate, GammaMethod};

/// `d(x, R_s(v))` for every pair, for one source `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RDistanceTable {
    n: usize,
    // Row `v` holds `d(x, R_s(v))` for all `x`.
    data: Vec<u32>,
}

impl RDistanceTable {
    #[inline]
    pub fn get(&self, x: usize, v: usize) -> u32 {
        self.data[v * self.n + x]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u32] {
        &self.data[v * self.n..(v + 1) * self.n]
    }
}

/// Starts from `d(x, v)` and folds in every deeper neighbor's row, deepest
/// layer first, since `R_s(v)` is `v` plus the union of `R_s(w)` over them.
pub fn r_distance_table(g: &Graph, d: &DistanceMatrix, s: usize) -> RDistanceTable {
    let n = g.vertex_count();
    let from_s = d.row(s);
    let mut data: Vec<u32> = (0..n).flat_map(|v| d.row(v).iter().copied()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(from_s[v]));
    for v in order {
        for &w in g.neighbors(v) {
            if from_s[w] == from_s[v] + 1 {
                fold_min_row(&mut data, n, v, w);
            }
        }
    }
    RDistanceTable { n, data }
}

fn fold_min_row(data: &mut [u32], n: usize, dst: usize, src: usize) {
    let (dst_row, src_row) = if dst < src {
        let (lo, hi) = data.split_at_mut(src * n);
        (&mut lo[dst * n..(dst + 1) * n], &hi[..n])
    } else {
        let (lo, hi) = data.split_at_mut(dst * n);
        (&mut hi[..n], &lo[src * n..(src + 1) * n])
    };
    for (a, &b) in dst_row.iter_mut().zip(src_row) {
        if b < *a {
            *a = b;
        }
    }
}

pub type WindowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    /// Ordered from shallowest to deepest.
    pub vertices: Vec<usize>,
    pub depth: u32,
}

impl Window {
    /// Deepest vertex.
    pub fn tail(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }
}

/// All windows for one source, grouped by depth and indexed by their vertex
/// sequence.
#[derive(Clone, Debug)]
pub struct WindowSet {
    pub source: usize,
    pub gamma: u32,
    pub windows: Vec<Window>,
    pub by_depth: Vec<Vec<WindowId>>,
    index: HashMap<Vec<usize>, WindowId>,
}

impl WindowSet {
    pub fn id_of(&self, vertices: &[usize]) -> Option<WindowId> {
        self.index.get(vertices).copied()
    }

    pub fn len(&self) -> usize {
        self.windows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.windows.is_empty()
    }
}

/// Every layer-monotone run of `γ + 1` vertices, for depths `0 ..= ecc(s) - γ`.
/// Empty when `ecc(s) < γ`.
pub fn enumerate_windows(g: &Graph, d: &DistanceMatrix, s: usize, gamma: u32) -> WindowSet {
    let from_s = d.row(s);
    let ecc = from_s.iter().copied().max().unwrap_or(0);
    let mut set = WindowSet {
        source: s,
        gamma,
        windows: Vec::new(),
        by_depth: Vec::new(),
        index: HashMap::new(),
    };
    if ecc < gamma {
        return set;
    }
    let mut by_layer = vec![Vec::new(); ecc as usize + 1];
    for (v, &k) in from_s.iter().enumerate() {
        by_layer[k as usize].push(v);
    }
    for depth in 0..=(ecc - gamma) {
        let mut ids = Vec::new();
        for &v in &by_layer[depth as usize] {
            let mut run = vec![v];
            extend_runs(g, from_s, gamma as usize + 1, &mut run, &mut |vertices| {
                let id = set.windows.len();
                set.index.insert(vertices.to_vec(), id);
                set.windows.push(Window {
                    vertices: vertices.to_vec(),
                    depth,
                });
                ids.push(id);
            });
        }
        set.by_depth.push(ids);
    }
    set
}

fn extend_runs(
    g: &Graph,
    from_s: &[u32],
    len: usize,
    run: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if run.len() == len {
        emit(run);
        return;
    }
    let v = run[run.len() - 1];
    for &w in g.neighbors(v) {
        if from_s[w] == from_s[v] + 1 {
            run.push(w);
            extend_runs(g, from_s, len, run, emit);
            run.pop();
        }
    }
}

/// Windows one step shallower whose last `γ` vertices are the first `γ` of
/// `id`, in order of the prepended vertex id.
pub fn compatible_windows(
    g: &Graph,
    d: &DistanceMatrix,
    set: &WindowSet,
    id: WindowId,
) -> Vec<WindowId> {
    let window = &set.windows[id];
    if window.depth == 0 {
        return Vec::new();
    }
    let from_s = d.row(set.source);
    let head = window.vertices[0];
    let keep = set.gamma as usize;
    let mut key = Vec::with_capacity(keep + 1);
    g.neighbors(head)
        .iter()
        .filter(|&&p| from_s[p] + 1 == from_s[head])
        .filter_map(|&p| {
            key.clear();
            key.push(p);
            key.extend_from_slice(&window.vertices[..keep]);
            set.id_of(&key)
        })
        .collect()
}

/// `V↓(Q)` as a dense row: `d(x, Q)` for members, `u32::MAX` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownSet {
    pub distance: Vec<u32>,
}

impl DownSet {
    pub fn contains(&self, x: usize) -> bool {
        self.distance[x] != UNREACHED
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.distance.len()).filter(move |&x| self.contains(x))
    }
}

pub fn down_set(d: &DistanceMatrix, rtable: &RDistanceTable, window: &Window) -> DownSet {
    let n = d.len();
    let mut to_window = vec![UNREACHED; n];
    for &w in &window.vertices {
        for (t, &x) in to_window.iter_mut().zip(d.row(w)) {
            if x < *t {
                *t = x;
            }
        }
    }
    let beyond = rtable.row(window.tail());
    for (t, &r) in to_window.iter_mut().zip(beyond) {
        if *t > r {
            *t = UNREACHED;
        }
    }
    DownSet {
        distance: to_window,
    }
}

/// One DP cell. `epsilon` is `None` until some value has been assigned.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpCell {
    pub epsilon: Option<u32>,
    pub predecessor: Option<WindowId>,
}

#[derive(Clone, Debug)]
pub struct DpTable {
    pub windows: WindowSet,
    pub cells: Vec<DpCell>,
    /// Windows whose deepest vertex has no deeper neighbor.
    pub terminal: Vec<WindowId>,
}

impl DpTable {
    /// Shortest path from the source through the predecessor chain of `id`.
    pub fn reconstruct(&self, id: WindowId) -> Vec<usize> {
        let mut heads = Vec::new();
        let mut cur = id;
        while let Some(p) = self.cells[cur].predecessor {
            heads.push(self.windows.windows[p].vertices[0]);
            cur = p;
        }
        heads.reverse();
        heads.extend_from_slice(&self.windows.windows[id].vertices);
        heads
    }
}

/// `max_{x in V↓(Q_j) \ V↓(Q_i)} min(d(x, first(Q_i)), d(x, Q_j))`.
///
/// `Q_i` minus `Q_j` is just the first vertex of `Q_i`, so that vertex stands
/// in for all of `Q_i`.
fn transition_cost(d: &DistanceMatrix, head_i: usize, down_i: &DownSet, down_j: &DownSet) -> u32 {
    let to_head = d.row(head_i);
    let mut cost = 0;
    for ((&dj, &di), &dh) in down_j.distance.iter().zip(&down_i.distance).zip(to_head) {
        if dj != UNREACHED && di == UNREACHED {
            cost = cost.max(dj.min(dh));
        }
    }
    cost
}

/// Fills every window's `ε` and predecessor, depth by depth. Only the
/// previous depth's down-sets are kept alive.
pub fn epsilon_dp(g: &Graph, d: &DistanceMatrix, s: usize, gamma: u32) -> DpTable {
    let windows = enumerate_windows(g, d, s, gamma);
    let rtable = r_distance_table(g, d, s);
    let from_s = d.row(s);
    let mut cells = vec![DpCell::default(); windows.len()];
    let mut prev_down: HashMap<WindowId, DownSet> = HashMap::new();
    for (depth, ids) in windows.by_depth.iter().enumerate() {
        let mut cur_down = HashMap::with_capacity(ids.len());
        for &j in ids {
            let down_j = down_set(d, &rtable, &windows.windows[j]);
            if depth == 0 {
                let eps = down_j
                    .distance
                    .iter()
                    .copied()
                    .filter(|&x| x != UNREACHED)
                    .max();
                cells[j].epsilon = Some(eps.unwrap_or(0));
            } else {
                for i in compatible_windows(g, d, &windows, j) {
                    let (Some(eps_i), Some(down_i)) = (cells[i].epsilon, prev_down.get(&i)) else {
                        continue;
                    };
                    let head_i = windows.windows[i].vertices[0];
                    let candidate = transition_cost(d, head_i, down_i, &down_j).max(eps_i);
                    if cells[j].epsilon.is_none_or(|e| candidate < e) {
                        cells[j] = DpCell {
                            epsilon: Some(candidate),
                            predecessor: Some(i),
                        };
                    }
                }
            }
            cur_down.insert(j, down_j);
        }
        prev_down = cur_down;
    }
    let terminal = (0..windows.len())
        .filter(|&id| {
            let z = windows.windows[id].tail();
            g.neighbors(z).iter().all(|&w| from_s[w] != from_s[z] + 1)
        })
        .collect();
    DpTable {
        windows,
        cells,
        terminal,
    }
}

/// Forward-maximal shortest paths from `s` with at most `gamma` vertices;
/// windows cannot represent them.
fn short_maximal_paths(g: &Graph, from_s: &[u32], s: usize, gamma: u32) -> Vec<Vec<usize>> {
    fn walk(
        g: &Graph,
        from_s: &[u32],
        max_len: usize,
        run: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = run[run.len() - 1];
        let mut extended = false;
        for &w in g.neighbors(v) {
            if from_s[w] == from_s[v] + 1 {
                extended = true;
                if run.len() < max_len {
                    run.push(w);
                    walk(g, from_s, max_len, run, out);
                    run.pop();
                }
            }
        }
        if !extended {
            out.push(run.clone());
        }
    }
    let mut out = Vec::new();
    if gamma > 0 {
        walk(g, from_s, gamma as usize, &mut vec![s], &mut out);
    }
    out
}

/// A best forward-maximal shortest path starting at `s`, assuming the
/// projection gap of `g` is at most `gamma`.
pub fn solve_from_source(
    g: &Graph,
    d: &DistanceMatrix,
    s: usize,
    gamma: u32,
) -> Result<SolveResult> {
    let table = epsilon_dp(g, d, s, gamma);
    let mut best: Option<(u32, Vec<usize>)> = None;
    for &id in &table.terminal {
        let eps = table.cells[id]
            .epsilon
            .expect("every window has a compatible predecessor");
        if best.as_ref().is_none_or(|(b, _)| eps < *b) {
            best = Some((eps, table.reconstruct(id)));
        }
    }
    for path in short_maximal_paths(g, d.row(s), s, gamma) {
        let ecc = set_eccentricity(d, &path);
        if best.as_ref().is_none_or(|(b, _)| ecc < *b) {
            best = Some((ecc, path));
        }
    }
    let (_, vertices) = best.expect("some forward-maximal path exists");
    let path = VertexPath::new(g, d, vertices)?;
    let eccentricity = set_eccentricity(d, path.vertices());
    Ok(SolveResult {
        path,
        eccentricity,
        algorithm: Algorithm::GapDp,
        certificate: Certificate {
            scope: Scope::Source(s),
            source: Some(s),
            gamma: Some(GammaEstimate::new(gamma, GammaMethod::User)),
            guarantee: Guarantee::Conditional,
            ..Certificate::default()
        },
    })
}

/// Best path over all sources; sources are solved in parallel and the
/// smallest id wins ties.
pub fn solve_global(g: &Graph, d: &DistanceMatrix, gamma: u32) -> Result<SolveResult> {
    let per_source: Vec<SolveResult> = (0..g.vertex_count())
        .into_par_iter()
        .map(|s| solve_from_source(g, d, s, gamma))
        .collect::<Result<_>>()?;
    let mut best = per_source
        .into_iter()
        .reduce(|a, b| {
            if b.eccentricity < a.eccentricity {
                b
            } else {
                a
            }
        })
        .expect("graphs have at least one vertex");
    best.certificate.scope = Scope::Global;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::all_pairs;
    use crate::structure::{gen_cycle, gen_path, gen_random_connected};

    fn star() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn r_table_on_a_path() {
        let p4 = gen_path(4).unwrap();
        let d = all_pairs(&p4);
        let r = r_distance_table(&p4, &d, 0);
        assert_eq!(r.get(0, 1), 1);
        assert_eq!(r.get(0, 0), 0);
        assert_eq!(r.get(3, 1), 0);
        assert_eq!(r.row(3), d.row(3));
    }

    #[test]
    fn r_table_on_a_star() {
        let g = star();
        let d = all_pairs(&g);
        let r = r_distance_table(&g, &d, 1);
        assert_eq!(r.get(1, 0), 1);
        assert_eq!(r.get(2, 0), 0);
    }

    #[test]
    fn windows_on_p4() {
        let p4 = gen_path(4).unwrap();
        let d = all_pairs(&p4);
        let w0 = enumerate_windows(&p4, &d, 0, 0);
        assert_eq!(w0.len(), 4);
        let w1 = enumerate_windows(&p4, &d, 0, 1);
        let runs: Vec<_> = w1.windows.iter().map(|w| w.vertices.clone()).collect();
        assert_eq!(runs, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let id = w1.id_of(&[1, 2]).unwrap();
        let compat = compatible_windows(&p4, &d, &w1, id);
        assert_eq!(compat, vec![w1.id_of(&[0, 1]).unwrap()]);
        assert!(enumerate_windows(&p4, &d, 1, 3).is_empty());
    }

    #[test]
    fn down_sets() {
        let p4 = gen_path(4).unwrap();
        let d = all_pairs(&p4);
        let r = r_distance_table(&p4, &d, 0);
        let w = Window {
            vertices: vec![1],
            depth: 1,
        };
        assert_eq!(
            down_set(&d, &r, &w).members().collect::<Vec<_>>(),
            vec![0, 1]
        );
        let terminal = Window {
            vertices: vec![3],
            depth: 3,
        };
        assert_eq!(down_set(&d, &r, &terminal).members().count(), 4);
    }

    #[test]
    fn dp_on_small_graphs() {
        let p4 = gen_path(4).unwrap();
        let d = all_pairs(&p4);
        let table = epsilon_dp(&p4, &d, 0, 0);
        assert_eq!(table.terminal.len(), 1);
        let t = table.terminal[0];
        assert_eq!(table.cells[t].epsilon, Some(0));
        assert_eq!(table.reconstruct(t), vec![0, 1, 2, 3]);

        let g = star();
        let d = all_pairs(&g);
        let table = epsilon_dp(&g, &d, 1, 0);
        let eps: Vec<_> = table
            .terminal
            .iter()
            .map(|&t| table.cells[t].epsilon)
            .collect();
        assert_eq!(eps, vec![Some(1), Some(1), Some(1)]);
    }

    #[test]
    fn source_solutions() {
        let p4 = gen_path(4).unwrap();
        let d = all_pairs(&p4);
        for gamma in 0..=3 {
            let r = solve_from_source(&p4, &d, 0, gamma).unwrap();
            assert_eq!(
                (r.path.vertices(), r.eccentricity),
                (&[0, 1, 2, 3][..], 0),
                "γ={gamma}"
            );
        }
        // Window longer than the path: only the short-path fallback applies.
        let r = solve_from_source(&p4, &d, 0, 5).unwrap();
        assert_eq!(r.eccentricity, 0);

        let c7 = gen_cycle(7).unwrap();
        let d = all_pairs(&c7);
        assert_eq!(solve_global(&c7, &d, 2).unwrap().eccentricity, 2);
    }

    #[test]
    fn transition_cost_matches_full_window_distance() {
        for seed in 0..60 {
            let g = gen_random_connected(4 + seed as usize % 8, 0.15, seed).unwrap();
            let d = all_pairs(&g);
            for gamma in 0..3 {
                for s in 0..g.vertex_count() {
                    let set = enumerate_windows(&g, &d, s, gamma);
                    let r = r_distance_table(&g, &d, s);
                    for j in 0..set.len() {
                        let qj = &set.windows[j];
                        let down_j = down_set(&d, &r, qj);
                        for i in compatible_windows(&g, &d, &set, j) {
                            let qi = &set.windows[i];
                            let down_i = down_set(&d, &r, qi);
                            let full = down_j
                                .members()
                                .filter(|&x| !down_i.contains(x))
                                .map(|x| d.to_set(x, &qi.vertices).min(d.to_set(x, &qj.vertices)))
                                .max()
                                .unwrap_or(0);
                            assert_eq!(transition_cost(&d, qi.vertices[0], &down_i, &down_j), full);
                        }
                    }
                }
            }
        }
    }
}
