//! Chordality via lexicographic BFS and a perfect-elimination check.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Outcome of chordal recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// `peo[0]` is eliminated first: each vertex's later neighbors form a clique.
    Chordal { peo: Vec<usize> },
    /// An induced cycle on at least four vertices, in cyclic order.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let visit = lex_bfs(g);
    let peo: Vec<usize> = visit.iter().rev().copied().collect();
    match peo_violation(g, &peo) {
        None => Chordality::Chordal { peo },
        Some((v, u, w)) => {
            let cycle = cycle_through(g, v, u, w)
                .or_else(|| any_chordless_cycle(g))
                .expect("a non-chordal graph has a chordless cycle");
            Chordality::NotChordal { cycle }
        }
    }
}

/// Lexicographic BFS by partition refinement, starting at vertex 0.
/// Returns vertices in visit order.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    // Ordered classes; the front class holds the lexicographically largest labels.
    let mut classes: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut visited = vec![false; n];
    let mut marked = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                marked[w] = true;
            }
        }
        let mut refined = Vec::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&w| marked[w]);
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        classes = refined;
        for &w in g.neighbors(v) {
            marked[w] = false;
        }
    }
    order
}

/// Checks a perfect elimination ordering. On failure returns `(v, u, w)`
/// where `u` and `w` are non-adjacent later neighbors of `v`.
pub fn peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later
            .iter()
            .find(|&&w| w != parent && !g.has_edge(parent, w))
        {
            return Some((v, parent, w));
        }
    }
    None
}

/// For non-adjacent neighbors `u`, `w` of `v`: a shortest `u`-`w` path that
/// avoids the rest of `N[v]` closes an induced cycle through `v`.
fn cycle_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x] = true;
    }
    blocked[u] = false;
    blocked[w] = false;
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[w] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut x = w;
    while x != u {
        cycle.push(x);
        x = parent[x];
    }
    cycle.push(u);
    Some(cycle)
}

fn any_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.vertex_count() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    if let Some(c) = cycle_through(g, v, u, w) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}
