//! Hop distances and the metric vocabulary built on them: set eccentricity,
//! intervals, slices, projections and diametral pairs.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Marks "not reached yet" in BFS rows; never a valid distance.
pub(crate) const UNREACHED: u32 = u32::MAX;

/// Hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    bfs_into(g, source, &mut dist);
    dist
}

fn bfs_into(g: &Graph, source: usize, dist: &mut [u32]) {
    dist.fill(UNREACHED);
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHED {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
}

/// Multi-source BFS: distance from every vertex to the nearest member of `sources`.
pub(crate) fn bfs_from_set(g: &Graph, sources: &[usize]) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::with_capacity(g.vertex_count());
    for &s in sources {
        if dist[s] == UNREACHED {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHED {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Vertex furthest from the BFS root of `row`; ties go to the smallest id.
pub(crate) fn furthest(row: &[u32]) -> (usize, u32) {
    let mut best = (0, row[0]);
    for (v, &d) in row.iter().enumerate() {
        if d > best.1 {
            best = (v, d);
        }
    }
    best
}

/// All-pairs hop distances, stored row-major in one allocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// `d(x, S)`; `u32::MAX` for an empty set.
    #[inline]
    pub fn to_set(&self, x: usize, set: &[usize]) -> u32 {
        let row = self.row(x);
        set.iter().map(|&s| row[s]).min().unwrap_or(UNREACHED)
    }

    /// Builds a matrix from explicit rows. Intended for tests and bindings.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter(
                "distance rows must form a square matrix".into(),
            ));
        }
        Ok(DistanceMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }
}

/// One BFS per source; rows are filled in parallel on the current rayon pool.
pub fn all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut data = vec![UNREACHED; n * n];
    data.par_chunks_mut(n.max(1))
        .enumerate()
        .for_each(|(s, row)| bfs_into(g, s, row));
    DistanceMatrix { n, data }
}

/// A vertex sequence with consecutive vertices adjacent and no repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPath {
    vertices: Vec<usize>,
    is_shortest: bool,
}

impl VertexPath {
    /// Validates the sequence against `g` and records whether it is a
    /// shortest path between its ends.
    pub fn new(g: &Graph, d: &DistanceMatrix, vertices: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        if vertices.is_empty() {
            return Err(Error::InvalidPath("path has no vertices".into()));
        }
        let mut seen = vec![false; n];
        for &v in &vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPath(format!("vertex {v} repeats")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::InvalidPath(format!(
                "{} and {} are not adjacent",
                w[0], w[1]
            )));
        }
        let first = vertices[0];
        let last = vertices[vertices.len() - 1];
        let is_shortest = d.get(first, last) as usize == vertices.len() - 1;
        Ok(VertexPath {
            vertices,
            is_shortest,
        })
    }

    /// For sequences produced by walking BFS layers, which are shortest by construction.
    pub(crate) fn shortest_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        VertexPath {
            vertices,
            is_shortest: true,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn is_shortest(&self) -> bool {
        self.is_shortest
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// `max_v min_{s in set} d(v, s)`.
pub fn eccentricity_of_set(d: &DistanceMatrix, set: &[usize]) -> Result<u32> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(set_eccentricity(d, set))
}

pub(crate) fn set_eccentricity(d: &DistanceMatrix, set: &[usize]) -> u32 {
    let n = d.len();
    let mut best = vec![UNREACHED; n];
    for &s in set {
        for (b, &x) in best.iter_mut().zip(d.row(s)) {
            if x < *b {
                *b = x;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `I(s, t)`, sorted by vertex id.
pub fn interval(d: &DistanceMatrix, s: usize, t: usize) -> Vec<usize> {
    let st = d.get(s, t);
    let (rs, rt) = (d.row(s), d.row(t));
    (0..d.len()).filter(|&w| rs[w] + rt[w] == st).collect()
}

/// `S_i(s, t)`: interval vertices at distance `i` from `s`.
pub fn slice(d: &DistanceMatrix, s: usize, t: usize, i: u32) -> Result<Vec<usize>> {
    let st = d.get(s, t);
    if i > st {
        return Err(Error::SliceOutOfRange {
            index: i,
            length: st,
        });
    }
    let (rs, rt) = (d.row(s), d.row(t));
    Ok((0..d.len())
        .filter(|&w| rs[w] == i && rs[w] + rt[w] == st)
        .collect())
}

/// All slices of `I(s, t)` at once, indexed by distance from `s`.
pub fn slices(d: &DistanceMatrix, s: usize, t: usize) -> Vec<Vec<usize>> {
    let st = d.get(s, t);
    let mut out = vec![Vec::new(); st as usize + 1];
    let (rs, rt) = (d.row(s), d.row(t));
    for w in 0..d.len() {
        if rs[w] + rt[w] == st {
            out[rs[w] as usize].push(w);
        }
    }
    out
}

/// `Pr(x, P)`: the members of `path` closest to `x`, in path order.
pub fn projection(d: &DistanceMatrix, x: usize, path: &[usize]) -> Vec<usize> {
    let row = d.row(x);
    let Some(min) = path.iter().map(|&p| row[p]).min() else {
        return Vec::new();
    };
    path.iter().copied().filter(|&p| row[p] == min).collect()
}

/// Exact diameter, diametral pair and eccentricity vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricReport {
    pub diameter: u32,
    /// Lexicographically smallest `(u, v)` with `u <= v` at distance `diameter`.
    pub diametral_pair: (usize, usize),
    pub eccentricities: Vec<u32>,
}

pub fn metric_report(d: &DistanceMatrix) -> MetricReport {
    let n = d.len();
    let eccentricities: Vec<u32> = (0..n)
        .map(|u| d.row(u).iter().copied().max().unwrap_or(0))
        .collect();
    let diameter = eccentricities.iter().copied().max().unwrap_or(0);
    let diametral_pair = (0..n)
        .find_map(|u| {
            (eccentricities[u] == diameter)
                .then(|| (u..n).find(|&v| d.get(u, v) == diameter).map(|v| (u, v)))
                .flatten()
        })
        .unwrap_or((0, 0));
    MetricReport {
        diameter,
        diametral_pair,
        eccentricities,
    }
}

/// Furthest vertex `x` from vertex 0, then the furthest `y` from `x`.
pub fn double_sweep(g: &Graph) -> (usize, usize) {
    let (x, _) = furthest(&bfs_distances(g, 0));
    let (y, _) = furthest(&bfs_distances(g, x));
    (x, y)
}
