//! Exact minimum eccentricity shortest paths on distance-hereditary graphs.
//!
//! Recognition checks, from every root, that vertices of a layer that stay
//! connected beyond the layer above see the same neighbors in it. Path
//! extraction builds gate pointers towards the interval of the end pair,
//! flags the gates whose witnesses are hardest to reach, and picks per slice
//! the vertex adjacent to the most flagged gates.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{
    bfs_from_set, metric_report, set_eccentricity, slices, DistanceMatrix, VertexPath,
};
use crate::solver::{Algorithm, Certificate, Guarantee, Scope, SolveResult};
use crate::structure::layering::{layers, UnionFind};

/// Witness that a graph is not distance-hereditary: seen from `root`, `u` and
/// `v` lie in layer `layer` and in one component of the graph without layer
/// `layer - 1`, yet their neighborhoods in layer `layer - 1` differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DhViolation {
    pub root: usize,
    pub layer: u32,
    pub u: usize,
    pub v: usize,
}

impl From<DhViolation> for Error {
    fn from(w: DhViolation) -> Self {
        Error::NotDistanceHereditary {
            root: w.root,
            layer: w.layer,
            u: w.u,
            v: w.v,
        }
    }
}

pub fn is_distance_hereditary(g: &Graph, d: &DistanceMatrix) -> bool {
    distance_hereditary_violation(g, d).is_none()
}

/// First violation found, scanning roots in id order; `None` for
/// distance-hereditary graphs.
pub fn distance_hereditary_violation(g: &Graph, d: &DistanceMatrix) -> Option<DhViolation> {
    let n = g.vertex_count();
    let mut rep_of_component = vec![usize::MAX; n];
    for root in 0..n {
        let row = d.row(root);
        let by_layer = layers(d, root);
        let mut uf = UnionFind::new(n);
        // Deepest layer first: after adding layer k the forest holds exactly
        // the components of the subgraph induced by layers >= k.
        for k in (1..by_layer.len()).rev() {
            for &v in &by_layer[k] {
                for &w in g.neighbors(v) {
                    if row[w] as usize >= k {
                        uf.union(v, w);
                    }
                }
            }
            let up = k as u32 - 1;
            let mut touched = Vec::new();
            for &v in &by_layer[k] {
                let c = uf.find(v);
                let rep = rep_of_component[c];
                if rep == usize::MAX {
                    rep_of_component[c] = v;
                    touched.push(c);
                } else if !same_up_neighbors(g, row, up, rep, v) {
                    return Some(DhViolation {
                        root,
                        layer: k as u32,
                        u: rep,
                        v,
                    });
                }
            }
            for c in touched {
                rep_of_component[c] = usize::MAX;
            }
        }
    }
    None
}

fn same_up_neighbors(g: &Graph, row: &[u32], up: u32, a: usize, b: usize) -> bool {
    let na = g.neighbors(a).iter().filter(|&&w| row[w] == up);
    let nb = g.neighbors(b).iter().filter(|&&w| row[w] == up);
    na.eq(nb)
}

/// Gate pointers for the vertices outside `I(s, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateTable {
    /// `d(v, I(s, t))` for every vertex; zero inside the interval.
    pub interval_distance: Vec<u32>,
    /// `None` inside the interval. Vertices at distance 1 are their own gate;
    /// deeper vertices inherit the gate of their smallest neighbor one step
    /// closer to the interval.
    pub gate: Vec<Option<usize>>,
    /// `ecc(I(s, t))`.
    pub interval_eccentricity: u32,
}

impl GateTable {
    pub fn build(g: &Graph, interval: &[usize]) -> Self {
        let n = g.vertex_count();
        let interval_distance = bfs_from_set(g, interval);
        let interval_eccentricity = interval_distance.iter().copied().max().unwrap_or(0);
        let mut by_distance = vec![Vec::new(); interval_eccentricity as usize + 1];
        for v in 0..n {
            by_distance[interval_distance[v] as usize].push(v);
        }
        let mut gate = vec![None; n];
        if let Some(first) = by_distance.get(1) {
            for &v in first {
                gate[v] = Some(v);
            }
        }
        for (i, layer) in by_distance.iter().enumerate().skip(2) {
            for &v in layer {
                let closer = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|&u| interval_distance[u] as usize == i - 1)
                    .expect("BFS layers are connected downwards");
                gate[v] = gate[closer];
            }
        }
        GateTable {
            interval_distance,
            gate,
            interval_eccentricity,
        }
    }

    /// Gates of the vertices at distance `ecc(I(s, t))` whose neighborhood
    /// touches exactly one slice. `slice_of[v]` is the slice index of
    /// interval vertices and `u32::MAX` elsewhere.
    pub fn relevant_gates(&self, g: &Graph, slice_of: &[u32]) -> Vec<bool> {
        let n = g.vertex_count();
        let mut relevant = vec![false; n];
        if self.interval_eccentricity == 0 {
            return relevant;
        }
        let mut decided = vec![false; n];
        for v in 0..n {
            if self.interval_distance[v] != self.interval_eccentricity {
                continue;
            }
            let gate = self.gate[v].expect("vertices outside the interval have gates");
            if std::mem::replace(&mut decided[gate], true) {
                continue;
            }
            let mut touched = g
                .neighbors(gate)
                .iter()
                .map(|&w| slice_of[w])
                .filter(|&s| s != u32::MAX);
            let first = touched.next();
            relevant[gate] = first.is_some() && touched.all(|s| Some(s) == first);
        }
        relevant
    }
}

/// A shortest `(s, t)`-path of minimum eccentricity among all shortest
/// `(s, t)`-paths, for distance-hereditary `g`.
///
/// Distance-hereditarity is not re-checked here; on other graphs the picked
/// slice vertices may fail to form a path, which is reported as
/// [`Error::InvalidPath`].
pub fn dh_best_st_path(g: &Graph, d: &DistanceMatrix, s: usize, t: usize) -> Result<SolveResult> {
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let n = g.vertex_count();
    let slices = slices(d, s, t);
    let interval: Vec<usize> = slices.iter().flatten().copied().collect();
    let mut slice_of = vec![u32::MAX; n];
    for (i, sl) in slices.iter().enumerate() {
        for &v in sl {
            slice_of[v] = i as u32;
        }
    }
    let gates = GateTable::build(g, &interval);
    let relevant = gates.relevant_gates(g, &slice_of);

    let mut path = Vec::with_capacity(slices.len());
    path.push(s);
    for slice in &slices[1..slices.len() - 1] {
        let mut best = (slice[0], 0usize);
        for &v in slice {
            let hits = g.neighbors(v).iter().filter(|&&w| relevant[w]).count();
            if hits > best.1 {
                best = (v, hits);
            }
        }
        path.push(best.0);
    }
    path.push(t);

    let path = VertexPath::new(g, d, path)?;
    let eccentricity = set_eccentricity(d, path.vertices());
    Ok(SolveResult {
        path,
        eccentricity,
        algorithm: Algorithm::DistanceHereditary,
        certificate: Certificate {
            scope: Scope::Pair(s, t),
            guarantee: Guarantee::Exact,
            ..Certificate::default()
        },
    })
}

/// Global minimum eccentricity shortest path of a distance-hereditary graph:
/// the best path between a diametral pair.
///
/// The input is verified first; other graphs are refused with
/// [`Error::NotDistanceHereditary`].
pub fn dh_solve(g: &Graph, d: &DistanceMatrix) -> Result<SolveResult> {
    if let Some(w) = distance_hereditary_violation(g, d) {
        return Err(w.into());
    }
    let report = metric_report(d);
    let (x, y) = report.diametral_pair;
    if x == y {
        return Ok(SolveResult {
            path: VertexPath::new(g, d, vec![x])?,
            eccentricity: 0,
            algorithm: Algorithm::DistanceHereditary,
            certificate: Certificate {
                diametral_pair: Some((x, y)),
                guarantee: Guarantee::Exact,
                ..Certificate::default()
            },
        });
    }
    let mut result = dh_best_st_path(g, d, x, y)?;
    result.certificate.scope = Scope::Global;
    result.certificate.diametral_pair = Some((x, y));
    Ok(result)
}
