//! Additive approximation: a shortest path between two mutually furthest
//! vertices. Within `k + 2` of optimal on chordal graphs and `k + 2.5λ` on
//! graphs of tree-length `λ`.

use crate::error::Result;
use crate::graph::Graph;
use crate::metric::{bfs_distances, furthest, set_eccentricity, DistanceMatrix, VertexPath};
use crate::solver::{AdditiveBound, Algorithm, Certificate, Guarantee, Scope, SolveResult};
use crate::structure::is_chordal;

/// Iterated BFS sweeps ending at a mutually furthest pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FurthestPairTrace {
    /// `(x_i, ecc(x_i))` for each sweep root; eccentricities strictly increase.
    pub sweeps: Vec<(usize, u32)>,
    /// `(x, y)` with `ecc(x) = ecc(y) = d(x, y)`; `x` is the last sweep root.
    pub pair: (usize, usize),
    /// `d(x, y)`.
    pub distance: u32,
}

/// Sweeps from `start`: each next root is the smallest-id vertex furthest from
/// the current one. Stops once the furthest vertex has the same eccentricity
/// as the current root. Each non-final sweep raises the eccentricity, so at
/// most `diam + 1` sweeps run.
pub fn mutually_furthest_pair(g: &Graph, start: usize) -> FurthestPairTrace {
    let mut x = start;
    let (mut y, mut ecc_x) = furthest(&bfs_distances(g, x));
    let mut sweeps = Vec::new();
    loop {
        sweeps.push((x, ecc_x));
        let (z, ecc_y) = furthest(&bfs_distances(g, y));
        if ecc_y == ecc_x {
            return FurthestPairTrace {
                sweeps,
                pair: (x, y),
                distance: ecc_x,
            };
        }
        debug_assert!(ecc_y > ecc_x);
        x = y;
        y = z;
        ecc_x = ecc_y;
    }
}

/// Smallest-id BFS-parent path from `x` to `y`, listed from `x`.
fn parent_path(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    let from_x = bfs_distances(g, x);
    let mut path = vec![y];
    let mut v = y;
    while v != x {
        v = *g
            .neighbors(v)
            .iter()
            .find(|&&u| from_x[u] + 1 == from_x[v])
            .expect("every non-root vertex has a BFS parent");
        path.push(v);
    }
    path.reverse();
    path
}

/// Mutually furthest pair from vertex 0, joined by a BFS-parent shortest path.
pub fn approx_mesp(g: &Graph, d: &DistanceMatrix) -> Result<SolveResult> {
    let trace = mutually_furthest_pair(g, 0);
    let (x, y) = trace.pair;
    let path = VertexPath::new(g, d, parent_path(g, x, y))?;
    let eccentricity = set_eccentricity(d, path.vertices());
    let bound = if is_chordal(g).is_chordal() {
        AdditiveBound::Chordal
    } else {
        AdditiveBound::TreeLength
    };
    Ok(SolveResult {
        path,
        eccentricity,
        algorithm: Algorithm::Approx,
        certificate: Certificate {
            scope: Scope::Global,
            guarantee: Guarantee::Additive(bound),
            trace: Some(trace),
            ..Certificate::default()
        },
    })
}
