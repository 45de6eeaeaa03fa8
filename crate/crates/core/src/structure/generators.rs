//! Seeded generators for test corpora and the `generate` command.
//!
//! All randomness comes from ChaCha8 so a seed reproduces the same graph on
//! every platform and release.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

fn build(adj: Vec<Vec<usize>>) -> Graph {
    Graph::from_adjacency(adj).expect("generators only emit connected simple graphs")
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `C_n` for `n >= 3`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Random recursive tree: vertex `i` hangs off a uniform earlier vertex.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "tree needs n >= 1")?;
    let mut rng = rng(seed);
    let mut adj = vec![Vec::new(); n];
    for v in 1..n {
        let u = rng.random_range(0..v);
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(build(adj))
}

/// Random chordal graph grown along a perfect elimination order.
///
/// Every vertex remembers the clique it was attached to. A new vertex picks a
/// uniform earlier vertex `u` and attaches to `u` plus each member of `u`'s
/// clique independently with probability `density`. The attachment set is a
/// clique, so reversing the insertion order is a perfect elimination order.
/// `density = 0` yields trees; `density = 1` yields dense clique-trees.
pub fn gen_random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph> {
    require(n >= 1, "chordal graph needs n >= 1")?;
    require((0.0..=1.0).contains(&density), "density must lie in [0, 1]")?;
    let mut rng = rng(seed);
    let mut adj = vec![Vec::new(); n];
    let mut attached: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        let u = rng.random_range(0..v);
        let mut clique = vec![u];
        for &w in &attached[u] {
            if rng.random_bool(density) {
                clique.push(w);
            }
        }
        for &w in &clique {
            adj[w].push(v);
            adj[v].push(w);
        }
        attached[v] = clique;
    }
    Ok(build(adj))
}

/// Random `k`-tree on `n >= k + 1` vertices: a `(k+1)`-clique grown by
/// vertices that attach to a random existing `k`-clique.
pub fn gen_random_k_tree(n: usize, k: usize, seed: u64) -> Result<Graph> {
    require(k >= 1 && n > k, "k-tree needs k >= 1 and n > k")?;
    let mut rng = rng(seed);
    let mut adj = vec![Vec::new(); n];
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for skip in 0..=k {
        cliques.push((0..=k).filter(|&x| x != skip).collect());
    }
    for v in k + 1..n {
        let base = cliques
            .choose(&mut rng)
            .expect("at least one k-clique")
            .clone();
        for &w in &base {
            adj[w].push(v);
            adj[v].push(w);
        }
        for skip in 0..k {
            let mut c: Vec<usize> = base
                .iter()
                .copied()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, x)| x)
                .collect();
            c.push(v);
            cliques.push(c);
        }
    }
    Ok(build(adj))
}

/// Relative weights of the one-vertex extensions used by [`gen_random_dh`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DhOpMix {
    pub pendant: f64,
    pub true_twin: f64,
    pub false_twin: f64,
}

impl Default for DhOpMix {
    fn default() -> Self {
        DhOpMix {
            pendant: 1.0,
            true_twin: 1.0,
            false_twin: 1.0,
        }
    }
}

/// Random distance-hereditary graph from `K1` by repeatedly adding a pendant
/// vertex, a true twin or a false twin of a uniform existing vertex.
///
/// A false twin of the lone vertex of `K1` would disconnect the graph, so the
/// second vertex is always a pendant.
pub fn gen_random_dh(n: usize, mix: DhOpMix, seed: u64) -> Result<Graph> {
    require(n >= 1, "distance-hereditary graph needs n >= 1")?;
    let weights = [mix.pendant, mix.true_twin, mix.false_twin];
    require(
        weights.iter().all(|w| w.is_finite() && *w >= 0.0) && weights.iter().sum::<f64>() > 0.0,
        "operation weights must be non-negative with a positive sum",
    )?;
    require(
        mix.pendant > 0.0 || mix.true_twin > 0.0 || n <= 1,
        "a pendant or true-twin weight is needed to leave K1",
    )?;
    let total: f64 = weights.iter().sum();
    let mut rng = rng(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        let u = rng.random_range(0..v);
        let op = if v == 1 {
            if mix.pendant > 0.0 {
                0
            } else {
                1
            }
        } else {
            let mut r = rng.random_range(0.0..total);
            let mut op = 0;
            while op < 2 && r >= weights[op] {
                r -= weights[op];
                op += 1;
            }
            op
        };
        let mut nb = match op {
            0 => vec![u],
            1 => {
                let mut nb = adj[u].clone();
                nb.push(u);
                nb
            }
            _ => adj[u].clone(),
        };
        nb.sort_unstable();
        for &w in &nb {
            adj[w].push(v);
        }
        adj[v] = nb;
    }
    Ok(build(adj))
}

/// Connected random graph: a random recursive tree plus every other pair as
/// an edge with probability `p`.
pub fn gen_random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require(n >= 1, "graph needs n >= 1")?;
    require(
        (0.0..=1.0).contains(&p),
        "edge probability must lie in [0, 1]",
    )?;
    let mut rng = rng(seed);
    let mut adj = vec![Vec::new(); n];
    let mut parent = vec![usize::MAX; n];
    for v in 1..n {
        let u = rng.random_range(0..v);
        parent[v] = u;
        adj[u].push(v);
        adj[v].push(u);
    }
    for u in 0..n {
        for v in u + 1..n {
            if parent[v] != u && rng.random_bool(p) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Ok(build(adj))
}
