//! Layering partitions: BFS layers from a root, each split into clusters of
//! vertices that stay connected without stepping closer to the root.

use crate::graph::Graph;
use crate::metric::DistanceMatrix;

/// Disjoint-set forest with path halving and union by size.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Vertices grouped by distance from `root`.
pub(crate) fn layers(d: &DistanceMatrix, root: usize) -> Vec<Vec<usize>> {
    let row = d.row(root);
    let depth = row.iter().copied().max().unwrap_or(0) as usize;
    let mut out = vec![Vec::new(); depth + 1];
    for (v, &k) in row.iter().enumerate() {
        out[k as usize].push(v);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeringPartition {
    pub root: usize,
    /// Sorted clusters, ordered by layer and then by smallest member.
    pub clusters: Vec<Vec<usize>>,
    /// Layer index of each cluster.
    pub cluster_layer: Vec<u32>,
}

/// Two vertices of layer `i` share a cluster iff they are connected in the
/// subgraph induced by layers `>= i`. Layers are added deepest first so one
/// union-find serves every layer.
pub fn layering_partition(g: &Graph, d: &DistanceMatrix, root: usize) -> LayeringPartition {
    let n = g.vertex_count();
    let row = d.row(root);
    let by_layer = layers(d, root);
    let mut uf = UnionFind::new(n);
    let mut per_layer: Vec<Vec<Vec<usize>>> = vec![Vec::new(); by_layer.len()];
    let mut slot = vec![usize::MAX; n];
    for (k, layer) in by_layer.iter().enumerate().rev() {
        for &v in layer {
            for &w in g.neighbors(v) {
                if row[w] as usize >= k {
                    uf.union(v, w);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut touched = Vec::new();
        for &v in layer {
            let r = uf.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
                touched.push(r);
            }
            groups[slot[r]].push(v);
        }
        for r in touched {
            slot[r] = usize::MAX;
        }
        per_layer[k] = groups;
    }
    let mut clusters = Vec::new();
    let mut cluster_layer = Vec::new();
    for (k, mut groups) in per_layer.into_iter().enumerate() {
        groups.sort_by_key(|c| c[0]);
        for c in groups {
            clusters.push(c);
            cluster_layer.push(k as u32);
        }
    }
    LayeringPartition {
        root,
        clusters,
        cluster_layer,
    }
}
