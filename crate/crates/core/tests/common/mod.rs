//! Reference implementations and corpora shared by the integration tests.
//! Nothing here calls into the algorithms under test; the oracles only take
//! a graph's adjacency lists.

#![allow(dead_code)]

use mesp::structure::{
    gen_random_chordal, gen_random_connected, gen_random_dh, gen_random_k_tree, DhOpMix,
};
use mesp::Graph;

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn dist_to_set(d: &[Vec<u32>], x: usize, set: &[usize]) -> u32 {
    set.iter().map(|&v| d[x][v]).min().unwrap_or(INF)
}

pub fn ecc_of_set(d: &[Vec<u32>], set: &[usize]) -> u32 {
    (0..d.len())
        .map(|x| dist_to_set(d, x, set))
        .max()
        .unwrap_or(0)
}

/// Every shortest `(s, t)`-path, by extending prefixes one step closer to
/// `t` at a time.
pub fn shortest_paths(g: &Graph, d: &[Vec<u32>], s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, d: &[Vec<u32>], t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *cur.last().unwrap();
        if v == t {
            out.push(cur.clone());
            return;
        }
        for &w in g.neighbors(v) {
            if d[w][t] + 1 == d[v][t] {
                cur.push(w);
                go(g, d, t, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, d, t, &mut vec![s], &mut out);
    out
}

/// Number of shortest `(s, t)`-paths by a layer-by-layer count.
pub fn count_shortest_paths(g: &Graph, d: &[Vec<u32>], s: usize, t: usize) -> u64 {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).filter(|&v| d[s][v] + d[v][t] == d[s][t]).collect();
    order.sort_by_key(|&v| d[s][v]);
    let mut count = vec![0u64; n];
    count[s] = 1;
    for &v in &order {
        for &w in g.neighbors(v) {
            if d[s][w] + 1 == d[s][v] {
                count[v] += count[w];
            }
        }
    }
    count[t]
}

/// Minimum eccentricity over all shortest paths (single vertices included).
pub fn brute_mesp(g: &Graph, d: &[Vec<u32>]) -> u32 {
    let n = g.vertex_count();
    let mut best = INF;
    for s in 0..n {
        for t in s..n {
            for p in shortest_paths(g, d, s, t) {
                best = best.min(ecc_of_set(d, &p));
            }
        }
    }
    best
}

pub fn brute_pair_mesp(g: &Graph, d: &[Vec<u32>], s: usize, t: usize) -> u32 {
    shortest_paths(g, d, s, t)
        .iter()
        .map(|p| ecc_of_set(d, p))
        .min()
        .unwrap()
}

/// Forward-maximal shortest paths from `s`: every shortest path from `s`
/// to a vertex with no neighbor further from `s`.
pub fn forward_maximal_paths(g: &Graph, d: &[Vec<u32>], s: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    (0..n)
        .filter(|&t| g.neighbors(t).iter().all(|&w| d[s][w] <= d[s][t]))
        .flat_map(|t| shortest_paths(g, d, s, t))
        .collect()
}

pub fn brute_source_mesp(g: &Graph, d: &[Vec<u32>], s: usize) -> u32 {
    forward_maximal_paths(g, d, s)
        .iter()
        .map(|p| ecc_of_set(d, p))
        .min()
        .unwrap()
}

/// Distance-hereditary test by the 4-point condition on all quadruples.
pub fn four_point_dh(d: &[Vec<u32>]) -> bool {
    let n = d.len();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    let mut s = [d[u][v] + d[w][x], d[u][w] + d[v][x], d[u][x] + d[v][w]];
                    s.sort_unstable();
                    let ok = s[1] == s[2] || (s[0] == s[1] && s[2] - s[0] <= 2);
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Chordality by searching all vertex subsets for an induced cycle of
/// length at least four. Exponential; `n <= 14`.
pub fn brute_chordal(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 14);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let deg = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| mask & (1 << w) != 0)
                .count()
        };
        if members.iter().any(|&v| deg(v) != 2) {
            continue;
        }
        // 2-regular: an induced cycle iff connected.
        let mut seen = 1u32 << members[0];
        let mut stack = vec![members[0]];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if mask & (1 << w) != 0 && seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if seen == mask {
            return false;
        }
    }
    true
}

/// Twice the hyperbolicity over all quadruples.
pub fn brute_hyperbolicity_x2(d: &[Vec<u32>]) -> u32 {
    let n = d.len();
    let mut best = 0;
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    let mut s = [d[u][v] + d[w][x], d[u][w] + d[v][x], d[u][x] + d[v][w]];
                    s.sort_unstable();
                    best = best.max(s[2] - s[1]);
                }
            }
        }
    }
    best
}

/// `d(x, R_s(v))` from the definition `R_s(v) = { w : v ∈ I(s, w) }`.
pub fn definitional_r_distance(d: &[Vec<u32>], s: usize, v: usize, x: usize) -> u32 {
    (0..d.len())
        .filter(|&w| d[s][v] + d[v][w] == d[s][w])
        .map(|w| d[x][w])
        .min()
        .unwrap()
}

/// Projection gap from its definition, over every shortest path.
pub fn brute_projection_gap(g: &Graph, d: &[Vec<u32>]) -> u32 {
    let n = g.vertex_count();
    let mut gap = 0;
    for s in 0..n {
        for t in s + 1..n {
            for p in shortest_paths(g, d, s, t) {
                for x in 0..n {
                    let m = dist_to_set(d, x, &p);
                    let idx: Vec<usize> = (0..p.len()).filter(|&i| d[x][p[i]] == m).collect();
                    for w in idx.windows(2) {
                        gap = gap.max((w[1] - w[0] - 1) as u32);
                    }
                }
            }
        }
    }
    gap
}

/// Clusters of the layering partition from `root`, by reachability within
/// each layer's upper set. Each cluster sorted; clusters sorted.
pub fn definitional_clusters(g: &Graph, d: &[Vec<u32>], root: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut clusters = Vec::new();
    let mut assigned = vec![false; n];
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let k = d[root][u];
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] && d[root][w] >= k {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let cluster: Vec<usize> = (0..n).filter(|&v| seen[v] && d[root][v] == k).collect();
        for &v in &cluster {
            assigned[v] = true;
        }
        clusters.push(cluster);
    }
    clusters.sort();
    clusters
}

pub fn is_mutually_furthest(d: &[Vec<u32>], x: usize, y: usize) -> bool {
    let ecc = |v: usize| d[v].iter().copied().max().unwrap();
    ecc(x) == d[x][y] && ecc(y) == d[x][y]
}

const DENSITIES: [f64; 7] = [0.02, 0.04, 0.07, 0.12, 0.25, 0.45, 0.75];

/// Connected random graphs with mixed density, `n` cycling through
/// `max_n / 2 ..= max_n`. Sparse entries are a tree plus a few chords,
/// which is where long isometric cycles and large projection gaps live.
pub fn random_corpus(count: usize, max_n: usize) -> Vec<Graph> {
    let lo = (max_n / 2).max(2);
    (0..count)
        .map(|i| {
            let n = lo + i % (max_n - lo + 1);
            gen_random_connected(n, DENSITIES[(i / 7) % DENSITIES.len()], 1000 + i as u64).unwrap()
        })
        .collect()
}

/// Random chordal graphs and `k`-trees with `2 <= n <= max_n`.
pub fn chordal_corpus(count: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = 2 + i % (max_n - 1);
            let seed = 2000 + i as u64;
            if i % 5 == 4 && n >= 4 {
                gen_random_k_tree(n, 1 + i % 3, seed).unwrap()
            } else {
                gen_random_chordal(n, [0.0, 0.3, 0.5, 0.7, 1.0][(i / 11) % 5], seed).unwrap()
            }
        })
        .collect()
}

/// Random distance-hereditary graphs with `2 <= n <= max_n` and varied
/// operation mixes.
pub fn dh_corpus(count: usize, max_n: usize) -> Vec<Graph> {
    let mixes = [
        DhOpMix::default(),
        DhOpMix {
            pendant: 3.0,
            true_twin: 1.0,
            false_twin: 1.0,
        },
        DhOpMix {
            pendant: 1.0,
            true_twin: 0.5,
            false_twin: 3.0,
        },
        DhOpMix {
            pendant: 1.0,
            true_twin: 3.0,
            false_twin: 0.5,
        },
    ];
    (0..count)
        .map(|i| {
            let n = 2 + i % (max_n - 1);
            gen_random_dh(n, mixes[(i / 11) % mixes.len()], 3000 + i as u64).unwrap()
        })
        .collect()
}

/// An isometric-cycle-heavy family: a cycle of length `c` with the other
/// vertices hung off it as random trees, plus `chords` random extra edges.
/// Projection gaps of 2 and more are common here.
pub fn cycle_with_trees(c: usize, n: usize, chords: usize, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for v in c..n {
        edges.push((rng.random_range(0..v), v));
    }
    for _ in 0..chords {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        let e = (u.min(v), u.max(v));
        if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub mod strategies {
    use super::*;
    use proptest::prelude::*;

    pub fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, 0.0..=1.0f64, any::<u64>())
            .prop_map(|(n, p, seed)| gen_random_connected(n, p * p, seed).unwrap())
    }

    pub fn chordal_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, 0.0..=1.0f64, any::<u64>())
            .prop_map(|(n, density, seed)| gen_random_chordal(n, density, seed).unwrap())
    }

    pub fn dh_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (
            1..=max_n,
            0.1..3.0f64,
            0.0..3.0f64,
            0.0..3.0f64,
            any::<u64>(),
        )
            .prop_map(|(n, pendant, true_twin, false_twin, seed)| {
                gen_random_dh(
                    n,
                    DhOpMix {
                        pendant,
                        true_twin,
                        false_twin,
                    },
                    seed,
                )
                .unwrap()
            })
    }

    pub fn cyclic_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (5..=max_n)
            .prop_flat_map(move |c| (Just(c), c..=max_n, 0..3usize, any::<u64>()))
            .prop_map(|(c, n, chords, seed)| cycle_with_trees(c, n, chords, seed))
    }

    /// Every family above, weighted towards the ones with larger gaps.
    pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        prop_oneof![
            2 => random_graph(max_n),
            1 => chordal_graph(max_n),
            1 => dh_graph(max_n),
            2 => cyclic_graph(max_n),
        ]
    }
}

/// Whether every vertex's later neighbors in `order` are pairwise adjacent.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    if pos.contains(&usize::MAX) {
        return false;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        later
            .iter()
            .all(|&a| later.iter().all(|&b| a == b || g.has_edge(a, b)))
    })
}
