//! Test corpora and brute-force oracles shared by the integration tests.
//!
//! The oracles here deliberately avoid the library's BFS and subset search:
//! distances come from Floyd-Warshall and resolving sets from plain
//! combination enumeration.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use resolvekit::graph::{is_connected, is_directed_cycle, is_strongly_connected, DiGraph, Graph};

pub const INF: u32 = u32::MAX;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Floyd-Warshall over an explicit arc list.
pub fn floyd_warshall(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in arcs {
        if u != v {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn digraph_distances(g: &DiGraph) -> Vec<Vec<u32>> {
    floyd_warshall(g.order(), g.edges().iter().copied())
}

pub fn graph_distances(g: &Graph) -> Vec<Vec<u32>> {
    floyd_warshall(
        g.order(),
        g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]),
    )
}

/// Line digraph built straight from the definition: `(a, b)` whenever the
/// tail of `a` equals the head of `b`.
pub fn line_digraph_arcs(g: &DiGraph) -> Vec<(usize, usize)> {
    let e = g.edges();
    (0..e.len())
        .flat_map(|a| (0..e.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| e[a].1 == e[b].0)
        .collect()
}

/// Undirected line graph arcs (both directions) from the definition.
pub fn line_graph_arcs(g: &Graph) -> Vec<(usize, usize)> {
    let e = g.edges();
    let share = |a: (usize, usize), b: (usize, usize)| {
        a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
    };
    (0..e.len())
        .flat_map(|a| (0..e.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && share(e[a], e[b]))
        .collect()
}

pub fn oracle_resolves(d: &[Vec<u32>], w: &[usize]) -> bool {
    let mut seen = HashSet::new();
    (0..d.len()).all(|u| seen.insert(w.iter().map(|&x| d[u][x]).collect::<Vec<_>>()))
}

/// Smallest resolving-set size by plain enumeration, `None` if none of size
/// `<= max_k` resolves.
pub fn oracle_metric_dimension(d: &[Vec<u32>], max_k: usize) -> Option<usize> {
    let n = d.len();
    if n <= 1 {
        return Some(0);
    }
    (1..=max_k.min(n)).find(|&k| (0..n).combinations(k).any(|w| oracle_resolves(d, &w)))
}

/// True if some `k`-subset resolves.
pub fn oracle_some_subset_resolves(d: &[Vec<u32>], k: usize) -> bool {
    if k == 0 {
        return d.len() <= 1;
    }
    (0..d.len()).combinations(k).any(|w| oracle_resolves(d, &w))
}

pub fn directed_cycle(n: usize) -> DiGraph {
    DiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)), false).unwrap()
}

pub fn complete_digraph(n: usize) -> DiGraph {
    let edges = (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)));
    DiGraph::new(n, edges, false).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).tuple_combinations()).unwrap()
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::new(m + n, (0..m).cartesian_product(m..m + n)).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Every loopless digraph on `n` labelled vertices that is strongly
/// connected and not a directed cycle.
pub fn all_strong_non_cycle_digraphs(n: usize) -> Vec<DiGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            let g = DiGraph::new(n, edges, false).unwrap();
            (is_strongly_connected(&g) && !is_directed_cycle(&g)).then_some(g)
        })
        .collect()
}

/// Random loopless strongly connected non-cycle digraphs with
/// `3 <= |V| <= max_n` and `|E| <= max_m`, by rejection sampling.
pub fn random_strong_digraphs(count: usize, max_n: usize, max_m: usize, seed: u64) -> Vec<DiGraph> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=max_n);
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        let m = rng.gen_range(n + 1..=max_m.min(pairs.len()));
        pairs.shuffle(&mut rng);
        let g = DiGraph::new(n, pairs[..m].iter().copied(), false).unwrap();
        if is_strongly_connected(&g) && !is_directed_cycle(&g) {
            out.push(g);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Canonical adjacency bitmask of a graph: the minimum over relabelings.
fn canonical_mask(edges: &[(usize, usize)], perms: &[Vec<usize>], index: &HashMap<(usize, usize), usize>) -> u64 {
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << index[&(a, b)]
            })
        })
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if edges.len() + 1 < n {
            continue;
        }
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        if !is_connected(&g) {
            continue;
        }
        if seen.insert(canonical_mask(&edges, &perms, &index)) {
            out.push(g);
        }
    }
    out
}

/// Random connected graphs on `n` vertices with varying density.
pub fn random_connected_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p: f64 = rng.gen_range(0.2..0.9);
        let edges: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::new(n, edges).unwrap();
        if is_connected(&g) && g.size() >= 2 {
            out.push(g);
        }
    }
    out
}

/// Labelled tree from a Prüfer sequence.
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// AHU canonical string of a tree rooted at `root`.
fn rooted_code(g: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = g
        .neighbors(root)
        .iter()
        .copied()
        .filter(|&c| Some(c) != parent)
        .map(|c| rooted_code(g, c, Some(root)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Isomorphism-invariant code of a free tree: minimum over all roots.
pub fn tree_code(g: &Graph) -> String {
    (0..g.order()).map(|r| rooted_code(g, r, None)).min().unwrap_or_default()
}

/// Random labelled trees on 4..=max_n vertices, deduplicated up to
/// isomorphism, paths excluded.
pub fn random_non_path_trees(samples: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(4..=max_n);
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let t = tree_from_pruefer(&seq);
        if t.max_degree() <= 2 {
            continue;
        }
        if seen.insert(tree_code(&t)) {
            out.push(t);
        }
    }
    out
}
