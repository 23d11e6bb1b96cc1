use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, is_connected, EdgeId, Graph, Vertex};
use crate::line_graph::undirected_line_graph;
use crate::metric::{exact_metric_dimension_from, resolves, SolverConfig};

/// `ceil(log2 Δ(G)) <= μ(L(G)) <= |V(G)| - 2` for connected graphs on at
/// least five vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower_log: u32,
    pub upper: usize,
    pub applicable: bool,
}

fn ceil_log2(x: usize) -> u32 {
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}

pub fn line_dimension_bounds(g: &Graph) -> BoundsReport {
    BoundsReport {
        lower_log: ceil_log2(g.max_degree()),
        upper: g.order().saturating_sub(2),
        applicable: g.order() >= 5 && g.size() >= 2 && is_connected(g),
    }
}

fn require_bounds_domain(g: &Graph) -> Result<()> {
    all_pairs_distances(g).require_connected()?;
    if g.order() < 5 {
        return Err(Error::NotApplicable(format!(
            "line-graph bounds need at least 5 vertices, got {}",
            g.order()
        )));
    }
    Ok(())
}

pub fn log2_lower_bound(g: &Graph) -> Result<u32> {
    require_bounds_domain(g)?;
    Ok(ceil_log2(g.max_degree()))
}

/// BFS tree from vertex 0, neighbors visited in adjacency order. Returns the
/// tree edge ids sorted.
pub fn bfs_spanning_tree(g: &Graph) -> Vec<EdgeId> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut visited = vec![false; n];
    let mut tree = Vec::with_capacity(n - 1);
    let mut queue = VecDeque::from([0]);
    visited[0] = true;
    while let Some(u) = queue.pop_front() {
        for &e in g.incident_edges(u) {
            let (a, b) = g.edge(e);
            let v = if a == u { b } else { a };
            if !visited[v] {
                visited[v] = true;
                tree.push(e);
                queue.push_back(v);
            }
        }
    }
    tree.sort_unstable();
    tree
}

/// Line-graph resolving set of size at most `|V| - 2`.
///
/// For `|V| >= 6` this is the edge set of a BFS spanning tree minus the tree
/// edge at its smallest-id leaf. For `|V| = 5` the exact solver is used.
pub fn spanning_tree_resolving_set(g: &Graph, config: &SolverConfig) -> Result<Vec<Vertex>> {
    require_bounds_domain(g)?;
    let n = g.order();
    if n == 5 {
        let lgm = undirected_line_graph(g)?;
        let cert = exact_metric_dimension_from(&all_pairs_distances(&lgm.line), config)?;
        if cert.landmarks.len() > n - 2 {
            return Err(Error::VerificationFailed(format!(
                "line graph of a 5-vertex graph needs {} landmarks",
                cert.landmarks.len()
            )));
        }
        return Ok(cert.landmarks);
    }

    let tree = bfs_spanning_tree(g);
    let mut tree_degree = vec![0usize; n];
    for &e in &tree {
        let (a, b) = g.edge(e);
        tree_degree[a] += 1;
        tree_degree[b] += 1;
    }
    let leaf = (0..n)
        .find(|&v| tree_degree[v] == 1)
        .expect("a tree on >= 2 vertices has a leaf");
    spanning_tree_landmarks(g, &tree, leaf)
}

/// Edges of the spanning tree `tree` not incident to `leaf`, as line-graph
/// vertex ids, verified to resolve the line graph.
pub fn spanning_tree_landmarks(g: &Graph, tree: &[EdgeId], leaf: Vertex) -> Result<Vec<Vertex>> {
    require_bounds_domain(g)?;
    let n = g.order();
    let as_graph = Graph::new(n, tree.iter().map(|&e| g.edge(e)))
        .map_err(|_| Error::Unsupported("tree edges repeat an edge".into()))?;
    if tree.len() + 1 != n || !is_connected(&as_graph) {
        return Err(Error::Unsupported("edges do not form a spanning tree".into()));
    }
    if leaf >= n || as_graph.degree(leaf) != 1 {
        return Err(Error::Unsupported(format!("vertex {leaf} is not a leaf of the tree")));
    }

    let lgm = undirected_line_graph(g)?;
    let mut landmarks: Vec<Vertex> = tree
        .iter()
        .copied()
        .filter(|&e| {
            let (a, b) = g.edge(e);
            a != leaf && b != leaf
        })
        .map(|e| lgm.to_line[e])
        .collect();
    landmarks.sort_unstable();
    let outcome = resolves(&all_pairs_distances(&lgm.line), &landmarks)?;
    if let Some(pair) = outcome.witness {
        return Err(Error::VerificationFailed(format!(
            "spanning-tree landmarks leave line vertices {pair:?} unresolved"
        )));
    }
    Ok(landmarks)
}
