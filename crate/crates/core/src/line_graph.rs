//! Line graphs of graphs and digraphs.
//!
//! Line-graph vertex `i` is original edge `i`; the bijection is still stored
//! explicitly so callers never rely on that coincidence.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DiGraph, EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphMap<G> {
    pub line: G,
    /// Original edge id to line-graph vertex.
    pub to_line: Vec<Vertex>,
    /// Line-graph vertex to original edge id.
    pub from_line: Vec<EdgeId>,
    /// Endpoints in the original graph of each line-graph vertex.
    pub endpoints: Vec<(Vertex, Vertex)>,
}

impl<G> LineGraphMap<G> {
    fn identity(line: G, endpoints: Vec<(Vertex, Vertex)>) -> Self {
        let ids: Vec<usize> = (0..endpoints.len()).collect();
        LineGraphMap {
            line,
            to_line: ids.clone(),
            from_line: ids,
            endpoints,
        }
    }
}

/// `(a, b)` is an edge of the line digraph iff the tail of `a` is the head
/// of `b`. A loop `a = (x, x)` yields the loop `(a, a)`.
pub fn directed_line_graph(g: &DiGraph) -> Result<LineGraphMap<DiGraph>> {
    if g.size() == 0 {
        return Err(Error::TooFewEdges { needed: 1, found: 0 });
    }
    let mut line_edges = Vec::new();
    for (a, &(_, tail)) in g.edges().iter().enumerate() {
        for &b in g.out_edges(tail) {
            line_edges.push((a, b));
        }
    }
    let line = DiGraph::new(g.size(), line_edges, g.allows_loops())?;
    Ok(LineGraphMap::identity(line, g.edges().to_vec()))
}

/// Two edges are adjacent in the line graph iff they share an endpoint.
pub fn undirected_line_graph(g: &Graph) -> Result<LineGraphMap<Graph>> {
    if g.size() < 2 {
        return Err(Error::TooFewEdges {
            needed: 2,
            found: g.size(),
        });
    }
    let mut line_edges = Vec::new();
    for v in 0..g.order() {
        let incident = g.incident_edges(v);
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                line_edges.push((a.min(b), a.max(b)));
            }
        }
    }
    line_edges.sort_unstable();
    let line = Graph::new(g.size(), line_edges)?;
    Ok(LineGraphMap::identity(line, g.edges().to_vec()))
}

/// A pair of line-graph vertices where the line-graph distance disagrees
/// with `d_G(tail(a), head(b)) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityViolation {
    pub a: Vertex,
    pub b: Vertex,
    pub line_distance: Option<u32>,
    pub expected: u32,
}

/// Checks `d_L(a, b) = d_G(x2, y1) + 1` for every ordered pair of distinct
/// line vertices `a = (x1, x2)`, `b = (y1, y2)`.
pub fn check_distance_identity(
    g: &DiGraph,
    lgm: &LineGraphMap<DiGraph>,
) -> Result<Vec<IdentityViolation>> {
    let base = all_pairs_distances(g);
    base.require_connected()?;
    let line = all_pairs_distances(&lgm.line);
    let m = lgm.line.order();
    let mut violations = Vec::new();
    for a in 0..m {
        let (_, x2) = lgm.endpoints[a];
        for b in (0..m).filter(|&b| b != a) {
            let (y1, _) = lgm.endpoints[b];
            // strongly connected, so finite
            let expected = base.get(x2, y1).expect("finite distance") + 1;
            let line_distance = line.get(a, b);
            if line_distance != Some(expected) {
                violations.push(IdentityViolation {
                    a,
                    b,
                    line_distance,
                    expected,
                });
            }
        }
    }
    Ok(violations)
}
