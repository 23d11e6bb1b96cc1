use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, is_directed_cycle, DiGraph, EdgeId, Vertex};
use crate::line_graph::directed_line_graph;
use crate::metric::resolves;

/// Resolving set of the line digraph of `g` obtained by dropping the
/// smallest-id in-coming edge of every vertex. Its size is `|E| - |V|`,
/// which is optimal for strongly connected digraphs other than cycles.
///
/// Returned as sorted line-graph vertex ids.
pub fn in_edge_deletion_set(g: &DiGraph) -> Result<Vec<Vertex>> {
    in_edge_deletion_set_with(g, |_, in_edges| in_edges[0])
}

/// As [`in_edge_deletion_set`], with `choose(x, in_edges)` naming the
/// in-coming edge of `x` to drop.
pub fn in_edge_deletion_set_with<F>(g: &DiGraph, mut choose: F) -> Result<Vec<Vertex>>
where
    F: FnMut(Vertex, &[EdgeId]) -> EdgeId,
{
    all_pairs_distances(g).require_connected()?;
    if is_directed_cycle(g) {
        return Err(Error::DirectedCycle);
    }
    let mut keep = vec![true; g.size()];
    for x in 0..g.order() {
        let in_edges = g.in_edges(x);
        let dropped = choose(x, in_edges);
        if !in_edges.contains(&dropped) {
            return Err(Error::Unsupported(format!(
                "edge {dropped} is not an in-coming edge of vertex {x}"
            )));
        }
        keep[dropped] = false;
    }

    let lgm = directed_line_graph(g)?;
    let mut landmarks: Vec<Vertex> = (0..g.size())
        .filter(|&e| keep[e])
        .map(|e| lgm.to_line[e])
        .collect();
    landmarks.sort_unstable();
    let outcome = resolves(&all_pairs_distances(&lgm.line), &landmarks)?;
    if let Some(pair) = outcome.witness {
        return Err(Error::VerificationFailed(format!(
            "in-edge deletion set leaves line vertices {pair:?} unresolved"
        )));
    }
    Ok(landmarks)
}
