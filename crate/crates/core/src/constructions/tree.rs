//! Terminal-vertex parameters of trees.
//!
//! An end-vertex `u` is a terminal vertex of the major vertex `v` when `u`
//! is strictly closer to `v` than to every other major vertex. Major
//! vertices with at least one terminal vertex are exterior.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, structural_predicates, Graph, Vertex};
use crate::line_graph::undirected_line_graph;
use crate::metric::resolves;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeProfile {
    pub end_vertices: Vec<Vertex>,
    pub major_vertices: Vec<Vertex>,
    pub exterior_major: Vec<Vertex>,
    /// Terminal vertices of each exterior major vertex, sorted.
    pub terminal_map: BTreeMap<Vertex, Vec<Vertex>>,
    pub sigma: usize,
    pub ex: usize,
}

impl TreeProfile {
    /// `σ(T) - ex(T)`.
    pub fn dimension(&self) -> usize {
        self.sigma - self.ex
    }
}

fn require_non_path_tree(t: &Graph) -> Result<()> {
    let summary = structural_predicates(t);
    if !summary.is_tree {
        Err(Error::NotATree)
    } else if summary.is_path {
        Err(Error::PathInput)
    } else {
        Ok(())
    }
}

pub fn tree_profile(t: &Graph) -> Result<TreeProfile> {
    require_non_path_tree(t)?;
    let dm = all_pairs_distances(t);
    let end_vertices: Vec<Vertex> = (0..t.order()).filter(|&v| t.degree(v) == 1).collect();
    let major_vertices: Vec<Vertex> = (0..t.order()).filter(|&v| t.degree(v) >= 3).collect();

    let mut terminal_map: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &u in &end_vertices {
        let distance = |v: Vertex| dm.row(u)[v];
        let nearest = major_vertices.iter().copied().find(|&v| {
            major_vertices
                .iter()
                .all(|&w| w == v || distance(v) < distance(w))
        });
        if let Some(v) = nearest {
            terminal_map.entry(v).or_default().push(u);
        }
    }
    let exterior_major: Vec<Vertex> = terminal_map.keys().copied().collect();
    let sigma = terminal_map.values().map(Vec::len).sum();
    let ex = exterior_major.len();
    Ok(TreeProfile {
        end_vertices,
        major_vertices,
        exterior_major,
        terminal_map,
        sigma,
        ex,
    })
}

/// `μ(T) = σ(T) - ex(T)` for a tree that is not a path.
pub fn tree_metric_dimension(t: &Graph) -> Result<usize> {
    Ok(tree_profile(t)?.dimension())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLineDimension {
    pub mu: usize,
    /// End-vertices minus one terminal vertex per exterior major vertex;
    /// resolves the tree itself.
    pub vertex_landmarks: Vec<Vertex>,
    /// Pendant edges of `vertex_landmarks`, as line-graph vertex ids.
    pub landmarks: Vec<Vertex>,
}

/// Line-graph metric dimension of a non-path tree with a verified
/// resolving set. The smallest terminal vertex of each exterior major vertex
/// is the one left out.
pub fn tree_line_metric_dimension(t: &Graph) -> Result<TreeLineDimension> {
    tree_line_metric_dimension_with(t, |_, terminals| terminals[0])
}

/// As [`tree_line_metric_dimension`], with `choose(v, terminals)` naming the
/// terminal vertex of `v` to leave out.
pub fn tree_line_metric_dimension_with<F>(t: &Graph, mut choose: F) -> Result<TreeLineDimension>
where
    F: FnMut(Vertex, &[Vertex]) -> Vertex,
{
    let profile = tree_profile(t)?;
    let mut omitted = Vec::with_capacity(profile.ex);
    for (&v, terminals) in &profile.terminal_map {
        let u = choose(v, terminals);
        if !terminals.contains(&u) {
            return Err(Error::Unsupported(format!(
                "vertex {u} is not a terminal vertex of {v}"
            )));
        }
        omitted.push(u);
    }
    let vertex_landmarks: Vec<Vertex> = profile
        .end_vertices
        .iter()
        .copied()
        .filter(|u| !omitted.contains(u))
        .collect();

    let lgm = undirected_line_graph(t)?;
    let mut landmarks: Vec<Vertex> = vertex_landmarks
        .iter()
        .map(|&w| lgm.to_line[t.incident_edges(w)[0]])
        .collect();
    landmarks.sort_unstable();
    let outcome = resolves(&all_pairs_distances(&lgm.line), &landmarks)?;
    if let Some(pair) = outcome.witness {
        return Err(Error::VerificationFailed(format!(
            "pendant-edge landmarks leave line vertices {pair:?} unresolved"
        )));
    }
    Ok(TreeLineDimension {
        mu: profile.dimension(),
        vertex_landmarks,
        landmarks,
    })
}
