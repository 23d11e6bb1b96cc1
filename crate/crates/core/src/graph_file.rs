//! Plain-text edge-list format.
//!
//! ```text
//! # comment lines start with '#'
//! digraph loops
//! a b
//! b a
//! a a
//! ```
//!
//! The header is `graph` or `digraph`, optionally followed by `loops`
//! (digraphs only). Every other non-blank line holds one edge as two
//! whitespace-separated labels. Labels receive dense ids in order of first
//! appearance.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, EdgeId, Graph, Vertex};
use crate::topologies::Topology;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(DiGraph),
}

impl AnyGraph {
    pub fn order(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.order(),
            AnyGraph::Directed(g) => g.order(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.size(),
            AnyGraph::Directed(g) => g.size(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        match self {
            AnyGraph::Undirected(g) => g.edge(e),
            AnyGraph::Directed(g) => g.edge(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: AnyGraph,
    pub labels: Vec<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl GraphFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| parse_error(1, "missing `graph` or `digraph` header"))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let (directed, loops) = match tokens.as_slice() {
            ["graph"] => (false, false),
            ["digraph"] => (true, false),
            ["digraph", "loops"] => (true, true),
            ["graph", "loops"] => {
                return Err(parse_error(header_line, "undirected graphs cannot have loops"))
            }
            _ => {
                return Err(parse_error(
                    header_line,
                    format!("expected `graph` or `digraph [loops]`, found `{header}`"),
                ))
            }
        };

        let mut ids: HashMap<String, Vertex> = HashMap::new();
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (number, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let [a, b] = tokens.as_slice() else {
                return Err(parse_error(
                    number,
                    format!("expected two labels, found {}", tokens.len()),
                ));
            };
            let mut id_of = |label: &str| {
                *ids.entry(label.to_string()).or_insert_with(|| {
                    labels.push(label.to_string());
                    labels.len() - 1
                })
            };
            let (u, v) = (id_of(a), id_of(b));
            if u == v && !loops {
                return Err(parse_error(number, format!("self-loop at `{a}` not allowed")));
            }
            let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            if !seen.insert(key) {
                return Err(parse_error(number, format!("duplicate edge `{a} {b}`")));
            }
            edges.push((u, v));
        }

        let n = labels.len();
        let graph = if directed {
            AnyGraph::Directed(DiGraph::new(n, edges, loops)?)
        } else {
            AnyGraph::Undirected(Graph::new(n, edges)?)
        };
        Ok(GraphFile { graph, labels })
    }

    pub fn from_topology(t: &Topology) -> Self {
        GraphFile {
            graph: AnyGraph::Directed(t.graph.clone()),
            labels: t.labels.clone(),
        }
    }

    /// Canonical text: header then one edge per line in edge-id order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.graph {
            AnyGraph::Undirected(_) => out.push_str("graph\n"),
            AnyGraph::Directed(g) if g.allows_loops() => out.push_str("digraph loops\n"),
            AnyGraph::Directed(_) => out.push_str("digraph\n"),
        }
        for e in 0..self.graph.size() {
            let (u, v) = self.graph.edge(e);
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }

    pub fn vertex_id(&self, label: &str) -> Result<Vertex> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `u—v` for undirected edges, `u→v` for directed ones.
    pub fn edge_label(&self, e: EdgeId) -> String {
        let (u, v) = self.graph.edge(e);
        let arrow = if self.graph.is_directed() { '→' } else { '—' };
        format!("{}{arrow}{}", self.labels[u], self.labels[v])
    }

    /// Accepts the canonical edge label, its ASCII form (`u-v`, `u->v`) and,
    /// for undirected edges, either orientation.
    pub fn edge_id(&self, label: &str) -> Result<EdgeId> {
        let directed = self.graph.is_directed();
        (0..self.graph.size())
            .find(|&e| {
                let (u, v) = self.graph.edge(e);
                let (a, b) = (&self.labels[u], &self.labels[v]);
                let forms = if directed {
                    vec![format!("{a}→{b}"), format!("{a}->{b}")]
                } else {
                    vec![
                        format!("{a}—{b}"),
                        format!("{a}-{b}"),
                        format!("{b}—{a}"),
                        format!("{b}-{a}"),
                    ]
                };
                forms.iter().any(|f| f == label)
            })
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}
