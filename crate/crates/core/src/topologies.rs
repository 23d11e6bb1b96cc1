//! Flowered complete digraphs, de Bruijn digraphs and Kautz digraphs.
//!
//! de Bruijn and Kautz digraphs are built directly from words: vertices are
//! length-`n` words, ordered lexicographically to give ids, and each word
//! `s_1 ... s_n` points to every `s_2 ... s_n a`. Edge ids follow the order
//! of the length-`n + 1` words `s_1 ... s_n a`, so the line digraph of the
//! order-`n` graph coincides with the order-`n + 1` graph id for id.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Vertex};
use crate::line_graph::directed_line_graph;
use crate::metric::{exact_metric_dimension, SolverConfig};

const SYMBOLS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";
const MAX_EDGES: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    DeBruijn,
    Kautz,
    FloweredComplete,
    CompleteDigraph,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::DeBruijn => "de_bruijn",
            Family::Kautz => "kautz",
            Family::FloweredComplete => "flowered",
            Family::CompleteDigraph => "complete",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "de_bruijn" | "debruijn" | "de-bruijn" => Ok(Family::DeBruijn),
            "kautz" => Ok(Family::Kautz),
            "flowered" | "flowered_complete" => Ok(Family::FloweredComplete),
            "complete" | "complete_digraph" => Ok(Family::CompleteDigraph),
            other => Err(Error::Unsupported(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopologySpec {
    pub family: Family,
    pub d: usize,
    /// Word length; ignored by the complete families.
    pub n: usize,
}

/// A generated digraph with a label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    pub spec: TopologySpec,
    pub graph: DiGraph,
    pub labels: Vec<String>,
}

pub fn generate(spec: TopologySpec) -> Result<Topology> {
    match spec.family {
        Family::DeBruijn => de_bruijn(spec.d, spec.n),
        Family::Kautz => kautz(spec.d, spec.n),
        Family::FloweredComplete => flowered_complete(spec.d),
        Family::CompleteDigraph => complete_digraph(spec.d),
    }
}

fn complete_family(d: usize, loops: bool, family: Family) -> Result<Topology> {
    if d < 1 {
        return Err(Error::Unsupported(format!("{family} needs d >= 1")));
    }
    if d.checked_mul(d).is_none_or(|m| m > MAX_EDGES) {
        return Err(Error::Unsupported(format!("{family} with d = {d} is too large")));
    }
    let edges = (0..d).flat_map(|x| (0..d).filter(move |&y| loops || x != y).map(move |y| (x, y)));
    Ok(Topology {
        spec: TopologySpec { family, d, n: 1 },
        graph: DiGraph::new(d, edges, loops)?,
        labels: (0..d).map(|v| v.to_string()).collect(),
    })
}

/// Complete digraph on `d` vertices with a loop at every vertex.
pub fn flowered_complete(d: usize) -> Result<Topology> {
    complete_family(d, true, Family::FloweredComplete)
}

pub fn complete_digraph(d: usize) -> Result<Topology> {
    complete_family(d, false, Family::CompleteDigraph)
}

fn check_word_params(family: Family, d: usize, n: usize, alphabet: usize) -> Result<()> {
    if d < 2 || n < 1 {
        return Err(Error::Unsupported(format!("{family} needs d >= 2 and n >= 1")));
    }
    if alphabet > SYMBOLS.len() {
        return Err(Error::Unsupported(format!(
            "{family} alphabet of {alphabet} symbols exceeds {}",
            SYMBOLS.len()
        )));
    }
    let edges = d
        .checked_pow(n as u32 + 1)
        .and_then(|e| e.checked_add(d.checked_pow(n as u32)?));
    if edges.is_none_or(|e| e > MAX_EDGES) {
        return Err(Error::Unsupported(format!("{family}({d},{n}) is too large")));
    }
    Ok(())
}

fn word_label(word: &[u8]) -> String {
    word.iter().map(|&s| SYMBOLS[s as usize] as char).collect()
}

/// Builds the shift digraph on `words` (already in lexicographic order).
fn shift_digraph(
    spec: TopologySpec,
    words: Vec<Vec<u8>>,
    alphabet: u8,
    allowed: impl Fn(&[u8], u8) -> bool,
) -> Result<Topology> {
    let index: HashMap<&[u8], Vertex> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    let mut next = Vec::with_capacity(spec.n);
    for (i, word) in words.iter().enumerate() {
        for a in (0..alphabet).filter(|&a| allowed(word, a)) {
            next.clear();
            next.extend_from_slice(&word[1..]);
            next.push(a);
            edges.push((i, index[next.as_slice()]));
        }
    }
    let loops = spec.family == Family::DeBruijn;
    let graph = DiGraph::new(words.len(), edges, loops)?;
    Ok(Topology {
        spec,
        graph,
        labels: words.iter().map(|w| word_label(w)).collect(),
    })
}

/// de Bruijn digraph: length-`n` words over `d` symbols.
pub fn de_bruijn(d: usize, n: usize) -> Result<Topology> {
    check_word_params(Family::DeBruijn, d, n, d)?;
    let count = d.pow(n as u32);
    let words: Vec<Vec<u8>> = (0..count)
        .map(|mut value| {
            let mut word = vec![0u8; n];
            for slot in word.iter_mut().rev() {
                *slot = (value % d) as u8;
                value /= d;
            }
            word
        })
        .collect();
    let spec = TopologySpec {
        family: Family::DeBruijn,
        d,
        n,
    };
    shift_digraph(spec, words, d as u8, |_, _| true)
}

/// Kautz digraph: length-`n` words over `d + 1` symbols, adjacent symbols
/// distinct.
pub fn kautz(d: usize, n: usize) -> Result<Topology> {
    check_word_params(Family::Kautz, d, n, d + 1)?;
    let alphabet = (d + 1) as u8;
    let mut words: Vec<Vec<u8>> = (0..alphabet).map(|s| vec![s]).collect();
    for _ in 1..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = *w.last().expect("nonempty word");
                (0..alphabet).filter(move |&a| a != last).map(move |a| {
                    let mut longer = w.clone();
                    longer.push(a);
                    longer
                })
            })
            .collect();
    }
    let spec = TopologySpec {
        family: Family::Kautz,
        d,
        n,
    };
    shift_digraph(spec, words, alphabet, |word, a| word.last() != Some(&a))
}

/// Closed-form metric dimension of `B(d, n)` and `K(d, n)`.
pub fn corollary_mu(family: Family, d: usize, n: usize) -> Result<usize> {
    if d < 2 || n < 1 {
        return Err(Error::Unsupported(format!("{family} needs d >= 2 and n >= 1")));
    }
    let overflow = || Error::Unsupported(format!("{family}({d},{n}) overflows"));
    match family {
        Family::DeBruijn => d
            .checked_pow(n as u32 - 1)
            .and_then(|p| p.checked_mul(d - 1))
            .ok_or_else(overflow),
        Family::Kautz if n == 1 => Ok(d),
        Family::Kautz => d
            .checked_pow(n as u32 - 2)
            .and_then(|p| p.checked_mul(d.checked_mul(d)? - 1))
            .ok_or_else(overflow),
        other => Err(Error::Unsupported(format!(
            "no closed form for the {other} family"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FingerprintCheck {
    pub name: &'static str,
    pub direct: String,
    pub via_line: String,
    pub pass: bool,
}

/// Comparison of the word-built order-`n` digraph against the line digraph
/// of the word-built order-`n - 1` digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionReport {
    pub spec: TopologySpec,
    pub checks: Vec<FingerprintCheck>,
}

impl RecursionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn sorted_degrees(g: &DiGraph, degree: impl Fn(&DiGraph, Vertex) -> usize) -> Vec<usize> {
    let mut seq: Vec<usize> = (0..g.order()).map(|v| degree(g, v)).collect();
    seq.sort_unstable();
    seq
}

/// Compares counts, loops, degree sequences and exact metric dimension.
/// Also checks that the shift labeling maps one edge set onto the other.
pub fn cross_check_recursion(
    family: Family,
    d: usize,
    n: usize,
    config: &SolverConfig,
) -> Result<RecursionReport> {
    if !matches!(family, Family::DeBruijn | Family::Kautz) || n < 2 {
        return Err(Error::Unsupported(
            "recursion check needs the de_bruijn or kautz family with n >= 2".into(),
        ));
    }
    let spec = TopologySpec { family, d, n };
    let direct = generate(spec)?;
    if direct.graph.order() > config.size_cap {
        return Err(Error::CapExceeded {
            n: direct.graph.order(),
            cap: config.size_cap,
        });
    }
    let previous = generate(TopologySpec { n: n - 1, ..spec })?;
    let lgm = directed_line_graph(&previous.graph)?;
    let (a, b) = (&direct.graph, &lgm.line);

    let mut checks = Vec::new();
    let mut push = |name, direct: String, via_line: String| {
        let pass = direct == via_line;
        checks.push(FingerprintCheck {
            name,
            direct,
            via_line,
            pass,
        });
    };
    push("vertex_count", a.order().to_string(), b.order().to_string());
    push("edge_count", a.size().to_string(), b.size().to_string());
    push("loop_count", a.loop_count().to_string(), b.loop_count().to_string());
    push(
        "in_degree_sequence",
        format!("{:?}", sorted_degrees(a, DiGraph::in_degree)),
        format!("{:?}", sorted_degrees(b, DiGraph::in_degree)),
    );
    push(
        "out_degree_sequence",
        format!("{:?}", sorted_degrees(a, DiGraph::out_degree)),
        format!("{:?}", sorted_degrees(b, DiGraph::out_degree)),
    );

    // Line vertex (x, y) carries the word label(x) followed by the last
    // symbol of label(y).
    let index: HashMap<&str, Vertex> = direct
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let word_of_line_vertex = |e: Vertex| -> Option<Vertex> {
        let (x, y) = lgm.endpoints[e];
        let mut word = previous.labels[x].clone();
        word.push(previous.labels[y].chars().last()?);
        index.get(word.as_str()).copied()
    };
    let mapped: Option<Vec<(Vertex, Vertex)>> = b
        .edges()
        .iter()
        .map(|&(p, q)| Some((word_of_line_vertex(p)?, word_of_line_vertex(q)?)))
        .collect();
    let mut mapped_edges = mapped.unwrap_or_default();
    let mut direct_edges = a.edges().to_vec();
    mapped_edges.sort_unstable();
    direct_edges.sort_unstable();
    push(
        "edge_set_under_shift_labels",
        format!("{} edges", direct_edges.len()),
        if mapped_edges == direct_edges {
            format!("{} edges", mapped_edges.len())
        } else {
            "mismatch".into()
        },
    );

    let mu_direct = exact_metric_dimension(a, config)?.mu_claimed;
    let mu_line = exact_metric_dimension(b, config)?.mu_claimed;
    push(
        "exact_mu",
        format!("{mu_direct:?}"),
        format!("{mu_line:?}"),
    );
    Ok(RecursionReport { spec, checks })
}
