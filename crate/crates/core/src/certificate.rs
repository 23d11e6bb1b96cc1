//! JSON certificates and the command drivers behind the CLI.
//!
//! Every certificate that carries distance vectors has been checked against
//! the distance matrix of the graph it describes before it is returned.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::constructions::{
    in_edge_deletion_set, line_dimension_bounds, spanning_tree_resolving_set,
    tree_line_metric_dimension,
};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, is_directed_cycle, DistanceMatrix, Vertex};
use crate::graph_file::{AnyGraph, GraphFile};
use crate::line_graph::{directed_line_graph, undirected_line_graph};
use crate::metric::{exact_metric_dimension_from, resolves, ResolvingCertificate, SolverConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower_log: u32,
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub schema: u32,
    pub mode: String,
    pub input_summary: InputSummary,
    pub mu: Option<usize>,
    pub landmarks: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<BTreeMap<String, Vec<u32>>>,
    pub bounds: Option<Bounds>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[String; 2]>,
}

impl CertificateJson {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.input_summary;
        let kind = if s.directed { "digraph" } else { "graph" };
        let _ = writeln!(out, "{} on {kind} with n={} m={}", self.mode, s.n, s.m);
        match self.mu {
            Some(mu) => {
                let _ = writeln!(out, "mu: {mu}");
            }
            None => out.push_str("mu: -\n"),
        }
        let _ = writeln!(out, "landmarks ({}): {}", self.landmarks.len(), self.landmarks.join(", "));
        if let Some(b) = &self.bounds {
            let _ = writeln!(out, "bounds: {} <= mu(L) <= {}", b.lower_log, b.upper);
        }
        if let Some([a, b]) = &self.witness {
            let _ = writeln!(out, "unresolved pair: {a} / {b}");
        }
        if let Some(vectors) = &self.vectors {
            let width = vectors.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (label, v) in vectors {
                let row: Vec<String> = v.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "  {label:<width$}  ({})", row.join(","));
            }
        }
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
        }
        out
    }
}

/// Vertex set a certificate talks about: the input itself or its line graph.
struct Target {
    dm: DistanceMatrix,
    labels: Vec<String>,
}

fn vertex_target(file: &GraphFile) -> Target {
    let dm = match &file.graph {
        AnyGraph::Undirected(g) => all_pairs_distances(g),
        AnyGraph::Directed(g) => all_pairs_distances(g),
    };
    Target {
        dm,
        labels: file.labels.clone(),
    }
}

fn line_target(file: &GraphFile) -> Result<Target> {
    let (dm, from_line) = match &file.graph {
        AnyGraph::Undirected(g) => {
            let lgm = undirected_line_graph(g)?;
            (all_pairs_distances(&lgm.line), lgm.from_line)
        }
        AnyGraph::Directed(g) => {
            let lgm = directed_line_graph(g)?;
            (all_pairs_distances(&lgm.line), lgm.from_line)
        }
    };
    let labels = from_line.iter().map(|&e| file.edge_label(e)).collect();
    Ok(Target { dm, labels })
}

fn summary(file: &GraphFile) -> InputSummary {
    InputSummary {
        n: file.graph.order(),
        m: file.graph.size(),
        directed: file.graph.is_directed(),
    }
}

fn require_connected_input(file: &GraphFile) -> Result<()> {
    vertex_target(file).dm.require_connected()
}

fn check(name: &str, pass: bool) -> Check {
    Check {
        name: name.to_string(),
        pass,
    }
}

fn vectors_of(target: &Target, cert: &ResolvingCertificate) -> BTreeMap<String, Vec<u32>> {
    target
        .labels
        .iter()
        .cloned()
        .zip(cert.vectors.iter().cloned())
        .collect()
}

fn undirected_line_bounds(file: &GraphFile) -> Option<Bounds> {
    match &file.graph {
        AnyGraph::Undirected(g) => {
            let report = line_dimension_bounds(g);
            report.applicable.then_some(Bounds {
                lower_log: report.lower_log,
                upper: report.upper,
            })
        }
        AnyGraph::Directed(_) => None,
    }
}

/// Re-verifies `landmarks` on `target` and packages the result.
fn certify(
    mode: String,
    file: &GraphFile,
    target: &Target,
    landmarks: Vec<Vertex>,
    mu: Option<usize>,
    bounds: Option<Bounds>,
    mut checks: Vec<Check>,
) -> Result<CertificateJson> {
    let cert = ResolvingCertificate::new(&target.dm, landmarks)?;
    checks.insert(0, check("resolving_verified", cert.verify(&target.dm)));
    Ok(CertificateJson {
        schema: SCHEMA_VERSION,
        mode,
        input_summary: summary(file),
        mu,
        landmarks: cert.landmarks.iter().map(|&w| target.labels[w].clone()).collect(),
        vectors: Some(vectors_of(target, &cert)),
        bounds,
        checks,
        witness: None,
    })
}

/// Exact metric dimension of the input (`line = false`) or of its line
/// graph (`line = true`).
pub fn mu_certificate(file: &GraphFile, line: bool, config: &SolverConfig) -> Result<CertificateJson> {
    require_connected_input(file)?;
    let target = if line { line_target(file)? } else { vertex_target(file) };
    let solved = exact_metric_dimension_from(&target.dm, config)?;
    let mu = solved.mu_claimed.expect("solver reports mu");

    let mut checks = Vec::new();
    let mut bounds = None;
    if line {
        match &file.graph {
            AnyGraph::Undirected(_) => {
                bounds = undirected_line_bounds(file);
                if let Some(b) = &bounds {
                    checks.push(check("lower_log_le_mu", b.lower_log as usize <= mu));
                    checks.push(check("mu_le_upper", mu <= b.upper));
                }
            }
            AnyGraph::Directed(g) => {
                let expected = if is_directed_cycle(g) {
                    1
                } else {
                    g.size() - g.order()
                };
                checks.push(check("mu_equals_edges_minus_vertices", mu == expected));
            }
        }
    }
    let mode = if line { "mu-line" } else { "mu-exact" };
    certify(mode.into(), file, &target, solved.landmarks, Some(mu), bounds, checks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// In-edge deletion on a strongly connected digraph.
    Theorem1,
    /// Spanning-tree edges on a connected graph with at least 5 vertices.
    SpanTree,
    /// Pendant edges of a non-path tree.
    Tree,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem1 => "theorem1",
            Method::SpanTree => "spantree",
            Method::Tree => "tree",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem1" => Ok(Method::Theorem1),
            "spantree" => Ok(Method::SpanTree),
            "tree" => Ok(Method::Tree),
            other => Err(Error::Unsupported(format!("unknown method `{other}`"))),
        }
    }
}

/// Line-graph resolving set from one of the explicit constructions.
pub fn construct_certificate(
    file: &GraphFile,
    method: Method,
    config: &SolverConfig,
) -> Result<CertificateJson> {
    require_connected_input(file)?;
    let target = line_target(file)?;
    let mode = format!("construct-{}", method.name());
    match (method, &file.graph) {
        (Method::Theorem1, AnyGraph::Directed(g)) => {
            let landmarks = in_edge_deletion_set(g)?;
            let size_ok = landmarks.len() == g.size() - g.order();
            let mu = landmarks.len();
            let checks = vec![check("size_equals_edges_minus_vertices", size_ok)];
            certify(mode, file, &target, landmarks, Some(mu), None, checks)
        }
        (Method::SpanTree, AnyGraph::Undirected(g)) => {
            let landmarks = spanning_tree_resolving_set(g, config)?;
            let bounds = undirected_line_bounds(file);
            let within = bounds.as_ref().is_some_and(|b| landmarks.len() <= b.upper);
            let checks = vec![check("size_le_upper", within)];
            certify(mode, file, &target, landmarks, None, bounds, checks)
        }
        (Method::Tree, AnyGraph::Undirected(g)) => {
            let result = tree_line_metric_dimension(g)?;
            let checks = vec![check("size_equals_sigma_minus_ex", result.landmarks.len() == result.mu)];
            certify(mode, file, &target, result.landmarks, Some(result.mu), None, checks)
        }
        (Method::Theorem1, AnyGraph::Undirected(_)) => Err(Error::Unsupported(
            "theorem1 needs a digraph input".into(),
        )),
        (_, AnyGraph::Directed(_)) => Err(Error::Unsupported(format!(
            "{} needs an undirected graph input",
            method.name()
        ))),
    }
}

/// Checks whether the labelled landmarks resolve the input, or its line
/// graph when `line` is set (landmarks are then edge labels).
pub fn verify_certificate(file: &GraphFile, landmarks: &[String], line: bool) -> Result<CertificateJson> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let ids: Vec<Vertex> = landmarks
        .iter()
        .map(|l| if line { file.edge_id(l) } else { file.vertex_id(l) })
        .collect::<Result<_>>()?;
    require_connected_input(file)?;
    let target = if line { line_target(file)? } else { vertex_target(file) };
    let outcome = resolves(&target.dm, &ids)?;
    let mode = if line { "verify-line" } else { "verify" };
    if outcome.resolving {
        return certify(mode.into(), file, &target, ids, None, None, Vec::new());
    }
    let (u, v) = outcome.witness.expect("non-resolving outcome has a witness");
    Ok(CertificateJson {
        schema: SCHEMA_VERSION,
        mode: mode.into(),
        input_summary: summary(file),
        mu: None,
        landmarks: ids.iter().map(|&w| target.labels[w].clone()).collect(),
        vectors: None,
        bounds: None,
        checks: vec![check("resolving_verified", false)],
        witness: Some([target.labels[u].clone(), target.labels[v].clone()]),
    })
}
