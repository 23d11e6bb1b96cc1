mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use resolvekit::graph::DiGraph;
use resolvekit::graph_file::{AnyGraph, GraphFile};
use resolvekit::line_graph::{directed_line_graph, undirected_line_graph};
use resolvekit::topologies::{corollary_mu, Family};

use common::{digraph_distances, graph_distances};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_resolvekit"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn check_passed(cert: &Value, name: &str) -> bool {
    cert["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == name && c["pass"] == true)
}

fn landmarks(cert: &Value) -> Vec<String> {
    cert["landmarks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect()
}

/// Replays a certificate's vectors against Floyd-Warshall distances of the
/// parsed file, with line-graph landmarks mapped back through edge labels.
fn replay(text: &str, cert: &Value, line: bool) {
    let file = GraphFile::parse(text).unwrap();
    let (dist, names): (Vec<Vec<u32>>, Vec<String>) = match (&file.graph, line) {
        (AnyGraph::Undirected(g), false) => (graph_distances(g), file.labels.clone()),
        (AnyGraph::Directed(g), false) => (digraph_distances(g), file.labels.clone()),
        (AnyGraph::Undirected(g), true) => {
            let l = undirected_line_graph(g).unwrap();
            let names = (0..l.line.order()).map(|v| file.edge_label(l.from_line[v])).collect();
            (graph_distances(&l.line), names)
        }
        (AnyGraph::Directed(g), true) => {
            let l = directed_line_graph(g).unwrap();
            let names = (0..l.line.order()).map(|v| file.edge_label(l.from_line[v])).collect();
            (digraph_distances(&l.line), names)
        }
    };
    let index = |label: &str| names.iter().position(|n| n == label).unwrap();
    let w: Vec<usize> = landmarks(cert).iter().map(|l| index(l)).collect();
    let vectors = cert["vectors"].as_object().unwrap();
    assert_eq!(vectors.len(), names.len());
    let mut seen = std::collections::HashSet::new();
    for (label, vector) in vectors {
        let u = index(label);
        let expected: Vec<u64> = w.iter().map(|&x| dist[u][x] as u64).collect();
        let got: Vec<u64> = vector.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        assert_eq!(got, expected, "vector of {label}");
        assert!(seen.insert(got), "duplicate vector at {label}");
    }
}

const C4: &str = "digraph\na b\nb c\nc d\nd a\n";
const K23: &str = "graph\nx1 y1\nx1 y2\nx1 y3\nx2 y1\nx2 y2\nx2 y3\n";
const P5: &str = "graph\n1 2\n2 3\n3 4\n4 5\n";
const K3_DIGRAPH: &str = "digraph\n0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n";
const CLAW: &str = "graph\nc a\nc b\nc d\n";
const C6: &str = "graph\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
const P3: &str = "graph\nu v\nv w\n";
const C5: &str = "graph\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const K14: &str = "graph\nh 1\nh 2\nh 3\nh 4\n";

#[test]
fn mu_line_examples() {
    let dir = TempDir::new().unwrap();
    for (text, expected) in [(C4, 1), (K23, 2), (P5, 1)] {
        let path = write(&dir, "g.txt", text);
        let cert = run_json(&["mu", p(&path), "--line", "--json"]);
        assert_eq!(cert["mu"], expected, "{text}");
        assert_eq!(cert["schema"], 1);
        assert_eq!(cert["mode"], "mu-line");
        assert!(check_passed(&cert, "resolving_verified"));
        replay(text, &cert, true);
    }
}

#[test]
fn mu_exact_replays() {
    let dir = TempDir::new().unwrap();
    for text in [C5, K23, K3_DIGRAPH, CLAW] {
        let path = write(&dir, "g.txt", text);
        let cert = run_json(&["mu", p(&path), "--exact", "--json"]);
        assert_eq!(cert["mode"], "mu-exact");
        replay(text, &cert, false);
    }
}

#[test]
fn mu_line_reports_bounds_for_graphs() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "g.txt", C6);
    let cert = run_json(&["mu", p(&path), "--line", "--json"]);
    assert_eq!(cert["bounds"]["lower_log"], 1);
    assert_eq!(cert["bounds"]["upper"], 4);
    assert!(check_passed(&cert, "lower_log_le_mu"));
    assert!(check_passed(&cert, "mu_le_upper"));
}

#[test]
fn construct_examples() {
    let dir = TempDir::new().unwrap();
    let cases = [(K3_DIGRAPH, "theorem1", 3), (CLAW, "tree", 2), (C6, "spantree", 4)];
    for (text, method, size) in cases {
        let path = write(&dir, "g.txt", text);
        let cert = run_json(&["construct", p(&path), "--method", method, "--json"]);
        assert_eq!(landmarks(&cert).len(), size, "{method}");
        assert!(check_passed(&cert, "resolving_verified"), "{method}");
        replay(text, &cert, true);
    }
    let path = write(&dir, "g.txt", CLAW);
    let cert = run_json(&["construct", p(&path), "--method", "tree", "--json"]);
    assert_eq!(cert["mu"], 2);
    assert!(landmarks(&cert).iter().all(|l| l.contains('—')));
}

#[test]
fn construct_precondition_failures() {
    let dir = TempDir::new().unwrap();
    let cycle = write(&dir, "c.txt", C4);
    let out = run(&["construct", p(&cycle), "--method", "theorem1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let path = write(&dir, "p.txt", P5);
    assert_eq!(run(&["construct", p(&path), "--method", "tree"]).status.code(), Some(1));
    let wrong_kind = write(&dir, "k.txt", K3_DIGRAPH);
    assert_eq!(run(&["construct", p(&wrong_kind), "--method", "spantree"]).status.code(), Some(1));
}

#[test]
fn gen_examples() {
    let out = run(&["gen", "de_bruijn", "2", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines.len(), 8);
    let file = GraphFile::parse(&text).unwrap();
    assert_eq!(file.labels, ["00", "01", "10", "11"]);

    let text = String::from_utf8(run(&["gen", "kautz", "2", "1"]).stdout).unwrap();
    let file = GraphFile::parse(&text).unwrap();
    assert_eq!(file.graph.size(), 6);
    assert_eq!(file.labels, ["0", "1", "2"]);

    let text = String::from_utf8(run(&["gen", "flowered", "2"]).stdout).unwrap();
    let edges: Vec<&str> = text.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    assert_eq!(edges.len(), 4);
    assert!(edges.contains(&"0 0") && edges.contains(&"1 1"));
}

#[test]
fn gen_is_byte_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    for (family, d, n) in [("de_bruijn", 2, 3), ("kautz", 2, 2), ("de_bruijn", 3, 2), ("complete", 4, 1)] {
        let a = dir.path().join("a.txt");
        let (ds, ns) = (d.to_string(), n.to_string());
        assert!(run(&["gen", family, &ds, &ns, "--out", p(&a)]).status.success());
        let stdout = run(&["gen", family, &ds, &ns]).stdout;
        let written = std::fs::read(&a).unwrap();
        assert_eq!(stdout, written);

        let file = GraphFile::read(&a).unwrap();
        let reparsed = GraphFile::parse(&file.to_text()).unwrap();
        assert_eq!(reparsed.to_text().as_bytes(), written.as_slice());
        let edges = |f: &GraphFile| -> Vec<(String, String)> {
            let mut e: Vec<_> = (0..f.graph.size())
                .map(|i| {
                    let (u, v) = f.graph.edge(i);
                    (f.labels[u].clone(), f.labels[v].clone())
                })
                .collect();
            e.sort();
            e
        };
        assert_eq!(edges(&file), edges(&reparsed));
    }
}

#[test]
fn gen_then_mu_reproduces_closed_forms() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (Family::DeBruijn, 2, 1),
        (Family::DeBruijn, 2, 2),
        (Family::DeBruijn, 2, 3),
        (Family::DeBruijn, 3, 1),
        (Family::DeBruijn, 3, 2),
        (Family::Kautz, 2, 1),
        (Family::Kautz, 2, 2),
        (Family::Kautz, 3, 1),
        (Family::Kautz, 2, 3),
    ];
    for (family, d, n) in cases {
        let path = dir.path().join("t.txt");
        let (ds, ns) = (d.to_string(), n.to_string());
        assert!(run(&["gen", family.name(), &ds, &ns, "--out", p(&path)]).status.success());
        let cert = run_json(&["mu", p(&path), "--json"]);
        assert_eq!(cert["mu"], corollary_mu(family, d, n).unwrap(), "{family}({d},{n})");
    }
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p3.txt", P3);
    let cert = run_json(&["verify", p(&path), "--landmarks", "u", "--json"]);
    assert!(check_passed(&cert, "resolving_verified"));
    assert!(cert.get("witness").is_none());
    replay(P3, &cert, false);

    let path = write(&dir, "c5.txt", C5);
    let cert = run_json(&["verify", p(&path), "--landmarks", "0", "--json"]);
    assert!(!check_passed(&cert, "resolving_verified"));
    assert!(cert.get("vectors").is_none());
    let witness: Vec<&str> = cert["witness"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    let file = GraphFile::parse(C5).unwrap();
    let d = match &file.graph {
        AnyGraph::Undirected(g) => graph_distances(g),
        _ => unreachable!(),
    };
    let (a, b) = (file.vertex_id(witness[0]).unwrap(), file.vertex_id(witness[1]).unwrap());
    assert_ne!(a, b);
    assert_eq!(d[a][0], d[b][0]);

    let path = write(&dir, "k14.txt", K14);
    let cert = run_json(&["verify", p(&path), "--line", "--landmarks", "h—1,h—2,h—3", "--json"]);
    assert!(check_passed(&cert, "resolving_verified"));
    replay(K14, &cert, true);
    let ascii = run_json(&["verify", p(&path), "--line", "--landmarks", "1-h,2-h,3-h", "--json"]);
    assert!(check_passed(&ascii, "resolving_verified"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "graph\na b\na b\n");
    let out = run(&["mu", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains('3'));

    let missing = dir.path().join("missing.txt");
    assert_eq!(run(&["mu", p(&missing)]).status.code(), Some(2));

    let disconnected = write(&dir, "d.txt", "graph\na b\nc d\n");
    assert_eq!(run(&["mu", p(&disconnected)]).status.code(), Some(3));
    let weak = write(&dir, "w.txt", "digraph\na b\nb c\n");
    assert_eq!(run(&["mu", p(&weak), "--line"]).status.code(), Some(3));

    let big = write(&dir, "k.txt", K23);
    assert_eq!(run(&["mu", p(&big), "--line", "--cap", "5"]).status.code(), Some(4));
    assert!(run(&["mu", p(&big), "--line", "--cap", "6"]).status.success());

    let path = write(&dir, "p3.txt", P3);
    assert_eq!(run(&["verify", p(&path), "--landmarks", "zz"]).status.code(), Some(2));
}

#[test]
fn json_is_identical_across_runs_and_thread_modes() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "g.txt", "graph\n0 1\n0 2\n0 3\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let first = run(&["mu", p(&path), "--line", "--json"]).stdout;
    for _ in 0..3 {
        assert_eq!(run(&["mu", p(&path), "--line", "--json"]).stdout, first);
        assert_eq!(run(&["mu", p(&path), "--line", "--json", "--sequential"]).stdout, first);
    }
}

#[test]
fn text_output_is_not_json() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "g.txt", K23);
    let out = run(&["mu", p(&path), "--line"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(serde_json::from_str::<Value>(&text).is_err());
    assert!(text.contains('2'));
}

#[test]
fn labels_follow_first_appearance() {
    let file = GraphFile::parse("# comment\ndigraph\n\nz y\ny x\nx z\n").unwrap();
    assert_eq!(file.labels, ["z", "y", "x"]);
    let g = DiGraph::new(3, [(0, 1), (1, 2), (2, 0)], false).unwrap();
    match file.graph {
        AnyGraph::Directed(d) => assert_eq!(d.edges(), g.edges()),
        _ => panic!("expected digraph"),
    }
}
