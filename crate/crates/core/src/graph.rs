//! Frozen simple graphs and digraphs with unweighted BFS distances.
//!
//! Vertices are dense ids `0..n`. Edges carry stable ids `0..m` in the order
//! they were supplied. Both graph types are immutable once built.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Sentinel for "no path". Never a valid finite distance.
pub const UNREACHABLE: u32 = u32::MAX;

/// Out-neighborhood view shared by [`Graph`] and [`DiGraph`].
pub trait Adjacency: Sync {
    fn order(&self) -> usize;
    /// Vertices reachable from `v` along one edge. Self-loops are omitted.
    fn successors(&self, v: Vertex) -> &[Vertex];
    fn is_directed(&self) -> bool;
}

/// Simple undirected graph. No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    neighbors: Vec<Vec<Vertex>>,
    incident: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut neighbors = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::ParallelEdge { u, v });
            }
            let id = list.len();
            list.push((u, v));
            neighbors[u].push(v);
            neighbors[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(Graph {
            n,
            edges: list,
            neighbors,
            incident,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    /// Ids of the edges incident to `v`, in insertion order.
    pub fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Id of the edge joining `u` and `v`, if any.
    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.incident
            .get(u)?
            .iter()
            .copied()
            .find(|&e| {
                let (a, b) = self.edges[e];
                (a == u && b == v) || (a == v && b == u)
            })
    }
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.n
    }

    fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    fn is_directed(&self) -> bool {
        false
    }
}

/// Simple digraph. An edge `(x, y)` has head `x` and tail `y`; it is an
/// out-going edge of `x` and an in-coming edge of `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    successors: Vec<Vec<Vertex>>,
    allows_loops: bool,
}

impl DiGraph {
    pub fn new<I>(n: usize, edges: I, allows_loops: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        let mut successors = vec![Vec::new(); n];
        for (x, y) in edges {
            check_vertex(x, n)?;
            check_vertex(y, n)?;
            if x == y && !allows_loops {
                return Err(Error::SelfLoop { vertex: x });
            }
            if !seen.insert((x, y)) {
                return Err(Error::ParallelEdge { u: x, v: y });
            }
            let id = list.len();
            list.push((x, y));
            out_edges[x].push(id);
            in_edges[y].push(id);
            if x != y {
                successors[x].push(y);
            }
        }
        Ok(DiGraph {
            n,
            edges: list,
            out_edges,
            in_edges,
            successors,
            allows_loops,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn head(&self, id: EdgeId) -> Vertex {
        self.edges[id].0
    }

    pub fn tail(&self, id: EdgeId) -> Vertex {
        self.edges[id].1
    }

    pub fn out_edges(&self, x: Vertex) -> &[EdgeId] {
        &self.out_edges[x]
    }

    pub fn in_edges(&self, x: Vertex) -> &[EdgeId] {
        &self.in_edges[x]
    }

    pub fn out_degree(&self, x: Vertex) -> usize {
        self.out_edges[x].len()
    }

    pub fn in_degree(&self, x: Vertex) -> usize {
        self.in_edges[x].len()
    }

    pub fn allows_loops(&self) -> bool {
        self.allows_loops
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(x, y)| x == y).count()
    }

    pub fn find_edge(&self, x: Vertex, y: Vertex) -> Option<EdgeId> {
        self.out_edges
            .get(x)?
            .iter()
            .copied()
            .find(|&e| self.edges[e].1 == y)
    }
}

impl Adjacency for DiGraph {
    fn order(&self) -> usize {
        self.n
    }

    fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.successors[v]
    }

    fn is_directed(&self) -> bool {
        true
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// All-pairs shortest-path lengths, row-major: `get(u, v)` is the length of a
/// shortest path from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    directed: bool,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Distance from `u` to `v`, `None` when unreachable.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        match self.data[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw row of distances from `u`; unreachable entries hold [`UNREACHABLE`].
    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// First ordered pair `(u, v)` with no path from `u` to `v`.
    pub fn first_unreachable(&self) -> Option<(Vertex, Vertex)> {
        self.data
            .iter()
            .position(|&d| d == UNREACHABLE)
            .map(|i| (i / self.n, i % self.n))
    }

    pub fn is_fully_reachable(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// Fails with [`Error::Disconnected`] naming the first unreachable pair.
    pub fn require_connected(&self) -> Result<()> {
        match self.first_unreachable() {
            Some((from, to)) => Err(Error::Disconnected { from, to }),
            None => Ok(()),
        }
    }
}

pub fn bfs_distances<G: Adjacency + ?Sized>(g: &G, source: Vertex) -> Result<Vec<u32>> {
    let n = g.order();
    check_vertex(source, n)?;
    Ok(bfs_row(g, source))
}

fn bfs_row<G: Adjacency + ?Sized>(g: &G, source: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.successors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn all_pairs_distances<G: Adjacency + ?Sized>(g: &G) -> DistanceMatrix {
    let n = g.order();
    let mut data = Vec::with_capacity(n * n);
    for source in 0..n {
        data.extend(bfs_row(g, source));
    }
    DistanceMatrix {
        n,
        directed: g.is_directed(),
        data,
    }
}

pub fn is_strongly_connected(g: &DiGraph) -> bool {
    if g.order() == 0 {
        return true;
    }
    let forward = bfs_row(g, 0);
    if forward.contains(&UNREACHABLE) {
        return false;
    }
    let reversed = Reversed::new(g);
    !bfs_row(&reversed, 0).contains(&UNREACHABLE)
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() == 0 || !bfs_row(g, 0).contains(&UNREACHABLE)
}

/// Strongly connected with every in- and out-degree equal to one.
pub fn is_directed_cycle(g: &DiGraph) -> bool {
    g.order() > 0
        && (0..g.order()).all(|x| g.in_degree(x) == 1 && g.out_degree(x) == 1)
        && is_strongly_connected(g)
}

struct Reversed {
    predecessors: Vec<Vec<Vertex>>,
}

impl Reversed {
    fn new(g: &DiGraph) -> Self {
        let mut predecessors = vec![Vec::new(); g.order()];
        for &(x, y) in g.edges() {
            if x != y {
                predecessors[y].push(x);
            }
        }
        Reversed { predecessors }
    }
}

impl Adjacency for Reversed {
    fn order(&self) -> usize {
        self.predecessors.len()
    }

    fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.predecessors[v]
    }

    fn is_directed(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralSummary {
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_path: bool,
    pub max_degree: usize,
}

pub fn structural_predicates(g: &Graph) -> StructuralSummary {
    let is_connected = is_connected(g);
    let max_degree = g.max_degree();
    let is_tree = is_connected && g.size() + 1 == g.order();
    StructuralSummary {
        is_connected,
        is_tree,
        is_path: is_tree && max_degree <= 2,
        max_degree,
    }
}
