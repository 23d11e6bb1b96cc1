//! Distance vectors, resolving-set checks and an exact metric-dimension
//! search.
//!
//! Distances are taken FROM a vertex TO each landmark, so for digraphs the
//! vector of `u` is `(d(u, w_1), ..., d(u, w_m))`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Adjacency, DistanceMatrix, Vertex, UNREACHABLE};

pub const DEFAULT_SIZE_CAP: usize = 22;

pub fn distance_vector(dm: &DistanceMatrix, u: Vertex, landmarks: &[Vertex]) -> Result<Vec<u32>> {
    let n = dm.order();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    landmarks
        .iter()
        .map(|&w| {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            dm.get(u, w).ok_or(Error::Disconnected { from: u, to: w })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolveOutcome {
    pub resolving: bool,
    /// Lexicographically smallest pair `(u, v)`, `u < v`, sharing a vector.
    pub witness: Option<(Vertex, Vertex)>,
}

pub fn is_resolving_set<G: Adjacency + ?Sized>(g: &G, landmarks: &[Vertex]) -> Result<ResolveOutcome> {
    let dm = all_pairs_distances(g);
    dm.require_connected()?;
    resolves(&dm, landmarks)
}

/// [`is_resolving_set`] against precomputed distances.
pub fn resolves(dm: &DistanceMatrix, landmarks: &[Vertex]) -> Result<ResolveOutcome> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let mut first_seen: HashMap<Vec<u32>, Vertex> = HashMap::with_capacity(dm.order());
    let mut witness: Option<(Vertex, Vertex)> = None;
    for u in 0..dm.order() {
        let vector = distance_vector(dm, u, landmarks)?;
        match first_seen.get(&vector) {
            // `earlier` is the least vertex with this vector.
            Some(&earlier) => {
                let candidate = (earlier, u);
                if witness.is_none_or(|w| candidate < w) {
                    witness = Some(candidate);
                }
            }
            None => {
                first_seen.insert(vector, u);
            }
        }
    }
    Ok(ResolveOutcome {
        resolving: witness.is_none(),
        witness,
    })
}

/// A landmark list together with the distance vector of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvingCertificate {
    pub landmarks: Vec<Vertex>,
    /// `vectors[u]` is `D(u | landmarks)`.
    pub vectors: Vec<Vec<u32>>,
    pub mu_claimed: Option<usize>,
}

impl ResolvingCertificate {
    /// Builds the certificate, failing if `landmarks` does not resolve.
    pub fn new(dm: &DistanceMatrix, landmarks: Vec<Vertex>) -> Result<Self> {
        let outcome = resolves(dm, &landmarks)?;
        if let Some((u, v)) = outcome.witness {
            return Err(Error::VerificationFailed(format!(
                "landmarks {landmarks:?} do not separate {u} and {v}"
            )));
        }
        let vectors = (0..dm.order())
            .map(|u| distance_vector(dm, u, &landmarks))
            .collect::<Result<_>>()?;
        Ok(ResolvingCertificate {
            landmarks,
            vectors,
            mu_claimed: None,
        })
    }

    pub fn with_mu(mut self, mu: usize) -> Self {
        self.mu_claimed = Some(mu);
        self
    }

    /// Recomputes every vector from `dm` and checks they match and are
    /// pairwise distinct.
    pub fn verify(&self, dm: &DistanceMatrix) -> bool {
        if self.vectors.len() != dm.order() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        self.vectors.iter().enumerate().all(|(u, vector)| {
            distance_vector(dm, u, &self.landmarks).is_ok_and(|fresh| &fresh == vector)
                && seen.insert(vector)
        })
    }
}

/// Partition of the vertices into blocks of mutual twins: `u` and `v` are
/// twins when `d(u, w) = d(v, w)` for every `w` other than `u` and `v`.
/// Every resolving set holds all but at most one vertex of each block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub blocks: Vec<Vec<Vertex>>,
}

impl TwinPartition {
    pub fn lower_bound(&self) -> usize {
        self.blocks.iter().map(|b| b.len() - 1).sum()
    }

    /// Block index of each vertex.
    pub fn block_index(&self) -> Vec<usize> {
        let n = self.blocks.iter().map(Vec::len).sum();
        let mut index = vec![0; n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                index[v] = i;
            }
        }
        index
    }
}

pub fn twin_classes<G: Adjacency + ?Sized>(g: &G) -> TwinPartition {
    twin_partition(&all_pairs_distances(g))
}

/// Greedy in vertex order: a vertex joins the first block all of whose
/// members are its twins.
pub fn twin_partition(dm: &DistanceMatrix) -> TwinPartition {
    let n = dm.order();
    let twins = |u: Vertex, v: Vertex| {
        let (ru, rv) = (dm.row(u), dm.row(v));
        (0..n).all(|w| w == u || w == v || ru[w] == rv[w])
    };
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        match blocks.iter_mut().find(|b| b.iter().all(|&u| twins(u, v))) {
            Some(block) => block.push(v),
            None => blocks.push(vec![v]),
        }
    }
    TwinPartition { blocks }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest vertex count the exhaustive search accepts.
    pub size_cap: usize,
    /// Start at the twin lower bound and skip subsets omitting two twins.
    pub twin_pruning: bool,
    /// Split each cardinality level across threads by first landmark.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            size_cap: DEFAULT_SIZE_CAP,
            twin_pruning: true,
            parallel: true,
        }
    }
}

impl SolverConfig {
    pub fn with_cap(size_cap: usize) -> Self {
        SolverConfig {
            size_cap,
            ..Self::default()
        }
    }
}

pub fn exact_metric_dimension<G: Adjacency + ?Sized>(
    g: &G,
    config: &SolverConfig,
) -> Result<ResolvingCertificate> {
    exact_metric_dimension_from(&all_pairs_distances(g), config)
}

/// Minimum resolving set by increasing cardinality; within a cardinality the
/// lexicographically least subset wins, independent of scheduling.
pub fn exact_metric_dimension_from(
    dm: &DistanceMatrix,
    config: &SolverConfig,
) -> Result<ResolvingCertificate> {
    dm.require_connected()?;
    let n = dm.order();
    if n > config.size_cap {
        return Err(Error::CapExceeded {
            n,
            cap: config.size_cap,
        });
    }
    if n <= 1 {
        return Ok(ResolvingCertificate {
            landmarks: Vec::new(),
            vectors: vec![Vec::new(); n],
            mu_claimed: Some(0),
        });
    }

    let search = SubsetSearch::new(dm, config.twin_pruning);
    let start = if config.twin_pruning {
        search.twin_bound.max(1)
    } else {
        1
    };
    for k in start..n {
        let found = if config.parallel {
            (0..=n - k)
                .into_par_iter()
                .find_map_first(|first| search.with_first(first, k))
        } else {
            (0..=n - k).find_map(|first| search.with_first(first, k))
        };
        if let Some(landmarks) = found {
            return Ok(ResolvingCertificate::new(dm, landmarks)?.with_mu(k));
        }
    }
    Err(Error::VerificationFailed(
        "no proper subset resolves; V minus one vertex always should".into(),
    ))
}

struct SubsetSearch {
    n: usize,
    /// `columns[w][u] = d(u, w)`.
    columns: Vec<Vec<u32>>,
    /// Block of each vertex; `None` disables twin pruning.
    blocks: Option<Vec<usize>>,
    block_count: usize,
    twin_bound: usize,
}

/// Vertex classes induced by the landmarks chosen so far.
#[derive(Clone)]
struct Classes {
    ids: Vec<u32>,
    count: u32,
}

impl SubsetSearch {
    fn new(dm: &DistanceMatrix, pruning: bool) -> Self {
        let n = dm.order();
        let columns = (0..n)
            .map(|w| (0..n).map(|u| dm.row(u)[w]).collect())
            .collect();
        let (blocks, block_count, twin_bound) = if pruning {
            let partition = twin_partition(dm);
            (
                Some(partition.block_index()),
                partition.blocks.len(),
                partition.lower_bound(),
            )
        } else {
            (None, 0, 0)
        };
        SubsetSearch {
            n,
            columns,
            blocks,
            block_count,
            twin_bound,
        }
    }

    fn refine(&self, classes: &Classes, w: Vertex) -> Classes {
        let stride = self.n + 1;
        let mut relabel = vec![u32::MAX; classes.count as usize * stride];
        let mut ids = Vec::with_capacity(self.n);
        let mut count = 0;
        for (u, &class) in classes.ids.iter().enumerate() {
            let d = self.columns[w][u];
            debug_assert_ne!(d, UNREACHABLE);
            let slot = &mut relabel[class as usize * stride + d as usize];
            if *slot == u32::MAX {
                *slot = count;
                count += 1;
            }
            ids.push(*slot);
        }
        Classes { ids, count }
    }

    /// Marks `v` as left out; false when that drops two vertices of one
    /// twin block.
    fn skip(&self, skipped: &mut [u8], v: Vertex) -> bool {
        match &self.blocks {
            Some(blocks) => {
                let slot = &mut skipped[blocks[v]];
                *slot += 1;
                *slot <= 1
            }
            None => true,
        }
    }

    fn unskip(&self, skipped: &mut [u8], v: Vertex) {
        if let Some(blocks) = &self.blocks {
            skipped[blocks[v]] -= 1;
        }
    }

    /// Lexicographically least resolving `k`-subset whose smallest element
    /// is `first`.
    fn with_first(&self, first: Vertex, k: usize) -> Option<Vec<Vertex>> {
        let mut skipped = vec![0u8; self.block_count];
        for v in 0..first {
            if !self.skip(&mut skipped, v) {
                return None;
            }
        }
        let root = Classes {
            ids: vec![0; self.n],
            count: 1,
        };
        let mut chosen = vec![first];
        let classes = self.refine(&root, first);
        self.extend(first + 1, k - 1, &classes, &mut skipped, &mut chosen)
            .then_some(chosen)
    }

    fn extend(
        &self,
        start: Vertex,
        remaining: usize,
        classes: &Classes,
        skipped: &mut [u8],
        chosen: &mut Vec<Vertex>,
    ) -> bool {
        if remaining == 0 {
            return classes.count as usize == self.n;
        }
        let mut passed = start;
        let mut found = false;
        for j in start..=self.n - remaining {
            chosen.push(j);
            let refined = self.refine(classes, j);
            if self.extend(j + 1, remaining - 1, &refined, skipped, chosen) {
                found = true;
                break;
            }
            chosen.pop();
            passed = j + 1;
            if !self.skip(skipped, j) {
                break;
            }
        }
        for v in start..passed {
            self.unskip(skipped, v);
        }
        found
    }
}
