//! Bipartite graphs `G = (U, V; E)` with `|U| = n` and `|V| = m`.
//!
//! U-vertices are `u0..u(n-1)`, V-vertices are `v0..v(m-1)`. Edges are stored as
//! `(i, j)` pairs meaning `u_i -- v_j`, kept sorted lexicographically. Two graphs
//! are equal when they have the same order and the same edge set; labels are
//! carried along for fixtures but never compared.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of a bipartite graph, tagged with its color class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    U(usize),
    V(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::U(i) => write!(f, "u{i}"),
            Vertex::V(j) => write!(f, "v{j}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    adj_u: Vec<Vec<usize>>,
    adj_v: Vec<Vec<usize>>,
    labels: Option<BTreeMap<String, String>>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.m == other.m && self.edges == other.edges
    }
}

impl Eq for BipartiteGraph {}

/// Degree extrema per color class and the edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    #[serde(rename = "delta_U")]
    pub delta_u: usize,
    #[serde(rename = "Delta_U")]
    pub max_delta_u: usize,
    #[serde(rename = "delta_V")]
    pub delta_v: usize,
    #[serde(rename = "Delta_V")]
    pub max_delta_v: usize,
    pub edge_count: usize,
}

impl DegreeStats {
    /// Minimum degree over all vertices of the graph.
    pub fn delta(&self) -> usize {
        self.delta_u.min(self.delta_v)
    }
}

/// Connected components, with every vertex mapped to a component id.
///
/// Ids are assigned in order of first appearance scanning `u0..`, then `v0..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub of_u: Vec<usize>,
    pub of_v: Vec<usize>,
}

impl BipartiteGraph {
    /// Builds a graph, rejecting out-of-range endpoints and duplicate edges.
    pub fn new(n: usize, m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, m, edges, false)
    }

    /// Like [`BipartiteGraph::new`] but silently drops duplicate edges.
    pub fn new_lenient(
        n: usize,
        m: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        Self::build(n, m, edges, true)
    }

    fn build(
        n: usize,
        m: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        lenient: bool,
    ) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i >= n || j >= m) {
            return Err(Error::IndexOutOfRange { i, j, n, m });
        }
        edges.sort_unstable();
        if !lenient {
            if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
                let (i, j) = w[0];
                return Err(Error::DuplicateEdge { i, j });
            }
        }
        edges.dedup();
        let mut adj_u = vec![Vec::new(); n];
        let mut adj_v = vec![Vec::new(); m];
        for &(i, j) in &edges {
            adj_u[i].push(j);
            adj_v[j].push(i);
        }
        Ok(Self { n, m, edges, adj_u, adj_v, labels: None })
    }

    /// The empty graph of order `(n, m)`.
    pub fn edgeless(n: usize, m: usize) -> Self {
        Self { n, m, edges: Vec::new(), adj_u: vec![Vec::new(); n], adj_v: vec![Vec::new(); m], labels: None }
    }

    /// `K_{n,m}`.
    pub fn complete(n: usize, m: usize) -> Self {
        let edges = (0..n).flat_map(|i| (0..m).map(move |j| (i, j)));
        Self::new(n, m, edges).expect("complete bipartite edges are in range and distinct")
    }

    pub fn with_labels(mut self, labels: BTreeMap<String, String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The surplus `n - m`, or `None` when `n < m`.
    pub fn k(&self) -> Option<usize> {
        self.n.checked_sub(self.m)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Option<&BTreeMap<String, String>> {
        self.labels.as_ref()
    }

    /// Sorted V-neighbors of `u_i`.
    pub fn neighbors_u(&self, i: usize) -> &[usize] {
        &self.adj_u[i]
    }

    /// Sorted U-neighbors of `v_j`.
    pub fn neighbors_v(&self, j: usize) -> &[usize] {
        &self.adj_v[j]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.adj_u[i].binary_search(&j).is_ok()
    }

    pub fn contains(&self, x: Vertex) -> bool {
        match x {
            Vertex::U(i) => i < self.n,
            Vertex::V(j) => j < self.m,
        }
    }

    /// Whether `x` and `y` are joined by an edge. Same-class pairs never are.
    pub fn adjacent(&self, x: Vertex, y: Vertex) -> bool {
        match (x, y) {
            (Vertex::U(i), Vertex::V(j)) | (Vertex::V(j), Vertex::U(i)) => self.has_edge(i, j),
            _ => false,
        }
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let du = self.adj_u.iter().map(Vec::len);
        let dv = self.adj_v.iter().map(Vec::len);
        DegreeStats {
            delta_u: du.clone().min().unwrap_or(0),
            max_delta_u: du.max().unwrap_or(0),
            delta_v: dv.clone().min().unwrap_or(0),
            max_delta_v: dv.max().unwrap_or(0),
            edge_count: self.edges.len(),
        }
    }

    /// `G̃`: appends `k = n - m` V-vertices, each adjacent to all of U.
    pub fn build_tilde(&self) -> Result<BipartiteGraph> {
        if self.n <= self.m {
            return Err(Error::NotSurplus { n: self.n, m: self.m });
        }
        let k = self.n - self.m;
        let extra = (0..self.n).flat_map(|i| (self.m..self.m + k).map(move |j| (i, j)));
        BipartiteGraph::new(self.n, self.n, self.edges.iter().copied().chain(extra))
    }

    pub fn components(&self) -> Components {
        const UNSEEN: usize = usize::MAX;
        let mut of_u = vec![UNSEEN; self.n];
        let mut of_v = vec![UNSEEN; self.m];
        let mut count = 0;
        let mut stack = Vec::new();
        let starts = (0..self.n).map(Vertex::U).chain((0..self.m).map(Vertex::V));
        for start in starts {
            let seen = match start {
                Vertex::U(i) => of_u[i] != UNSEEN,
                Vertex::V(j) => of_v[j] != UNSEEN,
            };
            if seen {
                continue;
            }
            match start {
                Vertex::U(i) => of_u[i] = count,
                Vertex::V(j) => of_v[j] = count,
            }
            stack.push(start);
            while let Some(x) = stack.pop() {
                match x {
                    Vertex::U(i) => {
                        for &j in &self.adj_u[i] {
                            if of_v[j] == UNSEEN {
                                of_v[j] = count;
                                stack.push(Vertex::V(j));
                            }
                        }
                    }
                    Vertex::V(j) => {
                        for &i in &self.adj_v[j] {
                            if of_u[i] == UNSEEN {
                                of_u[i] = count;
                                stack.push(Vertex::U(i));
                            }
                        }
                    }
                }
            }
            count += 1;
        }
        Components { count, of_u, of_v }
    }

    pub fn component_count(&self) -> usize {
        self.components().count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// True iff `E(self) ⊆ E(other)`; both graphs must have the same order.
    pub fn is_subgraph_of(&self, other: &BipartiteGraph) -> Result<bool> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::OrderMismatch(self.n, self.m, other.n, other.m));
        }
        Ok(self.edges.iter().all(|&(i, j)| other.has_edge(i, j)))
    }

    /// Copy of the graph with the edge `(i, j)` removed (no-op if absent).
    pub fn without_edge(&self, i: usize, j: usize) -> BipartiteGraph {
        let edges = self.edges.iter().copied().filter(|&e| e != (i, j));
        BipartiteGraph::new(self.n, self.m, edges).expect("subset of a valid edge set")
    }

    /// Degree sequence of U in vertex order.
    pub fn degrees_u(&self) -> Vec<usize> {
        self.adj_u.iter().map(Vec::len).collect()
    }

    /// Degree sequence of V in vertex order.
    pub fn degrees_v(&self) -> Vec<usize> {
        self.adj_v.iter().map(Vec::len).collect()
    }
}

/// Free-function form of [`BipartiteGraph::is_subgraph_of`].
pub fn is_subgraph(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Result<bool> {
    g1.is_subgraph_of(g2)
}
