//! Vertex connectivity of bipartite graphs, set connectivity over a color
//! class, and strong k-connectivity of the digraph obtained by contracting a
//! perfect matching.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bigraph::{BipartiteGraph, DegreeStats, Vertex};
use crate::criticality;
use crate::error::{Error, Result};
use crate::flow::vertex_disjoint_paths;
use crate::matching::Matching;

/// Graphs up to this many vertices get the exhaustive small-separator check.
pub const SEPARATOR_CHECK_MAX_VERTICES: usize = 16;

fn index(g: &BipartiteGraph, x: Vertex) -> usize {
    match x {
        Vertex::U(i) => i,
        Vertex::V(j) => g.n() + j,
    }
}

/// Undirected adjacency over the unified vertex ids `u_i -> i`, `v_j -> n + j`.
fn unified_adjacency(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out: Vec<Vec<usize>> = (0..n).map(|i| g.neighbors_u(i).iter().map(|&j| n + j).collect()).collect();
    out.extend((0..g.m()).map(|j| g.neighbors_v(j).to_vec()));
    out
}

fn check_pair(g: &BipartiteGraph, x: Vertex, y: Vertex) -> Result<()> {
    for z in [x, y] {
        if !g.contains(z) {
            return Err(Error::VertexOutOfRange(z.to_string()));
        }
    }
    if x == y {
        return Err(Error::SameVertex(x.to_string()));
    }
    if g.adjacent(x, y) {
        return Err(Error::AdjacentPair(x.to_string(), y.to_string()));
    }
    Ok(())
}

/// `κ_{x,y}(G)`: size of a smallest vertex cut separating the nonadjacent pair
/// `x, y`, or 0 when they lie in different components.
pub fn local_connectivity(g: &BipartiteGraph, x: Vertex, y: Vertex) -> Result<usize> {
    check_pair(g, x, y)?;
    let adj = unified_adjacency(g);
    Ok(vertex_disjoint_paths(&adj, index(g, x), index(g, y), None))
}

fn min_over_pairs(g: &BipartiteGraph, pairs: Vec<(Vertex, Vertex)>) -> usize {
    let adj = unified_adjacency(g);
    pairs
        .par_iter()
        .map(|&(x, y)| vertex_disjoint_paths(&adj, index(g, x), index(g, y), None))
        .min()
        .expect("caller supplies at least one pair")
}

/// `κ_S(G)`: the minimum local connectivity over pairs of distinct vertices in `set`.
pub fn kappa_set(g: &BipartiteGraph, set: &[Vertex]) -> Result<usize> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() < 2 {
        return Err(Error::SetTooSmall);
    }
    let mut pairs = Vec::new();
    for (a, &x) in set.iter().enumerate() {
        if !g.contains(x) {
            return Err(Error::VertexOutOfRange(x.to_string()));
        }
        for &y in &set[a + 1..] {
            if g.adjacent(x, y) {
                return Err(Error::AdjacentPairInS(x.to_string(), y.to_string()));
            }
            pairs.push((x, y));
        }
    }
    Ok(min_over_pairs(g, pairs))
}

pub fn kappa_u(g: &BipartiteGraph) -> Result<usize> {
    kappa_set(g, &(0..g.n()).map(Vertex::U).collect::<Vec<_>>())
}

pub fn kappa_v(g: &BipartiteGraph) -> Result<usize> {
    kappa_set(g, &(0..g.m()).map(Vertex::V).collect::<Vec<_>>())
}

/// Global vertex connectivity `κ(G)`: the minimum local connectivity over all
/// nonadjacent pairs.
pub fn kappa(g: &BipartiteGraph) -> Result<usize> {
    let all: Vec<Vertex> = (0..g.n()).map(Vertex::U).chain((0..g.m()).map(Vertex::V)).collect();
    let mut pairs = Vec::new();
    for (a, &x) in all.iter().enumerate() {
        for &y in &all[a + 1..] {
            if !g.adjacent(x, y) {
                pairs.push((x, y));
            }
        }
    }
    if pairs.is_empty() {
        return Err(Error::Degenerate);
    }
    Ok(min_over_pairs(g, pairs))
}

/// A simple digraph. When produced by [`contract_matching`], vertex `x` stands
/// for the matched pair `provenance[x]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    vertices: usize,
    arcs: Vec<(usize, usize)>,
    #[serde(skip)]
    out: Vec<Vec<usize>>,
    provenance: Vec<(usize, usize)>,
}

impl Digraph {
    /// Builds a digraph; parallel arcs collapse, self-loops are rejected.
    pub fn new(vertices: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        if let Some(&(a, b)) = arcs.iter().find(|&&(a, b)| a == b || a >= vertices || b >= vertices) {
            return Err(Error::InvalidArc(a, b));
        }
        arcs.sort_unstable();
        arcs.dedup();
        let mut out = vec![Vec::new(); vertices];
        for &(a, b) in &arcs {
            out[a].push(b);
        }
        Ok(Self { vertices, arcs, out, provenance: Vec::new() })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn successors(&self, x: usize) -> &[usize] {
        &self.out[x]
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out[a].binary_search(&b).is_ok()
    }

    pub fn provenance(&self) -> &[(usize, usize)] {
        &self.provenance
    }

    /// Strong connectivity of the subdigraph induced by vertices not in `removed`.
    pub fn is_strongly_connected_without(&self, removed: &[bool]) -> bool {
        let Some(root) = (0..self.vertices).find(|&x| !removed[x]) else {
            return true;
        };
        let mut reverse = vec![Vec::new(); self.vertices];
        for &(a, b) in &self.arcs {
            reverse[b].push(a);
        }
        let reach = |adj: &[Vec<usize>]| {
            let mut seen = removed.to_vec();
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        reach(&self.out) && reach(&reverse)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.is_strongly_connected_without(&vec![false; self.vertices])
    }
}

/// `D(G, M)`: orient every edge from U to V and contract each edge of the
/// perfect matching `M`. Contracted vertex `x` is the pair `(u_x, M(u_x))`.
pub fn contract_matching(g: &BipartiteGraph, m: &Matching) -> Result<Digraph> {
    if g.n() != g.m() {
        return Err(Error::NotPerfectMatching("color classes differ in size"));
    }
    if m.size() != g.n() || !m.is_valid_for(g) {
        return Err(Error::NotPerfectMatching("pairs do not form a perfect matching of the graph"));
    }
    let mut mate_u = vec![0; g.n()];
    let mut owner_v = vec![0; g.m()];
    for &(i, j) in &m.pairs {
        mate_u[i] = j;
        owner_v[j] = i;
    }
    let arcs = g.edges().iter().filter(|&&(i, j)| mate_u[i] != j).map(|&(i, j)| (i, owner_v[j]));
    let mut d = Digraph::new(g.n(), arcs)?;
    d.provenance = (0..g.n()).map(|i| (i, mate_u[i])).collect();
    Ok(d)
}

/// True iff `D` has more than `k` vertices and stays strongly connected after
/// deleting any fewer than `k` of them: every ordered pair `(s, t)` without an
/// arc `s -> t` must be joined by at least `k` internally disjoint paths.
pub fn strongly_k_connected(d: &Digraph, k: usize) -> Result<bool> {
    if d.vertices <= k {
        return Err(Error::TooFewVertices { vertices: d.vertices, k });
    }
    if k == 0 {
        return Ok(true);
    }
    let ok = (0..d.vertices).into_par_iter().all(|s| {
        (0..d.vertices)
            .filter(|&t| t != s && !d.has_arc(s, t))
            .all(|t| vertex_disjoint_paths(&d.out, s, t, Some(k)) >= k)
    });
    Ok(ok)
}

/// Which connectivity lower bounds for k-critical-bipartite graphs hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundChecks {
    /// `κ_V ≥ k`.
    pub kappa_v_at_least_k: bool,
    /// `κ_U ≥ min(δ_U, k)`.
    pub kappa_u_at_least_min_delta_u_k: bool,
    /// `κ ≥ min(δ, k)`.
    pub kappa_at_least_min_delta_k: bool,
    /// Every separator smaller than `k` contains `N(u)` for some surviving `u ∈ U`;
    /// `None` when the graph is too large for the exhaustive check.
    pub small_separators_isolate_u: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub kappa: usize,
    #[serde(rename = "kappa_U")]
    pub kappa_u: usize,
    #[serde(rename = "kappa_V")]
    pub kappa_v: usize,
    pub degrees: DegreeStats,
    pub components: usize,
    pub bounds: BoundChecks,
}

impl ConnectivityReport {
    pub fn all_bounds_hold(&self) -> bool {
        let b = &self.bounds;
        b.kappa_v_at_least_k
            && b.kappa_u_at_least_min_delta_u_k
            && b.kappa_at_least_min_delta_k
            && b.small_separators_isolate_u != Some(false)
    }
}

/// Checks, for all `Z` with `|Z| < k` whose removal disconnects the rest, that
/// some `u ∈ U \ Z` has `N(u) ⊆ Z`.
fn small_separators_isolate_u(g: &BipartiteGraph, k: usize) -> bool {
    let (n, total) = (g.n(), g.n() + g.m());
    let adj: Vec<u32> = unified_adjacency(g)
        .iter()
        .map(|nb| nb.iter().fold(0u32, |acc, &y| acc | 1 << y))
        .collect();
    let everything: u32 = if total == 32 { u32::MAX } else { (1u32 << total) - 1 };
    let disconnected = |z: u32| {
        let alive = everything & !z;
        if alive.count_ones() < 2 {
            return false;
        }
        let start = alive.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[x] & alive & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen != alive
    };
    (0..=everything)
        .filter(|z: &u32| (z.count_ones() as usize) < k)
        .filter(|&z| disconnected(z))
        .all(|z| (0..n).any(|i| z & (1 << i) == 0 && adj[i] & !z == 0))
}

/// κ values, degree data, and bound compliance; no k-criticality precondition.
/// Requires `1 < m < n`.
pub fn connectivity_report(g: &BipartiteGraph) -> Result<ConnectivityReport> {
    let (n, m) = (g.n(), g.m());
    if !(n > m && m > 1) {
        return Err(Error::InvalidOrder { n, m, reason: "need n > m > 1" });
    }
    let k = n - m;
    let degrees = g.degree_stats();
    let (kappa, kappa_u, kappa_v) = (kappa(g)?, kappa_u(g)?, kappa_v(g)?);
    let bounds = BoundChecks {
        kappa_v_at_least_k: kappa_v >= k,
        kappa_u_at_least_min_delta_u_k: kappa_u >= degrees.delta_u.min(k),
        kappa_at_least_min_delta_k: kappa >= degrees.delta().min(k),
        small_separators_isolate_u: (n + m <= SEPARATOR_CHECK_MAX_VERTICES)
            .then(|| small_separators_isolate_u(g, k)),
    };
    Ok(ConnectivityReport {
        n,
        m,
        k,
        kappa,
        kappa_u,
        kappa_v,
        degrees,
        components: g.component_count(),
        bounds,
    })
}

/// [`connectivity_report`] for a graph that must be k-critical-bipartite.
pub fn check_connectivity_bounds(g: &BipartiteGraph) -> Result<ConnectivityReport> {
    let (n, m) = (g.n(), g.m());
    if !(n > m && m > 1) {
        return Err(Error::InvalidOrder { n, m, reason: "need n > m > 1" });
    }
    if !criticality::is_kcb_fast(g)?.verdict {
        return Err(Error::NotKcb);
    }
    connectivity_report(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bar_g, kappa_tuned};

    #[test]
    fn local_on_path() {
        let g = bar_g(6, 5).unwrap();
        assert_eq!(local_connectivity(&g, Vertex::U(0), Vertex::U(3)).unwrap(), 1);
    }

    #[test]
    fn local_on_complete() {
        let g = BipartiteGraph::complete(3, 2);
        assert_eq!(local_connectivity(&g, Vertex::U(0), Vertex::U(1)).unwrap(), 2);
    }

    #[test]
    fn local_across_components() {
        let g = BipartiteGraph::new(2, 2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(local_connectivity(&g, Vertex::U(0), Vertex::U(1)).unwrap(), 0);
    }

    #[test]
    fn local_errors() {
        let g = BipartiteGraph::complete(3, 2);
        assert!(matches!(local_connectivity(&g, Vertex::U(0), Vertex::V(0)), Err(Error::AdjacentPair(..))));
        assert!(matches!(local_connectivity(&g, Vertex::U(1), Vertex::U(1)), Err(Error::SameVertex(_))));
        assert!(matches!(local_connectivity(&g, Vertex::U(9), Vertex::U(1)), Err(Error::VertexOutOfRange(_))));
    }

    #[test]
    fn set_connectivity_of_path() {
        let g = bar_g(6, 5).unwrap();
        assert_eq!(kappa_v(&g).unwrap(), 1);
        assert_eq!(kappa_u(&g).unwrap(), 1);
        assert_eq!(kappa(&g).unwrap(), 1);
    }

    #[test]
    fn set_connectivity_of_complete() {
        let g = BipartiteGraph::complete(6, 4);
        assert_eq!(kappa_v(&g).unwrap(), 6);
        assert_eq!(kappa_u(&g).unwrap(), 4);
        assert_eq!(kappa(&g).unwrap(), 4);
    }

    #[test]
    fn set_errors() {
        let g = BipartiteGraph::complete(3, 2);
        assert_eq!(kappa_set(&g, &[Vertex::U(0)]), Err(Error::SetTooSmall));
        assert!(matches!(kappa_set(&g, &[Vertex::U(0), Vertex::V(1)]), Err(Error::AdjacentPairInS(..))));
    }

    #[test]
    fn kappa_degenerate_and_disconnected() {
        assert_eq!(kappa(&BipartiteGraph::complete(1, 1)), Err(Error::Degenerate));
        let g = BipartiteGraph::new(3, 2, [(0, 0), (1, 0), (2, 1)]).unwrap();
        assert_eq!(kappa(&g).unwrap(), 0);
    }

    #[test]
    fn kappa_tuned_6_4_2() {
        assert_eq!(kappa(&kappa_tuned(6, 4, 2).unwrap()).unwrap(), 2);
    }

    #[test]
    fn contraction_of_k22() {
        let g = BipartiteGraph::complete(2, 2);
        let d = contract_matching(&g, &Matching { pairs: vec![(0, 0), (1, 1)] }).unwrap();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.arcs(), &[(0, 1), (1, 0)]);
        assert_eq!(d.provenance(), &[(0, 0), (1, 1)]);
    }

    #[test]
    fn contraction_rejects_non_perfect() {
        let g = BipartiteGraph::complete(3, 2);
        let m = Matching { pairs: vec![(0, 0), (1, 1)] };
        assert!(matches!(contract_matching(&g, &m), Err(Error::NotPerfectMatching(_))));
        let g = BipartiteGraph::complete(2, 2);
        let m = Matching { pairs: vec![(0, 0)] };
        assert!(matches!(contract_matching(&g, &m), Err(Error::NotPerfectMatching(_))));
    }

    #[test]
    fn contraction_of_tilde_bar() {
        let t = bar_g(6, 5).unwrap().build_tilde().unwrap();
        let pm = crate::matching::perfect_matching(&t).unwrap();
        let d = contract_matching(&t, &pm).unwrap();
        assert_eq!(d.vertex_count(), 6);
        assert!(d.is_strongly_connected());
    }

    #[test]
    fn directed_cycle() {
        let d = Digraph::new(6, (0..6).map(|x| (x, (x + 1) % 6))).unwrap();
        assert!(strongly_k_connected(&d, 1).unwrap());
        assert!(!strongly_k_connected(&d, 2).unwrap());
        assert!(matches!(strongly_k_connected(&d, 6), Err(Error::TooFewVertices { .. })));
    }

    #[test]
    fn digraph_rejects_loops() {
        assert_eq!(Digraph::new(3, [(1, 1)]), Err(Error::InvalidArc(1, 1)));
        assert_eq!(Digraph::new(3, [(1, 3)]), Err(Error::InvalidArc(1, 3)));
    }

    #[test]
    fn bar_report() {
        let r = check_connectivity_bounds(&bar_g(6, 5).unwrap()).unwrap();
        assert_eq!((r.kappa, r.kappa_u, r.kappa_v), (1, 1, 1));
        assert!(r.all_bounds_hold());
        assert_eq!(r.bounds.small_separators_isolate_u, Some(true));
    }

    #[test]
    fn report_requires_kcb() {
        let g = crate::constructions::ddot_g(6, 5, 2).unwrap();
        assert_eq!(check_connectivity_bounds(&g), Err(Error::NotKcb));
    }
}
