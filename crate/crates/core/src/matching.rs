//! Maximum bipartite matching by augmenting paths.
//!
//! V-vertices are matched in increasing index order and each search scans
//! U-neighbors in increasing order, so results are reproducible. A [`Matcher`]
//! owns its scratch buffers and supports masking vertices out, which lets the
//! fault-enumeration verifiers run many `G - S` queries without rebuilding the
//! graph or allocating.

use serde::{Deserialize, Serialize};

use crate::bigraph::BipartiteGraph;

const NONE: usize = usize::MAX;

/// A set of vertex-disjoint edges `(i, j)`, sorted by `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Whether the pairs are edges of `g` and no vertex repeats.
    pub fn is_valid_for(&self, g: &BipartiteGraph) -> bool {
        let mut seen_u = vec![false; g.n()];
        let mut seen_v = vec![false; g.m()];
        self.pairs.iter().all(|&(i, j)| {
            g.has_edge(i, j) && !std::mem::replace(&mut seen_u[i], true) && !std::mem::replace(&mut seen_v[j], true)
        })
    }
}

pub struct Matcher<'g> {
    g: &'g BipartiteGraph,
    mate_u: Vec<usize>,
    mate_v: Vec<usize>,
    visit: Vec<u32>,
    stamp: u32,
    blocked_u: Vec<bool>,
    blocked_v: Vec<bool>,
}

impl<'g> Matcher<'g> {
    pub fn new(g: &'g BipartiteGraph) -> Self {
        Self {
            g,
            mate_u: vec![NONE; g.n()],
            mate_v: vec![NONE; g.m()],
            visit: vec![0; g.n()],
            stamp: 0,
            blocked_u: vec![false; g.n()],
            blocked_v: vec![false; g.m()],
        }
    }

    pub fn graph(&self) -> &'g BipartiteGraph {
        self.g
    }

    pub fn block_u(&mut self, i: usize) {
        self.blocked_u[i] = true;
    }

    pub fn block_v(&mut self, j: usize) {
        self.blocked_v[j] = true;
    }

    pub fn clear_blocks(&mut self) {
        self.blocked_u.fill(false);
        self.blocked_v.fill(false);
    }

    fn reset(&mut self) {
        self.mate_u.fill(NONE);
        self.mate_v.fill(NONE);
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.visit.fill(0);
            self.stamp = 1;
        }
        self.stamp
    }

    fn augment(&mut self, j: usize) -> bool {
        let g = self.g;
        // Prefer the lowest free neighbor before rerouting anyone.
        if let Some(&i) = g.neighbors_v(j).iter().find(|&&i| !self.blocked_u[i] && self.mate_u[i] == NONE) {
            self.mate_u[i] = j;
            self.mate_v[j] = i;
            return true;
        }
        for &i in g.neighbors_v(j) {
            if self.blocked_u[i] || self.visit[i] == self.stamp {
                continue;
            }
            self.visit[i] = self.stamp;
            if self.augment(self.mate_u[i]) {
                self.mate_u[i] = j;
                self.mate_v[j] = i;
                return true;
            }
        }
        false
    }

    /// Size of a maximum matching among unblocked vertices.
    pub fn max_matching_size(&mut self) -> usize {
        self.reset();
        let mut size = 0;
        for j in 0..self.g.m() {
            if self.blocked_v[j] {
                continue;
            }
            self.next_stamp();
            if self.augment(j) {
                size += 1;
            }
        }
        size
    }

    /// Whether every unblocked V-vertex can be matched. Stops at the first
    /// V-vertex that cannot be augmented, since it stays unmatched in every
    /// maximum matching reachable from this point.
    pub fn saturates_v(&mut self) -> bool {
        self.reset();
        for j in 0..self.g.m() {
            if self.blocked_v[j] {
                continue;
            }
            self.next_stamp();
            if !self.augment(j) {
                return false;
            }
        }
        true
    }

    /// The matching left by the most recent query.
    pub fn current(&self) -> Matching {
        let pairs = self
            .mate_u
            .iter()
            .enumerate()
            .filter(|&(_, &j)| j != NONE)
            .map(|(i, &j)| (i, j))
            .collect();
        Matching { pairs }
    }

    /// For the most recent query, the V-vertex the U-vertex `i` is matched to.
    pub fn mate_of_u(&self, i: usize) -> Option<usize> {
        Some(self.mate_u[i]).filter(|&j| j != NONE)
    }

    /// For the most recent query, the U-vertex `v_j` is matched to.
    pub fn mate_of_v(&self, j: usize) -> Option<usize> {
        Some(self.mate_v[j]).filter(|&i| i != NONE)
    }
}

pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let mut matcher = Matcher::new(g);
    matcher.max_matching_size();
    matcher.current()
}

/// True iff some matching saturates V (has size `m`).
pub fn has_complete_matching(g: &BipartiteGraph) -> bool {
    Matcher::new(g).saturates_v()
}

/// A matching saturating both classes, if one exists.
pub fn perfect_matching(g: &BipartiteGraph) -> Option<Matching> {
    if g.n() != g.m() {
        return None;
    }
    let mut matcher = Matcher::new(g);
    matcher.saturates_v().then(|| matcher.current())
}
