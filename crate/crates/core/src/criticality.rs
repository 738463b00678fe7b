//! Verifiers for k-critical-bipartiteness.
//!
//! A bipartite graph with `k = |U| - |V| > 0` is k-critical-bipartite (k-CB) when
//! deleting any `k` vertices of U leaves a matching that saturates V. Three
//! independent deciders are provided:
//!
//! * [`is_kcb_bruteforce`] deletes every k-subset of U and runs a matching.
//! * [`is_kcb_hall`] checks `|N(V')| >= |V'| + k` for every nonempty `V' ⊆ V`.
//! * [`is_kcb_fast`] adds `k` universal V-vertices, contracts a perfect matching
//!   of the result, and tests the digraph for strong k-connectivity.
//!
//! Negative verdicts carry a witness that [`Witness::holds_for`] rechecks
//! directly against the graph.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bigraph::{BipartiteGraph, DegreeStats};
use crate::connectivity::{contract_matching, strongly_k_connected};
use crate::constructions::minimum_max_degree_u;
use crate::error::{Error, Result};
use crate::matching::{perfect_matching, Matcher};

pub const DEFAULT_SUBSET_BUDGET: u64 = 10_000_000;
pub const DEFAULT_HALL_BUDGET: u64 = 1 << 24;
/// Environment variable that overrides both subset budgets.
pub const BUDGET_ENV: &str = "KCBG_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Cap on fault subsets for the brute-force and extendability checks.
    pub subset_budget: u64,
    /// Cap on `2^m` for the Hall check.
    pub hall_budget: u64,
    /// Ignore both caps.
    pub force: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { subset_budget: DEFAULT_SUBSET_BUDGET, hall_budget: DEFAULT_HALL_BUDGET, force: false }
    }
}

impl VerifyOptions {
    /// Defaults, with both budgets replaced by `KCBG_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let mut opts = Self::default();
        if let Some(b) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()) {
            opts.subset_budget = b;
            opts.hall_budget = b;
        }
        opts
    }

    pub fn forced(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    fn admit(&self, what: &'static str, required: u128, budget: u64) -> Result<()> {
        if !self.force && required > u128::from(budget) {
            return Err(Error::BudgetExceeded { what, required, budget });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Hall,
    Fast,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Bruteforce, Method::Hall, Method::Fast];

    pub fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Hall => "hall",
            Method::Fast => "fast",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Why a graph is not k-CB.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `|S| = k` and `G - S` has no matching saturating V.
    FaultSet { u: Vec<usize> },
    /// Nonempty `V'` with `|N(V')| < |V'| + k`.
    HallSet { v: Vec<usize>, neighborhood_size: usize },
}

impl Witness {
    pub fn holds_for(&self, g: &BipartiteGraph) -> bool {
        let Some(k) = g.k() else { return false };
        match self {
            Witness::FaultSet { u } => {
                let mut s = u.clone();
                s.sort_unstable();
                s.dedup();
                if s.len() != k || s.iter().any(|&i| i >= g.n()) {
                    return false;
                }
                let mut matcher = Matcher::new(g);
                s.iter().for_each(|&i| matcher.block_u(i));
                !matcher.saturates_v()
            }
            Witness::HallSet { v, .. } => {
                if v.is_empty() || v.iter().any(|&j| j >= g.m()) {
                    return false;
                }
                let mut v = v.clone();
                v.sort_unstable();
                v.dedup();
                neighborhood_size(g, &v) < v.len() + k
            }
        }
    }
}

pub fn neighborhood_size(g: &BipartiteGraph, vs: &[usize]) -> usize {
    let mut hit = vec![false; g.n()];
    vs.iter().flat_map(|&j| g.neighbors_v(j)).for_each(|&i| hit[i] = true);
    hit.iter().filter(|&&h| h).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub verdict: bool,
    pub method: Method,
    pub witness: Option<Witness>,
    /// Subproblems examined: fault subsets up to and including the witness for
    /// brute force, subsets of V for Hall, max-flow pairs for the fast test.
    pub work: u64,
}

fn surplus_order(g: &BipartiteGraph) -> Result<usize> {
    match g.k() {
        Some(k) if k > 0 && g.m() >= 1 => Ok(k),
        _ => Err(Error::InvalidOrder { n: g.n(), m: g.m(), reason: "need n > m >= 1" }),
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn is_kcb_bruteforce(g: &BipartiteGraph) -> Result<VerifyReport> {
    is_kcb_bruteforce_with(g, &VerifyOptions::default())
}

/// Fault enumeration. On failure the witness is the lexicographically smallest
/// k-subset `S ⊆ U` for which `G - S` has no complete matching.
pub fn is_kcb_bruteforce_with(g: &BipartiteGraph, opts: &VerifyOptions) -> Result<VerifyReport> {
    let k = surplus_order(g)?;
    let n = g.n();
    let total = binomial(n, k);
    opts.admit("fault enumeration", total, opts.subset_budget)?;

    // Subsets are grouped by their smallest element; the first group holding a
    // failing subset contains the global lexicographic minimum.
    let found = (0..=n - k).into_par_iter().find_map_first(|first| {
        let mut matcher = Matcher::new(g);
        for (idx, rest) in (first + 1..n).combinations(k - 1).enumerate() {
            matcher.clear_blocks();
            matcher.block_u(first);
            rest.iter().for_each(|&i| matcher.block_u(i));
            if !matcher.saturates_v() {
                let mut s = Vec::with_capacity(k);
                s.push(first);
                s.extend(rest);
                return Some((first, idx as u128, s));
            }
        }
        None
    });
    Ok(match found {
        Some((first, idx, s)) => {
            let before: u128 = (0..first).map(|f| binomial(n - 1 - f, k - 1)).sum();
            VerifyReport {
                verdict: false,
                method: Method::Bruteforce,
                witness: Some(Witness::FaultSet { u: s }),
                work: (before + idx + 1) as u64,
            }
        }
        None => VerifyReport { verdict: true, method: Method::Bruteforce, witness: None, work: total as u64 },
    })
}

/// Candidate Hall violator, ordered by surplus, then size, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Violator {
    surplus: isize,
    set: Vec<usize>,
    neighborhood: usize,
}

impl Violator {
    fn key(&self) -> (isize, usize, &[usize]) {
        (self.surplus, self.set.len(), &self.set)
    }
}

impl Ord for Violator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Violator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct HallWalk<'a> {
    masks: &'a [Vec<u64>],
    k: usize,
    m: usize,
    current: Vec<usize>,
    unions: Vec<Vec<u64>>,
    best: Option<Violator>,
    visited: u64,
}

impl HallWalk<'_> {
    fn visit(&mut self, depth: usize) {
        self.visited += 1;
        let size: usize = self.unions[depth].iter().map(|w| w.count_ones() as usize).sum();
        if size < self.current.len() + self.k {
            let cand = Violator {
                surplus: size as isize - self.current.len() as isize,
                set: self.current.clone(),
                neighborhood: size,
            };
            if self.best.as_ref().is_none_or(|b| cand < *b) {
                self.best = Some(cand);
            }
        }
        let last = *self.current.last().expect("walk starts from a singleton");
        for next in last + 1..self.m {
            let (lo, hi) = self.unions.split_at_mut(depth + 1);
            for ((dst, a), b) in hi[0].iter_mut().zip(&lo[depth]).zip(&self.masks[next]) {
                *dst = a | b;
            }
            self.current.push(next);
            self.visit(depth + 1);
            self.current.pop();
        }
    }
}

pub fn is_kcb_hall(g: &BipartiteGraph) -> Result<VerifyReport> {
    is_kcb_hall_with(g, &VerifyOptions::default())
}

/// Surplus check over all nonempty `V' ⊆ V`. On failure the witness has the
/// smallest surplus `|N(V')| - |V'|`, then the fewest vertices, then the
/// lexicographically smallest index list.
pub fn is_kcb_hall_with(g: &BipartiteGraph, opts: &VerifyOptions) -> Result<VerifyReport> {
    let k = surplus_order(g)?;
    let m = g.m();
    let required = if m >= 127 { u128::MAX } else { 1u128 << m };
    opts.admit("Hall subset enumeration", required, opts.hall_budget)?;
    let words = g.n().div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = (0..m)
        .map(|j| {
            let mut w = vec![0u64; words];
            g.neighbors_v(j).iter().for_each(|&i| w[i / 64] |= 1 << (i % 64));
            w
        })
        .collect();
    let (best, visited) = (0..m)
        .into_par_iter()
        .map(|start| {
            let mut unions = vec![vec![0u64; words]; m];
            unions[0].clone_from(&masks[start]);
            let mut walk =
                HallWalk { masks: &masks, k, m, current: vec![start], unions, best: None, visited: 0 };
            walk.visit(0);
            (walk.best, walk.visited)
        })
        .reduce(
            || (None, 0),
            |(a, va), (b, vb)| {
                let best = match (a, b) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                (best, va + vb)
            },
        );
    let witness = best.map(|b| Witness::HallSet { v: b.set, neighborhood_size: b.neighborhood });
    Ok(VerifyReport { verdict: witness.is_none(), method: Method::Hall, witness, work: visited })
}

/// Finds some Hall violator in polynomial time, or `None` when G is k-CB.
///
/// For each `v0`, V is extended with `k` copies of `v0`; a matching saturating
/// the extended class exists iff every `V' ∋ v0` has surplus at least `k`. When
/// it does not, the V-vertices reachable by alternating paths from an
/// unmatched one (copies folded back onto `v0`) form a violator.
pub fn find_hall_violator(g: &BipartiteGraph) -> Option<Witness> {
    let k = g.k()?;
    let (n, m) = (g.n(), g.m());
    for v0 in 0..m {
        let copies = (m..m + k).flat_map(|c| g.neighbors_v(v0).iter().map(move |&i| (i, c)));
        let ext = BipartiteGraph::new(n, m + k, g.edges().iter().copied().chain(copies))
            .expect("copies of an existing vertex are valid edges");
        let mut matcher = Matcher::new(&ext);
        if matcher.max_matching_size() == m + k {
            continue;
        }
        let free = (0..m + k).find(|&j| matcher.mate_of_v(j).is_none())?;
        let mut seen_v = vec![false; m + k];
        let mut seen_u = vec![false; n];
        let mut stack = vec![free];
        seen_v[free] = true;
        while let Some(j) = stack.pop() {
            for &i in ext.neighbors_v(j) {
                if !seen_u[i] {
                    seen_u[i] = true;
                    if let Some(next) = matcher.mate_of_u(i) {
                        if !seen_v[next] {
                            seen_v[next] = true;
                            stack.push(next);
                        }
                    }
                }
            }
        }
        let mut set: Vec<usize> = (0..m + k)
            .filter(|&j| seen_v[j])
            .map(|j| if j >= m { v0 } else { j })
            .collect();
        set.sort_unstable();
        set.dedup();
        let neighborhood_size = neighborhood_size(g, &set);
        return Some(Witness::HallSet { v: set, neighborhood_size });
    }
    None
}

pub fn is_kcb_fast(g: &BipartiteGraph) -> Result<VerifyReport> {
    let k = surplus_order(g)?;
    let negative = |work| -> Result<VerifyReport> {
        let witness = find_hall_violator(g).ok_or(Error::Internal("negative verdict without a Hall violator"))?;
        Ok(VerifyReport { verdict: false, method: Method::Fast, witness: Some(witness), work })
    };
    // A k-CB graph is connected.
    if !g.is_connected() {
        return negative(0);
    }
    let tilde = g.build_tilde()?;
    let Some(pm) = perfect_matching(&tilde) else {
        return negative(0);
    };
    let d = contract_matching(&tilde, &pm)?;
    let pairs = (0..d.vertex_count())
        .map(|s| (0..d.vertex_count()).filter(|&t| t != s && !d.has_arc(s, t)).count() as u64)
        .sum();
    if strongly_k_connected(&d, k)? {
        if find_hall_violator(g).is_some() {
            return Err(Error::Internal("positive verdict contradicted by a Hall violator"));
        }
        Ok(VerifyReport { verdict: true, method: Method::Fast, witness: None, work: pairs })
    } else {
        negative(pairs)
    }
}

pub fn verify(g: &BipartiteGraph, method: Method, opts: &VerifyOptions) -> Result<VerifyReport> {
    match method {
        Method::Bruteforce => is_kcb_bruteforce_with(g, opts),
        Method::Hall => is_kcb_hall_with(g, opts),
        Method::Fast => is_kcb_fast(g),
    }
}

pub fn is_k_extendable(g: &BipartiteGraph, k: usize) -> Result<bool> {
    is_k_extendable_with(g, k, &VerifyOptions::default())
}

/// For equal classes: every choice of `k` vertices from each class leaves a
/// graph with a perfect matching.
pub fn is_k_extendable_with(g: &BipartiteGraph, k: usize, opts: &VerifyOptions) -> Result<bool> {
    let (n, m) = (g.n(), g.m());
    if n != m {
        return Err(Error::UnequalClasses { n, m });
    }
    if 2 * k + 2 > n + m {
        return Err(Error::InvalidOrder { n, m, reason: "need k <= (|U| + |V| - 2) / 2" });
    }
    let per_side = binomial(n, k);
    opts.admit("extendability enumeration", per_side.saturating_mul(per_side), opts.subset_budget)?;
    let u_sets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    Ok(u_sets.par_iter().all(|us| {
        let mut matcher = Matcher::new(g);
        (0..m).combinations(k).all(|vs| {
            matcher.clear_blocks();
            us.iter().for_each(|&i| matcher.block_u(i));
            vs.iter().for_each(|&j| matcher.block_v(j));
            matcher.saturates_v()
        })
    }))
}

/// k-CB with the optimal triple `|E| = m(k+1)`, `Δ_U = ⌈m(k+1)/n⌉`, `Δ_V = k+1`.
pub fn is_minimum_kcb(g: &BipartiteGraph) -> Result<(bool, DegreeStats)> {
    let (n, m) = (g.n(), g.m());
    if !(n > m && m > 1) {
        return Err(Error::InvalidOrder { n, m, reason: "need n > m > 1" });
    }
    let k = n - m;
    let stats = g.degree_stats();
    let optimal = stats.edge_count == m * (k + 1)
        && stats.max_delta_u == minimum_max_degree_u(n, m)
        && stats.max_delta_v == k + 1;
    Ok((optimal && is_kcb_fast(g)?.verdict, stats))
}

/// True iff removing any single edge destroys k-criticality.
pub fn minimality_of_star(g: &BipartiteGraph) -> Result<bool> {
    if !is_kcb_fast(g)?.verdict {
        return Err(Error::NotKcb);
    }
    let results: Result<Vec<bool>> = g
        .edges()
        .par_iter()
        .map(|&(i, j)| is_kcb_fast(&g.without_edge(i, j)).map(|r| !r.verdict))
        .collect();
    Ok(results?.into_iter().all(|broken| broken))
}
