//! Exhaustive oracles and corpus generators shared by the integration tests.
//! Nothing here calls into the matching, flow, or verifier code it checks.

#![allow(dead_code, clippy::needless_range_loop)]

use kcbg::{bar_g, check_g, ddot_g, hat_g, tripledot_g, BipartiteGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.8];

pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize, p: f64) -> BipartiteGraph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    BipartiteGraph::new(n, m, edges).unwrap()
}

/// `count` random graphs with `2 <= n <= max_n`, `1 <= m < n`, and edge
/// probability cycling through [`EDGE_PROBABILITIES`].
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|t| {
            let n = rng.gen_range(2..=max_n);
            let m = rng.gen_range(1..n);
            random_graph(&mut rng, n, m, EDGE_PROBABILITIES[t % 3])
        })
        .collect()
}

pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Last element, in cyclic order of `[n]`, of a nonempty run of indices `sols`:
/// the `s` whose successor `(s + 1) mod n` is not in the run. For residue 0
/// the solutions wrap around (`{n-t, …, n-1, 0}`), so this is 0, not `n - 1`.
pub fn cyclic_last(n: usize, sols: &[usize]) -> usize {
    let ends: Vec<usize> = sols.iter().copied().filter(|&s| !sols.contains(&((s + 1) % n))).collect();
    assert_eq!(ends.len(), 1, "solutions {sols:?} are not a single cyclic run");
    ends[0]
}

/// Every graph the construction criteria build for `1 < m < n <= max_n`.
pub fn construction_corpus(max_n: usize) -> Vec<(String, BipartiteGraph)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for m in 2..n {
            let k = n - m;
            out.push((format!("bar({n},{m})"), bar_g(n, m).unwrap()));
            let a = ceil_div(m * (k + 1), n);
            out.push((format!("hat({n},{m},{a})"), hat_g(n, m, a).unwrap()));
            if n % (k + 1) == 0 && n / (k + 1) > 1 {
                out.push((format!("ddot({n},{m},{})", k + 1), ddot_g(n, m, k + 1).unwrap()));
            }
            for c in 2..=m {
                if let Ok(g) = tripledot_g(n, m, c) {
                    out.push((format!("tripledot({n},{m},{c})"), g));
                }
            }
            if (m * (k + 1)) % n == 0 {
                out.push((format!("check({n},{m})"), check_g(n, m).unwrap()));
            }
        }
    }
    out
}

/// Definition-level k-CB test: delete every k-subset of U (as a bitmask) and
/// look for a V-saturating matching by exhaustive assignment.
pub fn kcb_by_definition(g: &BipartiteGraph) -> bool {
    let (n, m) = (g.n(), g.m());
    let k = n - m;
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .all(|s| saturating_assignment(g, 0, s))
}

fn saturating_assignment(g: &BipartiteGraph, j: usize, used: u32) -> bool {
    if j == g.m() {
        return true;
    }
    g.neighbors_v(j)
        .iter()
        .any(|&i| used & (1 << i) == 0 && saturating_assignment(g, j + 1, used | (1 << i)))
}

/// Minimum vertex cover by exhaustive search over subsets of `U ∪ V`.
pub fn min_vertex_cover(g: &BipartiteGraph) -> usize {
    let (n, m) = (g.n(), g.m());
    (0u32..1 << (n + m))
        .filter(|&c| g.edges().iter().all(|&(i, j)| c & (1 << i) != 0 || c & (1 << (n + j)) != 0))
        .map(|c| c.count_ones() as usize)
        .min()
        .unwrap()
}

/// Unified adjacency bitmasks: `u_i -> i`, `v_j -> n + j`.
pub fn adjacency_masks(g: &BipartiteGraph) -> Vec<u32> {
    let n = g.n();
    let mut adj = vec![0u32; n + g.m()];
    for &(i, j) in g.edges() {
        adj[i] |= 1 << (n + j);
        adj[n + j] |= 1 << i;
    }
    adj
}

fn component_labels(adj: &[u32], removed: u32) -> Vec<usize> {
    let total = adj.len();
    let mut label = vec![usize::MAX; total];
    let mut next = 0;
    for s in 0..total {
        if removed & (1 << s) != 0 || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..total {
                if adj[x] & (1 << y) != 0 && removed & (1 << y) == 0 && label[y] == usize::MAX {
                    label[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// For every nonadjacent pair `(x, y)` (unified ids, `x < y`), the size of a
/// smallest vertex set avoiding both whose removal separates them.
pub fn all_local_cuts(g: &BipartiteGraph) -> Vec<((usize, usize), usize)> {
    let adj = adjacency_masks(g);
    let total = adj.len();
    let mut best = vec![vec![usize::MAX; total]; total];
    for z in 0u32..1 << total {
        let labels = component_labels(&adj, z);
        let size = z.count_ones() as usize;
        for x in 0..total {
            for y in x + 1..total {
                if z & (1 << x) == 0 && z & (1 << y) == 0 && labels[x] != labels[y] && size < best[x][y] {
                    best[x][y] = size;
                }
            }
        }
    }
    let mut out = Vec::new();
    for x in 0..total {
        for y in x + 1..total {
            if adj[x] & (1 << y) == 0 {
                out.push(((x, y), best[x][y]));
            }
        }
    }
    out
}

fn strongly_connected_without(vertices: usize, arcs: &[(usize, usize)], removed: u32) -> bool {
    (0..vertices).filter(|&v| removed & (1 << v) == 0).all(|s| {
        let mut seen = removed | (1 << s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(a, b) in arcs {
                if a == x && seen & (1 << b) == 0 {
                    seen |= 1 << b;
                    stack.push(b);
                }
            }
        }
        seen.count_ones() as usize == vertices
    })
}

/// Strong k-connectivity by deleting every vertex set of size `< k`.
pub fn strongly_k_connected_by_deletion(vertices: usize, arcs: &[(usize, usize)], k: usize) -> bool {
    vertices > k
        && (0u32..1 << vertices)
            .filter(|x| (x.count_ones() as usize) < k)
            .all(|removed| strongly_connected_without(vertices, arcs, removed))
}

/// Size of the smallest vertex set whose deletion leaves a digraph that is not
/// strongly connected, or `vertices` if there is none. The digraph is strongly
/// k-connected iff `k < vertices` and this is at least `k`.
pub fn smallest_breaking_set(vertices: usize, arcs: &[(usize, usize)]) -> usize {
    (0u32..1 << vertices)
        .filter(|&removed| !strongly_connected_without(vertices, arcs, removed))
        .map(|removed| removed.count_ones() as usize)
        .min()
        .unwrap_or(vertices)
}

/// Gale–Ryser: `(P, Q)` is bigraphic iff sums agree and for every `t`,
/// `p_0 + … + p_{t-1} <= Σ_j min(q_j, t)`.
pub fn gale_ryser(p: &[usize], q: &[usize]) -> bool {
    if p.iter().sum::<usize>() != q.iter().sum::<usize>() {
        return false;
    }
    let mut prefix = 0;
    for (t, &pt) in p.iter().enumerate() {
        prefix += pt;
        let cap: usize = q.iter().map(|&qj| qj.min(t + 1)).sum();
        if prefix > cap {
            return false;
        }
    }
    true
}
