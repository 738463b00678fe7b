//! Unit-capacity max-flow on a vertex-split network.
//!
//! Each vertex `x` becomes `x_in -> x_out` with capacity 1 (unbounded for the
//! terminals), and each arc `a -> b` becomes `a_out -> b_in`. The max flow from
//! `s_out` to `t_in` is then the number of internally vertex-disjoint `s -> t`
//! paths, which by Menger equals the smallest vertex cut separating them when
//! there is no arc `s -> t`.

use std::collections::VecDeque;

struct Network {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

const END: usize = usize::MAX;
const BIG: u32 = u32::MAX / 2;

impl Network {
    fn new(nodes: usize) -> Self {
        Self { head: vec![END; nodes], to: Vec::new(), cap: Vec::new(), next: Vec::new() }
    }

    fn add(&mut self, a: usize, b: usize, cap: u32) {
        for (from, dest, c) in [(a, b, cap), (b, a, 0)] {
            self.to.push(dest);
            self.cap.push(c);
            self.next.push(self.head[from]);
            self.head[from] = self.to.len() - 1;
        }
    }

    /// One BFS augmentation; returns false when no augmenting path remains.
    fn augment(&mut self, s: usize, t: usize, parent: &mut [usize], queue: &mut VecDeque<usize>) -> bool {
        parent.fill(END);
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let mut e = self.head[x];
            while e != END {
                let y = self.to[e];
                if self.cap[e] > 0 && parent[y] == END && y != s {
                    parent[y] = e;
                    if y == t {
                        let mut y = t;
                        while y != s {
                            let e = parent[y];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            y = self.to[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
                e = self.next[e];
            }
        }
        false
    }
}

/// Number of internally vertex-disjoint `s -> t` paths in the digraph with
/// out-adjacency `out`, stopping early once `limit` paths are found.
///
/// The caller guarantees `s != t`; an arc `s -> t` counts as one path.
pub fn vertex_disjoint_paths(out: &[Vec<usize>], s: usize, t: usize, limit: Option<usize>) -> usize {
    let nv = out.len();
    let mut net = Network::new(2 * nv);
    for x in 0..nv {
        let c = if x == s || x == t { BIG } else { 1 };
        net.add(2 * x, 2 * x + 1, c);
    }
    for (a, succ) in out.iter().enumerate() {
        for &b in succ {
            let c = if a == s && b == t { 1 } else { BIG };
            net.add(2 * a + 1, 2 * b, c);
        }
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut parent = vec![END; 2 * nv];
    let mut queue = VecDeque::new();
    let mut flow = 0;
    while limit.is_none_or(|l| flow < l) && net.augment(src, sink, &mut parent, &mut queue) {
        flow += 1;
    }
    flow
}
