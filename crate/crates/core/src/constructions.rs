//! Generators for the graph families: the minimum constructions (`bar`, `hat`),
//! the negative families (`check`, `dot`, `ddot`, `tripledot`), and baselines
//! (`star`, `kappa_tuned`, `complete`).
//!
//! Index arithmetic follows the `[o] = {0, …, o-1}` convention; every modular
//! reduction lands in `[0, o)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};
use crate::numeric::{degree_profile, div_ceil, gcd};

fn require_order(n: usize, m: usize) -> Result<()> {
    if n > m && m > 1 {
        Ok(())
    } else {
        Err(Error::InvalidOrder { n, m, reason: "need n > m > 1" })
    }
}

fn assemble(n: usize, m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> BipartiteGraph {
    BipartiteGraph::new(n, m, edges).expect("construction produced an invalid edge set")
}

/// `⌈m(k+1)/n⌉`, the least possible maximum U-degree of a k-CB graph of order (n, m).
pub fn minimum_max_degree_u(n: usize, m: usize) -> usize {
    div_ceil(m * (n - m + 1), n)
}

/// `Ĝᵃ_{n,m}`: `u_i` is joined to `a` consecutive V-vertices starting at `⌈im/n⌉`.
pub fn hat_g(n: usize, m: usize, a: usize) -> Result<BipartiteGraph> {
    require_order(n, m)?;
    if !(1..=m).contains(&a) {
        return Err(Error::InvalidA { a, m });
    }
    let edges = (0..n).flat_map(|i| {
        let start = div_ceil(i * m, n);
        (0..a).map(move |alpha| (i, (start + alpha) % m))
    });
    Ok(assemble(n, m, edges))
}

/// `Ḡ_{n,m}`: `v_j` is joined to the `k+1` cyclically consecutive U-vertices
/// ending at `u_{⌊jn/m⌋}`.
pub fn bar_g(n: usize, m: usize) -> Result<BipartiteGraph> {
    require_order(n, m)?;
    let k = n - m;
    let edges = (0..m).flat_map(|j| {
        let last = j * n / m;
        (0..=k).map(move |beta| ((last + n - beta) % n, j))
    });
    Ok(assemble(n, m, edges))
}

/// `Čᵃ_{n,m}` with `a = m(k+1)/n`: blocks of `x = n/gcd` U-vertices share the same
/// `a` consecutive V-vertices, starting at `⌊i/x⌋·y`.
pub fn check_g(n: usize, m: usize) -> Result<BipartiteGraph> {
    require_order(n, m)?;
    let k = n - m;
    let num = m * (k + 1);
    if !num.is_multiple_of(n) {
        return Err(Error::NotIntegerA { num, den: n });
    }
    let a = num / n;
    let c = gcd(n, m);
    let (x, y) = (n / c, m / c);
    let edges = (0..n).flat_map(|i| {
        let start = (i / x) * y;
        (0..a).map(move |alpha| (i, (start + alpha) % m))
    });
    Ok(assemble(n, m, edges))
}

/// `Ġᵇ_{x,y}`: `u_i` gets `p_i` consecutive V-vertices starting at offset `D_i`
/// of the degree profile.
pub fn dot_g(x: usize, y: usize, b: usize) -> Result<BipartiteGraph> {
    let profile = degree_profile(x, y, b)?;
    let edges = (0..x).flat_map(|i| {
        let (start, deg) = (profile.offsets[i], profile.p[i]);
        (0..deg).map(move |pi| (i, (start + pi) % y))
    });
    Ok(assemble(x, y, edges))
}

/// `G̈ᵇ_{x,y}`: `v_j` gets the `b` cyclically consecutive U-vertices starting at `jb mod x`.
pub fn ddot_g(x: usize, y: usize, b: usize) -> Result<BipartiteGraph> {
    if x == 0 || y == 0 {
        return Err(Error::InvalidProfileArgs { x, y, b, reason: "need x, y >= 1" });
    }
    if !(1..=x).contains(&b) {
        return Err(Error::InvalidProfileArgs { x, y, b, reason: "need 1 <= b <= x" });
    }
    let edges = (0..y).flat_map(|j| (0..b).map(move |beta| ((j * b + beta) % x, j)));
    Ok(assemble(x, y, edges))
}

/// Disjoint union of `c` copies of `Ġ^{k+1}_{n/c, m/c}`, copy `t` occupying
/// U-indices `[t·x, (t+1)·x)` and V-indices `[t·y, (t+1)·y)`.
pub fn tripledot_g(n: usize, m: usize, c: usize) -> Result<BipartiteGraph> {
    require_order(n, m)?;
    let invalid = |reason| Err(Error::InvalidC { c, n, m, reason });
    if c < 2 {
        return invalid("need c > 1");
    }
    if !n.is_multiple_of(c) || !m.is_multiple_of(c) {
        return invalid("c must divide both n and m");
    }
    let (x, y, b) = (n / c, m / c, n - m + 1);
    if y < 2 {
        return invalid("need m/c > 1");
    }
    if b > x {
        return invalid("need k+1 <= n/c");
    }
    let copy = dot_g(x, y, b)?;
    let edges =
        (0..c).flat_map(|t| copy.edges().iter().map(move |&(i, j)| (t * x + i, t * y + j)));
    Ok(assemble(n, m, edges))
}

/// `G*`: the matching `{(u_i, v_i)}` for `i < m`, plus `u_m, …, u_{n-1}` joined to all of V.
pub fn star_g(n: usize, m: usize) -> Result<BipartiteGraph> {
    require_order(n, m)?;
    let matching = (0..m).map(|i| (i, i));
    let universal = (m..n).flat_map(|i| (0..m).map(move |j| (i, j)));
    Ok(assemble(n, m, matching.chain(universal)))
}

/// `K_{n,m}` with the edges `(u_0, v_j)`, `j < m - kappa`, removed.
pub fn kappa_tuned(n: usize, m: usize, kappa: usize) -> Result<BipartiteGraph> {
    require_order(n, m)?;
    if !(1..=m).contains(&kappa) {
        return Err(Error::InvalidKappa { kappa, m });
    }
    let cut = m - kappa;
    let edges = (0..n)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j < cut));
    Ok(assemble(n, m, edges))
}

/// `K_{n,m}`; any `n, m >= 1`.
pub fn complete_g(n: usize, m: usize) -> Result<BipartiteGraph> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidOrder { n, m, reason: "need n, m >= 1" });
    }
    Ok(BipartiteGraph::complete(n, m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hat,
    Bar,
    Check,
    Dot,
    Ddot,
    Tripledot,
    Star,
    KappaTuned,
    Complete,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Hat,
        Family::Bar,
        Family::Check,
        Family::Dot,
        Family::Ddot,
        Family::Tripledot,
        Family::Star,
        Family::KappaTuned,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hat => "hat",
            Family::Bar => "bar",
            Family::Check => "check",
            Family::Dot => "dot",
            Family::Ddot => "ddot",
            Family::Tripledot => "tripledot",
            Family::Star => "star",
            Family::KappaTuned => "kappa_tuned",
            Family::Complete => "complete",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// A family plus its parameters. For `dot` and `ddot`, `n` and `m` play the roles
/// of `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub c: Option<usize>,
    pub kappa: Option<usize>,
}

impl ConstructionSpec {
    pub fn new(family: Family, n: usize, m: usize) -> Self {
        Self { family, n, m, a: None, b: None, c: None, kappa: None }
    }

    /// Builds the graph. `hat` defaults `a` to `⌈m(k+1)/n⌉`; `dot` and `ddot`
    /// default `b` to `n - m + 1`.
    pub fn build(&self) -> Result<BipartiteGraph> {
        let (n, m) = (self.n, self.m);
        let missing = |name| Error::MissingParameter { family: self.family.name(), name };
        let default_b = || {
            n.checked_sub(m)
                .map(|k| k + 1)
                .ok_or(Error::InvalidProfileArgs { x: n, y: m, b: 0, reason: "need x > y" })
        };
        match self.family {
            Family::Hat => {
                require_order(n, m)?;
                hat_g(n, m, self.a.unwrap_or_else(|| minimum_max_degree_u(n, m)))
            }
            Family::Bar => bar_g(n, m),
            Family::Check => check_g(n, m),
            Family::Dot => dot_g(n, m, self.b.map_or_else(default_b, Ok)?),
            Family::Ddot => ddot_g(n, m, self.b.map_or_else(default_b, Ok)?),
            Family::Tripledot => tripledot_g(n, m, self.c.ok_or_else(|| missing("c"))?),
            Family::Star => star_g(n, m),
            Family::KappaTuned => kappa_tuned(n, m, self.kappa.ok_or_else(|| missing("kappa"))?),
            Family::Complete => complete_g(n, m),
        }
    }
}
