//! Index arithmetic behind the constructions and bigraphic degree sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `⌈a / b⌉` for `b > 0`.
pub fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn check_order(n: usize, m: usize, j: usize) -> Result<()> {
    if !(n > m && m > 1) {
        return Err(Error::InvalidOrder { n, m, reason: "need n > m > 1" });
    }
    if j >= m {
        return Err(Error::InvalidOrder { n, m, reason: "residue j must lie in [m]" });
    }
    Ok(())
}

/// Number of `i ∈ [n]` with `⌈im/n⌉ ≡ j (mod m)`, by the closed form
/// `⌊jx/y⌋ - ⌊(j-1)x/y⌋` where `x/y` is `n/m` in lowest terms.
///
/// For `j = 0` the second floor is taken of a negative rational and rounds
/// toward negative infinity.
pub fn count_solutions(n: usize, m: usize, j: usize) -> Result<usize> {
    check_order(n, m, j)?;
    let c = gcd(n, m);
    let (x, y) = ((n / c) as i64, (m / c) as i64);
    let j = j as i64;
    let hi = (j * x).div_euclid(y);
    let lo = ((j - 1) * x).div_euclid(y);
    Ok((hi - lo) as usize)
}

/// End of the run of `i ∈ [n]` with `⌈im/n⌉ ≡ j (mod m)`, which is `⌊jn/m⌋`.
///
/// The solutions for each residue form a cyclic interval of `[n]`. For `j ≥ 1`
/// its end is the plain maximum; for `j = 0` the run wraps as `{n-t, …, n-1, 0}`
/// and the end is 0.
pub fn max_solution_index(n: usize, m: usize, j: usize) -> Result<usize> {
    check_order(n, m, j)?;
    Ok(j * n / m)
}

/// The `(P, Q)` degree pair for parameters `x > y > 1`, `1 <= b <= x`.
///
/// `Q` is `b` repeated `y` times. `P` has length `x`: its first `l` entries are
/// `⌈yb/x⌉` and the rest `⌊yb/x⌋`, with `l = by - x⌊yb/x⌋`. `offsets[i]` is the
/// running sum `p_0 + … + p_{i-1}` reduced mod `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub x: usize,
    pub y: usize,
    pub b: usize,
    pub l: usize,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub offsets: Vec<usize>,
}

pub fn degree_profile(x: usize, y: usize, b: usize) -> Result<DegreeProfile> {
    if !(x > y && y > 1) {
        return Err(Error::InvalidProfileArgs { x, y, b, reason: "need x > y > 1" });
    }
    if !(1..=x).contains(&b) {
        return Err(Error::InvalidProfileArgs { x, y, b, reason: "need 1 <= b <= x" });
    }
    let total = b * y;
    let low = total / x;
    let l = total - x * low;
    let p: Vec<usize> = (0..x).map(|i| if i < l { low + 1 } else { low }).collect();
    let q = vec![b; y];
    let offsets = p
        .iter()
        .scan(0usize, |acc, &pi| {
            let d = *acc % y;
            *acc += pi;
            Some(d)
        })
        .collect();
    Ok(DegreeProfile { x, y, b, l, p, q, offsets })
}

/// Outcome of the bigraphic test; `realization` lists `(p-index, q-index)` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bigraphic {
    pub bigraphic: bool,
    pub realization: Option<Vec<(usize, usize)>>,
}

impl Bigraphic {
    fn no() -> Self {
        Bigraphic { bigraphic: false, realization: None }
    }
}

fn check_sorted(seq: &[usize], name: &'static str) -> Result<()> {
    if seq.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted(name));
    }
    Ok(())
}

/// Decides whether `(P, Q)` is realized by some bipartite graph, where `P` gives
/// the degrees of one class and `Q` of the other.
///
/// Repeatedly removes the largest `p` and decrements the `p` largest remaining
/// entries of `Q`; among equal values the lowest index is decremented first.
pub fn is_bigraphic(p: &[usize], q: &[usize]) -> Result<Bigraphic> {
    check_sorted(p, "P")?;
    check_sorted(q, "Q")?;
    if p.iter().sum::<usize>() != q.iter().sum::<usize>() {
        return Ok(Bigraphic::no());
    }
    let mut residual = q.to_vec();
    let mut order: Vec<usize> = (0..q.len()).collect();
    let mut edges = Vec::with_capacity(q.iter().sum());
    for (i, &pi) in p.iter().enumerate() {
        if pi > residual.len() {
            return Ok(Bigraphic::no());
        }
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        for &j in &order[..pi] {
            if residual[j] == 0 {
                return Ok(Bigraphic::no());
            }
            residual[j] -= 1;
            edges.push((i, j));
        }
    }
    debug_assert!(residual.iter().all(|&r| r == 0));
    edges.sort_unstable();
    Ok(Bigraphic { bigraphic: true, realization: Some(edges) })
}
