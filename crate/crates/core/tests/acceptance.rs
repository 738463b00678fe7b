//! End-to-end acceptance checks. Run with `--nocapture` to see one line per
//! criterion; the test fails if any criterion fails.

mod common;

use common::*;
use kcbg::bigraph::Vertex;
use kcbg::connectivity::{connectivity_report, local_connectivity, Digraph};
use kcbg::format::to_edge_list;
use kcbg::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

type Outcome = std::result::Result<(), Vec<String>>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn collect(failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

fn orders(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (3..=max_n).flat_map(|n| (2..n).map(move |m| (n, m)))
}

fn brute(g: &BipartiteGraph) -> bool {
    is_kcb_bruteforce(g).unwrap().verdict
}

fn bar_positive() -> Outcome {
    let mut bad = Vec::new();
    for (n, m) in orders(12) {
        let k = n - m;
        let g = bar_g(n, m).unwrap();
        let s = g.degree_stats();
        if !brute(&g) {
            bad.push(format!("bar({n},{m}) not k-CB"));
        }
        let expected = (m * (k + 1), k + 1, k + 1, ceil_div(m * (k + 1), n));
        let got = (s.edge_count, s.max_delta_v, s.delta_v, s.max_delta_u);
        if got != expected {
            bad.push(format!("bar({n},{m}) stats {got:?}, expected {expected:?}"));
        }
    }
    collect(bad)
}

fn hat_and_bar_relation() -> Outcome {
    let mut bad = Vec::new();
    for (n, m) in orders(12) {
        let k = n - m;
        let a = ceil_div(m * (k + 1), n);
        let (bar, hat) = (bar_g(n, m).unwrap(), hat_g(n, m, a).unwrap());
        if (m * (k + 1)) % n != 0 && !brute(&hat) {
            bad.push(format!("hat({n},{m},{a}) not k-CB"));
        }
        if !is_subgraph(&bar, &hat).unwrap() {
            bad.push(format!("bar({n},{m}) not a subgraph of hat"));
        }
        if (m * (k + 1)) % n == 0 && bar != hat {
            bad.push(format!("bar({n},{m}) != hat for integer a"));
        }
    }
    collect(bad)
}

fn negative_families() -> Outcome {
    let mut bad = Vec::new();
    for (n, m) in orders(12) {
        let k = n - m;
        if n % (k + 1) == 0 && n / (k + 1) > 1 {
            let g = ddot_g(n, m, k + 1).unwrap();
            if g.component_count() != n / (k + 1) {
                bad.push(format!("ddot({n},{m}) has {} components", g.component_count()));
            }
            for r in [is_kcb_bruteforce(&g), is_kcb_hall(&g), is_kcb_fast(&g)] {
                let r = r.unwrap();
                if r.verdict {
                    bad.push(format!("ddot({n},{m}) passes {}", r.method));
                }
            }
        }
        for c in 2..=m {
            if let Ok(g) = tripledot_g(n, m, c) {
                if brute(&g) || is_kcb_fast(&g).unwrap().verdict {
                    bad.push(format!("tripledot({n},{m},{c}) passes"));
                }
            }
        }
        if (m * (k + 1)) % n == 0 {
            let passes = brute(&check_g(n, m).unwrap());
            if passes != (gcd(n, m) == m) {
                bad.push(format!("check({n},{m}) verdict {passes}, gcd {}", gcd(n, m)));
            }
        }
    }
    collect(bad)
}

fn full_corpus() -> Vec<(String, BipartiteGraph)> {
    let mut corpus = construction_corpus(12);
    corpus.extend(random_corpus(2024, 500, 10).into_iter().enumerate().map(|(t, g)| (format!("random#{t}"), g)));
    corpus
}

fn verifier_agreement(corpus: &[(String, BipartiteGraph)]) -> Outcome {
    let mut bad = Vec::new();
    for (name, g) in corpus {
        let verdicts = [brute(g), is_kcb_hall(g).unwrap().verdict, is_kcb_fast(g).unwrap().verdict];
        if verdicts.iter().any(|&v| v != verdicts[0]) {
            bad.push(format!("{name}: verdicts {verdicts:?}"));
        }
        let k = g.n() - g.m();
        if is_k_extendable(&g.build_tilde().unwrap(), k).unwrap() != verdicts[0] {
            bad.push(format!("{name}: tilde extendability disagrees"));
        }
    }
    collect(bad)
}

fn connectivity_bounds(corpus: &[(String, BipartiteGraph)]) -> Outcome {
    let mut bad = Vec::new();
    for (name, g) in corpus {
        if !(g.m() > 1 && g.m() < g.n()) || !is_kcb_fast(g).unwrap().verdict {
            continue;
        }
        let r = connectivity_report(g).unwrap();
        if !r.all_bounds_hold() {
            bad.push(format!("{name}: bounds {:?}", r.bounds));
        }
    }
    for (n, m) in orders(12) {
        let k = n - m;
        let r = connectivity_report(&bar_g(n, m).unwrap()).unwrap();
        let ok = (r.kappa_v == k || r.kappa_v == k + 1)
            && r.kappa_u == r.degrees.delta_u
            && r.kappa == r.degrees.delta()
            && (k != 1 || r.kappa_v == k);
        if !ok {
            bad.push(format!("bar({n},{m}): kappa {} kappa_U {} kappa_V {}", r.kappa, r.kappa_u, r.kappa_v));
        }
    }
    for (n, m) in [(6, 4), (7, 5), (8, 3)] {
        for target in 1..=m {
            let g = kappa_tuned(n, m, target).unwrap();
            let got = kappa(&g).unwrap();
            if got != target || !brute(&g) {
                bad.push(format!("kappa_tuned({n},{m},{target}): kappa {got}"));
            }
        }
    }
    collect(bad)
}

fn golden_fixtures() -> Outcome {
    let golden = [
        (include_str!("../fixtures/bar_6_5.edgelist"), bar_g(6, 5).unwrap()),
        (include_str!("../fixtures/hat_6_5_2.edgelist"), hat_g(6, 5, 2).unwrap()),
        (include_str!("../fixtures/dot_6_5_2.edgelist"), dot_g(6, 5, 2).unwrap()),
        (include_str!("../fixtures/ddot_6_5_2.edgelist"), ddot_g(6, 5, 2).unwrap()),
    ];
    let mut bad = Vec::new();
    for (text, g) in &golden {
        if to_edge_list(g) != *text {
            bad.push(format!("fixture mismatch:\n{text}"));
        }
    }
    let small = parse(include_str!("../fixtures/small_delta_7_4.edgelist"), Format::EdgeList).unwrap();
    if small != kcbg::fixtures::small_delta() {
        bad.push("small_delta fixture differs from the built-in graph".into());
    }
    let (minimum, stats) = is_minimum_kcb(&small).unwrap();
    if !minimum || stats.delta_u != 1 || stats.delta_u >= 16 / 7 {
        bad.push(format!("small_delta: minimum {minimum}, stats {stats:?}"));
    }
    collect(bad)
}

fn index_arithmetic() -> Outcome {
    let mut bad = Vec::new();
    for (n, m) in orders(60) {
        let mut counts = Vec::with_capacity(m);
        for j in 0..m {
            let sols: Vec<usize> = (0..n).filter(|&i| ceil_div(i * m, n) % m == j).collect();
            let count = count_solutions(n, m, j).unwrap();
            if count != sols.len() {
                bad.push(format!("count({n},{m},{j}) = {count}, enumerated {}", sols.len()));
            }
            let max = max_solution_index(n, m, j).unwrap();
            if max != cyclic_last(n, &sols) {
                bad.push(format!("max({n},{m},{j}) = {max}, enumerated {}", cyclic_last(n, &sols)));
            }
            counts.push(count);
        }
        let (hi, lo, r) = (ceil_div(n, m), n / m, n % m);
        let expected = if r == 0 { (m, m) } else { (r, m - r) };
        let got = (counts.iter().filter(|&&c| c == hi).count(), counts.iter().filter(|&&c| c == lo).count());
        if got != expected || counts.iter().any(|&c| c != hi && c != lo) {
            bad.push(format!("multiplicities({n},{m}) = {got:?}, expected {expected:?}"));
        }
    }
    collect(bad)
}

fn star_baseline() -> Outcome {
    let mut bad = Vec::new();
    for (n, m) in [(6, 5), (7, 4), (9, 5)] {
        let g = star_g(n, m).unwrap();
        let kcb = brute(&g);
        let minimal = kcb && minimality_of_star(&g).unwrap();
        let minimum = is_minimum_kcb(&g).unwrap().0;
        if !kcb || !minimal || minimum {
            bad.push(format!("star({n},{m}): k-CB {kcb}, edge-minimal {minimal}, minimum {minimum}"));
        }
    }
    collect(bad)
}

fn oracle_cross_checks() -> Outcome {
    let mut bad = Vec::new();
    let small: Vec<BipartiteGraph> =
        random_corpus(99, 120, 9).into_iter().filter(|g| g.n() + g.m() <= 12).collect();
    for g in &small {
        let n = g.n();
        let vertex = |x: usize| if x < n { Vertex::U(x) } else { Vertex::V(x - n) };
        for ((x, y), cut) in all_local_cuts(g) {
            let flow = local_connectivity(g, vertex(x), vertex(y)).unwrap();
            if flow != cut {
                bad.push(format!("local connectivity {x},{y}: flow {flow}, cut {cut}"));
            }
        }
        if max_matching(g).size() != min_vertex_cover(g) {
            bad.push(format!("matching vs cover on {:?}", g.edges()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let v = rng.gen_range(2..=10);
        let p = EDGE_PROBABILITIES[rng.gen_range(0..3)];
        let arcs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (0..v).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && rng.gen_bool(p))
            .collect();
        let d = Digraph::new(v, arcs.clone()).unwrap();
        let breaking = smallest_breaking_set(v, &arcs);
        for k in 1..v {
            if strongly_k_connected(&d, k).unwrap() != (breaking >= k) {
                bad.push(format!("strong {k}-connectivity on {v} vertices, arcs {arcs:?}"));
            }
        }
    }
    collect(bad)
}

#[test]
fn acceptance() {
    let corpus = full_corpus();
    let criteria: Vec<Criterion> = vec![
        ("bar graphs are k-CB with the optimal degree triple", Box::new(bar_positive)),
        ("hat graphs are k-CB and contain the bar graph", Box::new(hat_and_bar_relation)),
        ("ddot, tripledot and check behave as negative families", Box::new(negative_families)),
        ("three verifiers and tilde extendability agree", Box::new(|| verifier_agreement(&corpus))),
        ("connectivity bounds, bar connectivity, kappa_tuned", Box::new(|| connectivity_bounds(&corpus))),
        ("worked-example fixtures match golden files", Box::new(golden_fixtures)),
        ("index arithmetic matches enumeration", Box::new(index_arithmetic)),
        ("star baseline is k-CB, edge-minimal, not minimum", Box::new(star_baseline)),
        ("flow, strong connectivity and matching oracles agree", Box::new(oracle_cross_checks)),
    ];
    let mut failed = Vec::new();
    for (t, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", t + 1),
            Err(problems) => {
                println!("criterion {}: FAIL  {name} ({secs:.2}s)", t + 1);
                for p in problems.iter().take(10) {
                    println!("    {p}");
                }
                failed.push(t + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
