//! The `sweep` subcommand: one CSV row per (n, m, family).

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::Args;
use kcbg::constructions::minimum_max_degree_u;
use kcbg::{connectivity_report, tripledot_g, verify, ConstructionSpec, Error, Family, Method, VerifyOptions};
use rayon::prelude::*;

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 2)]
    m_min: usize,
    /// Defaults to n - 1 for each n.
    #[arg(long)]
    m_max: Option<usize>,
    /// Comma-separated families, in the column order they should appear.
    #[arg(long, value_delimiter = ',', default_value = "bar")]
    family: Vec<Family>,
    /// Fixed `a` for hat; default ⌈m(k+1)/n⌉.
    #[arg(long)]
    a: Option<usize>,
    /// Fixed `b` for dot and ddot; default k+1.
    #[arg(long)]
    b: Option<usize>,
    /// Fixed `c` for tripledot; default the smallest valid c.
    #[arg(long)]
    c: Option<usize>,
    /// Fixed κ for kappa_tuned; default 1.
    #[arg(long)]
    kappa: Option<usize>,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; all cores when omitted.
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest n for which the brute-force column is filled.
    #[arg(long, default_value_t = 14)]
    bruteforce_max_n: usize,
    /// Append per-method wall-clock columns (makes the output run-dependent).
    #[arg(long)]
    timings: bool,
    /// Ignore subset budgets.
    #[arg(long)]
    force: bool,
}

const HEADER: [&str; 16] = [
    "n",
    "m",
    "k",
    "family",
    "params",
    "edge_count",
    "Delta_U",
    "delta_U",
    "Delta_V",
    "kcb_bruteforce",
    "kcb_hall",
    "kcb_fast",
    "kappa",
    "kappa_U",
    "kappa_V",
    "error",
];
const TIMING_HEADER: [&str; 3] = ["seconds_bruteforce", "seconds_hall", "seconds_fast"];

struct Row {
    cells: Vec<String>,
    seconds: [Option<f64>; 3],
}

fn spec_for(args: &SweepArgs, family: Family, n: usize, m: usize) -> (ConstructionSpec, String) {
    let mut spec = ConstructionSpec::new(family, n, m);
    let param = match family {
        Family::Hat => {
            spec.a = args.a.or_else(|| (n > m).then(|| minimum_max_degree_u(n, m)));
            spec.a.map(|a| format!("a={a}")).unwrap_or_default()
        }
        Family::Dot | Family::Ddot => {
            spec.b = args.b.or(n.checked_sub(m).map(|k| k + 1));
            spec.b.map(|b| format!("b={b}")).unwrap_or_default()
        }
        Family::Tripledot => {
            spec.c = args.c.or_else(|| (2..=m).find(|&c| tripledot_g(n, m, c).is_ok()));
            spec.c.map(|c| format!("c={c}")).unwrap_or_default()
        }
        Family::KappaTuned => {
            spec.kappa = Some(args.kappa.unwrap_or(1));
            format!("kappa={}", args.kappa.unwrap_or(1))
        }
        _ => String::new(),
    };
    (spec, param)
}

fn compute(args: &SweepArgs, opts: &VerifyOptions, family: Family, n: usize, m: usize) -> Row {
    let (spec, params) = spec_for(args, family, n, m);
    let mut cells = vec![n.to_string(), m.to_string(), (n - m).to_string(), family.to_string(), params];
    let mut seconds = [None; 3];
    let built = match (family, spec.c) {
        (Family::Tripledot, None) => Err("no c in 2..=m gives a valid tripledot".to_string()),
        _ => spec.build().map_err(|e| e.to_string()),
    };
    let g = match built {
        Ok(g) => g,
        Err(e) => {
            cells.resize(HEADER.len() - 1, String::new());
            cells.push(e);
            return Row { cells, seconds };
        }
    };
    let s = g.degree_stats();
    cells.extend([s.edge_count, s.max_delta_u, s.delta_u, s.max_delta_v].map(|v| v.to_string()));

    let mut errors = Vec::new();
    let mut verdicts = Vec::new();
    for (t, method) in Method::ALL.into_iter().enumerate() {
        if method == Method::Bruteforce && n > args.bruteforce_max_n && !args.force {
            cells.push(String::new());
            continue;
        }
        let start = Instant::now();
        match verify(&g, method, opts) {
            Ok(r) => {
                seconds[t] = Some(start.elapsed().as_secs_f64());
                verdicts.push(r.verdict);
                cells.push(r.verdict.to_string());
            }
            Err(Error::BudgetExceeded { .. }) => cells.push(String::new()),
            Err(e) => {
                errors.push(format!("{method}: {e}"));
                cells.push(String::new());
            }
        }
    }
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        errors.push("verifiers disagree".to_string());
    }
    match connectivity_report(&g) {
        Ok(r) => cells.extend([r.kappa, r.kappa_u, r.kappa_v].map(|v| v.to_string())),
        Err(e) => {
            cells.extend([String::new(), String::new(), String::new()]);
            errors.push(format!("connectivity: {e}"));
        }
    }
    cells.push(errors.join("; "));
    Row { cells, seconds }
}

pub fn run(args: SweepArgs) -> anyhow::Result<ExitCode> {
    let mut jobs = Vec::new();
    for n in args.n_min..=args.n_max {
        let m_max = args.m_max.unwrap_or(n.saturating_sub(1)).min(n.saturating_sub(1));
        for m in args.m_min.max(1)..=m_max {
            jobs.extend(args.family.iter().map(|&f| (n, m, f)));
        }
    }
    let opts = VerifyOptions::from_env().forced(args.force);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .context("starting worker pool")?;
    let rows: Vec<Row> =
        pool.install(|| jobs.par_iter().map(|&(n, m, f)| compute(&args, &opts, f, n, m)).collect());

    let mut out = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = HEADER.to_vec();
    if args.timings {
        header.extend(TIMING_HEADER);
    }
    out.write_record(&header)?;
    for row in rows {
        let mut cells = row.cells;
        if args.timings {
            cells.extend(row.seconds.iter().map(|s| s.map(|s| format!("{s:.6}")).unwrap_or_default()));
        }
        out.write_record(&cells)?;
    }
    let bytes = out.into_inner().context("flushing CSV")?;
    match &args.output {
        Some(p) => std::fs::write(p, bytes).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{}", String::from_utf8(bytes)?),
    }
    Ok(ExitCode::SUCCESS)
}
