//! `kcbg`: build, verify, and tabulate k-critical-bipartite graphs.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails (the report
//! carries a witness), 2 on any error.

mod sweep;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kcbg::{
    check_connectivity_bounds, parse, serialize, verify, BipartiteGraph, ConstructionSpec, Family, Format, Method,
    VerifyOptions, VerifyReport,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "kcbg", version, about = "Constructions and verifiers for k-critical-bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the construction families.
    Construct(ConstructArgs),
    /// Decide whether a graph file is k-critical-bipartite.
    Verify(VerifyArgs),
    /// Report κ, κ_U, κ_V and the connectivity lower bounds of a k-CB graph.
    Connectivity(InputArgs),
    /// Tabulate families over ranges of (n, m) as CSV.
    Sweep(sweep::SweepArgs),
    /// Write the worked-example graphs as edge lists.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        output: PathBuf,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// hat, bar, check, dot, ddot, tripledot, star, kappa_tuned, complete
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    kappa: Option<usize>,
    /// edgelist, dot or json; defaults to the output extension, then edgelist.
    #[arg(long)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for standard input.
    file: PathBuf,
    /// Input format; defaults to the file extension, then edgelist.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodChoice {
    Bruteforce,
    Hall,
    Fast,
    All,
}

impl MethodChoice {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodChoice::Bruteforce => vec![Method::Bruteforce],
            MethodChoice::Hall => vec![Method::Hall],
            MethodChoice::Fast => vec![Method::Fast],
            MethodChoice::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "fast")]
    method: MethodChoice,
    /// Ignore subset budgets.
    #[arg(long)]
    force: bool,
}

#[derive(Serialize)]
struct TimedReport {
    #[serde(flatten)]
    report: VerifyReport,
    seconds: f64,
}

#[derive(Serialize)]
struct VerifyOutput {
    n: usize,
    m: usize,
    k: usize,
    verdict: bool,
    reports: Vec<TimedReport>,
}

fn read_graph(input: &InputArgs) -> anyhow::Result<BipartiteGraph> {
    let (text, guessed) = if input.file == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
        (text, Format::EdgeList)
    } else {
        let text = std::fs::read_to_string(&input.file)
            .with_context(|| format!("reading {}", input.file.display()))?;
        (text, Format::from_extension(&input.file))
    };
    let format = input.format.unwrap_or(guessed);
    parse(&text, format).with_context(|| format!("parsing {}", input.file.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct(args: ConstructArgs) -> anyhow::Result<ExitCode> {
    let spec = ConstructionSpec {
        family: args.family,
        n: args.n,
        m: args.m,
        a: args.a,
        b: args.b,
        c: args.c,
        kappa: args.kappa,
    };
    let g = spec.build()?;
    let format = args
        .format
        .or_else(|| args.output.as_deref().map(Format::from_extension))
        .unwrap_or(Format::EdgeList);
    write_output(args.output.as_deref(), &serialize(&g, format))?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let g = read_graph(&args.input)?;
    let Some(k) = g.k() else { bail!("graph has n = {} < m = {}", g.n(), g.m()) };
    let opts = VerifyOptions::from_env().forced(args.force);
    let mut reports = Vec::new();
    for method in args.method.methods() {
        let start = Instant::now();
        let report = verify(&g, method, &opts)?;
        reports.push(TimedReport { report, seconds: start.elapsed().as_secs_f64() });
    }
    let verdict = reports[0].report.verdict;
    if reports.iter().any(|r| r.report.verdict != verdict) {
        bail!("verifiers disagree: {}", serde_json::to_string(&reports)?);
    }
    let out = VerifyOutput { n: g.n(), m: g.m(), k, verdict, reports };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(if verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_connectivity(args: InputArgs) -> anyhow::Result<ExitCode> {
    let g = read_graph(&args)?;
    let report = check_connectivity_bounds(&g)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Verify(args) => run_verify(args),
        Command::Connectivity(args) => run_connectivity(args),
        Command::Sweep(args) => sweep::run(args),
        Command::Fixtures { output } => {
            for path in kcbg::fixtures::write_all(&output)
                .with_context(|| format!("writing fixtures to {}", output.display()))?
            {
                println!("{}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
