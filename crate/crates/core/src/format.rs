//! Text formats for bipartite graphs: edge list, Graphviz DOT, and JSON.
//!
//! Edge list (byte-exact): a header line `n m`, then one `i j` line per edge in
//! canonical order, each terminated by `\n`. On input, `#` starts a comment that
//! runs to the end of the line and blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    EdgeList,
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "el" => Ok(Format::EdgeList),
            "dot" | "gv" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

impl Format {
    /// Guesses a format from a file extension, defaulting to the edge list.
    pub fn from_extension(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dot") | Some("gv") => Format::Dot,
            Some("json") => Format::Json,
            _ => Format::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Drop duplicate edges instead of rejecting them.
    pub lenient: bool,
}

pub fn serialize(g: &BipartiteGraph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Dot => to_dot(g),
        Format::Json => to_json(g),
    }
}

pub fn parse(text: &str, format: Format) -> Result<BipartiteGraph> {
    parse_with(text, format, ParseOptions::default())
}

pub fn parse_with(text: &str, format: Format, opts: ParseOptions) -> Result<BipartiteGraph> {
    match format {
        Format::EdgeList => parse_edge_list(text, opts),
        Format::Dot => parse_dot(text, opts),
        Format::Json => parse_json(text, opts),
    }
}

pub fn to_edge_list(g: &BipartiteGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = parts.next().ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("{what} {tok:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if parts.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

fn assemble(
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    lines: &[usize],
    opts: ParseOptions,
) -> Result<BipartiteGraph> {
    let built = if opts.lenient {
        BipartiteGraph::new_lenient(n, m, edges.iter().copied())
    } else {
        BipartiteGraph::new(n, m, edges.iter().copied())
    };
    built.map_err(|e| {
        // Point at the first line carrying the offending edge.
        let offending = match e {
            Error::IndexOutOfRange { i, j, .. } | Error::DuplicateEdge { i, j } => {
                let hits: Vec<usize> =
                    edges.iter().zip(lines).filter(|(&e, _)| e == (i, j)).map(|(_, &l)| l).collect();
                match e {
                    Error::DuplicateEdge { .. } => hits.get(1).copied(),
                    _ => hits.first().copied(),
                }
            }
            _ => None,
        };
        parse_err(offending.unwrap_or(0), e.to_string())
    })
}

fn parse_edge_list(text: &str, opts: ParseOptions) -> Result<BipartiteGraph> {
    let mut header = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let pair = parse_pair(line_no, line)?;
        if header.is_none() {
            header = Some(pair);
        } else {
            edges.push(pair);
            lines.push(line_no);
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    assemble(n, m, edges, &lines, opts)
}

pub fn to_dot(g: &BipartiteGraph) -> String {
    let mut out = String::from("graph kcbg {\n  rankdir=LR;\n");
    let rank = |prefix: char, count: usize| {
        let names: Vec<String> = (0..count).map(|x| format!("{prefix}{x};")).collect();
        format!("  {{ rank=same; {} }}\n", names.join(" "))
    };
    out.push_str(&rank('u', g.n()));
    out.push_str(&rank('v', g.m()));
    for &(i, j) in g.edges() {
        let _ = writeln!(out, "  u{i} -- v{j};");
    }
    out.push_str("}\n");
    out
}

enum Node {
    U(usize),
    V(usize),
}

fn parse_node(line_no: usize, tok: &str) -> Result<Node> {
    let tok = tok.trim().trim_end_matches(';').trim().trim_matches('"');
    let (head, rest) = tok.split_at(tok.len().min(1));
    let idx = rest
        .parse::<usize>()
        .map_err(|_| parse_err(line_no, format!("bad node name {tok:?}")))?;
    match head {
        "u" => Ok(Node::U(idx)),
        "v" => Ok(Node::V(idx)),
        _ => Err(parse_err(line_no, format!("node {tok:?} must be named u<i> or v<j>"))),
    }
}

/// Reads the DOT dialect written by [`to_dot`]: nodes `u<i>`/`v<j>` declared in
/// `rank=same` groups, and one `a -- b;` statement per edge.
fn parse_dot(text: &str, opts: ParseOptions) -> Result<BipartiteGraph> {
    let mut n = 0;
    let mut m = 0;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    let mut opened = false;
    let mut closed = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split("//").next().unwrap_or("").trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !opened {
            if line.starts_with("graph") && line.ends_with('{') {
                opened = true;
                continue;
            }
            return Err(parse_err(line_no, "expected `graph <name> {`"));
        }
        if closed {
            return Err(parse_err(line_no, "content after closing brace"));
        }
        if line == "}" {
            closed = true;
        } else if line.starts_with('{') {
            let body = line.trim_start_matches('{').trim_end_matches('}');
            for stmt in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                if stmt.starts_with("rank") {
                    continue;
                }
                match parse_node(line_no, stmt)? {
                    Node::U(i) => n = n.max(i + 1),
                    Node::V(j) => m = m.max(j + 1),
                }
            }
        } else if let Some((a, b)) = line.split_once("--") {
            let (i, j) = match (parse_node(line_no, a)?, parse_node(line_no, b)?) {
                (Node::U(i), Node::V(j)) | (Node::V(j), Node::U(i)) => (i, j),
                _ => return Err(parse_err(line_no, "edge must join a u-node and a v-node")),
            };
            n = n.max(i + 1);
            m = m.max(j + 1);
            edges.push((i, j));
            lines.push(line_no);
        } else if line.contains('=') {
            // graph attribute such as rankdir
        } else {
            return Err(parse_err(line_no, format!("unrecognized statement {line:?}")));
        }
    }
    if !closed {
        return Err(parse_err(text.lines().count(), "missing closing brace"));
    }
    assemble(n, m, edges, &lines, opts)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    m: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<String, String>>,
}

pub fn to_json(g: &BipartiteGraph) -> String {
    let doc = GraphJson {
        n: g.n(),
        m: g.m(),
        edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
        labels: g.labels().cloned(),
    };
    let mut s = serde_json::to_string(&doc).expect("graph JSON is always serializable");
    s.push('\n');
    s
}

fn parse_json(text: &str, opts: ParseOptions) -> Result<BipartiteGraph> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[i, j]| (i, j)).collect();
    let g = assemble(doc.n, doc.m, edges, &[], opts)?;
    Ok(match doc.labels {
        Some(labels) => g.with_labels(labels),
        None => g,
    })
}
