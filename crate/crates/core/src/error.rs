use thiserror::Error;

/// Errors raised by graph construction, parsing, and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({i}, {j}) out of range for order ({n}, {m})")]
    IndexOutOfRange { i: usize, j: usize, n: usize, m: usize },

    #[error("duplicate edge ({i}, {j})")]
    DuplicateEdge { i: usize, j: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has n = {n} <= m = {m}; need |U| > |V|")]
    NotSurplus { n: usize, m: usize },

    #[error("graphs have different orders ({0}, {1}) and ({2}, {3})")]
    OrderMismatch(usize, usize, usize, usize),

    #[error("invalid order (n = {n}, m = {m}): {reason}")]
    InvalidOrder { n: usize, m: usize, reason: &'static str },

    #[error("invalid a = {a}: need 1 <= a <= m = {m}")]
    InvalidA { a: usize, m: usize },

    #[error("a = {num}/{den} not integer")]
    NotIntegerA { num: usize, den: usize },

    #[error("invalid profile arguments (x = {x}, y = {y}, b = {b}): {reason}")]
    InvalidProfileArgs { x: usize, y: usize, b: usize, reason: &'static str },

    #[error("invalid c = {c} for order ({n}, {m}): {reason}")]
    InvalidC { c: usize, n: usize, m: usize, reason: &'static str },

    #[error("invalid kappa = {kappa}: need 1 <= kappa <= m = {m}")]
    InvalidKappa { kappa: usize, m: usize },

    #[error("sequence {0} is not sorted non-increasing")]
    NotSorted(&'static str),

    #[error("{what} needs {required} subproblems, budget is {budget} (use --force to override)")]
    BudgetExceeded { what: &'static str, required: u128, budget: u64 },

    #[error("color classes differ in size ({n} vs {m})")]
    UnequalClasses { n: usize, m: usize },

    #[error("graph is not k-critical-bipartite")]
    NotKcb,

    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(String, String),

    #[error("pair uses the same vertex {0} twice")]
    SameVertex(String),

    #[error("set contains adjacent vertices {0} and {1}")]
    AdjacentPairInS(String, String),

    #[error("vertex set needs at least two vertices")]
    SetTooSmall,

    #[error("vertex {0} out of range")]
    VertexOutOfRange(String),

    #[error("connectivity undefined: graph has no nonadjacent pair")]
    Degenerate,

    #[error("matching is not a perfect matching of the graph: {0}")]
    NotPerfectMatching(&'static str),

    #[error("digraph has {vertices} vertices, strong {k}-connectivity needs more than {k}")]
    TooFewVertices { vertices: usize, k: usize },

    #[error("arc ({0}, {1}) out of range or a self-loop")]
    InvalidArc(usize, usize),

    #[error("family {family} needs parameter --{name}")]
    MissingParameter { family: &'static str, name: &'static str },

    #[error("internal inconsistency: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
