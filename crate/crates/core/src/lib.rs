//! Construction and verification of k-critical-bipartite graphs.
//!
//! A bipartite graph `G = (U, V; E)` with `k = |U| - |V| > 0` is
//! *k-critical-bipartite* when deleting any `k` vertices of U leaves a matching
//! that covers V. This crate builds the minimum-size families of such graphs,
//! several families that look similar but fail, and checks the property three
//! independent ways. It also computes the vertex-connectivity quantities that
//! k-criticality bounds from below.

pub mod bigraph;
pub mod connectivity;
pub mod constructions;
pub mod criticality;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod format;
pub mod matching;
pub mod numeric;

pub use bigraph::{is_subgraph, BipartiteGraph, Components, DegreeStats, Vertex};
pub use connectivity::{
    check_connectivity_bounds, connectivity_report, contract_matching, kappa, kappa_set, kappa_u, kappa_v,
    local_connectivity, strongly_k_connected, ConnectivityReport, Digraph,
};
pub use constructions::{
    bar_g, check_g, complete_g, ddot_g, dot_g, hat_g, kappa_tuned, star_g, tripledot_g, ConstructionSpec, Family,
};
pub use criticality::{
    is_k_extendable, is_kcb_bruteforce, is_kcb_fast, is_kcb_hall, is_minimum_kcb, minimality_of_star, verify,
    Method, VerifyOptions, VerifyReport, Witness,
};
pub use error::{Error, Result};
pub use format::{parse, serialize, Format};
pub use matching::{has_complete_matching, max_matching, Matching};
pub use numeric::{count_solutions, degree_profile, is_bigraphic, max_solution_index, DegreeProfile};
