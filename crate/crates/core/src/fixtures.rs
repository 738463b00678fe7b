//! The small worked-example graphs: `Ḡ₆,₅`, `Ĝ²₆,₅`, `Ġ²₆,₅`, `G̈²₆,₅`, and a
//! minimum 3-critical-bipartite graph of order (7, 4) whose smallest U-degree
//! is 1.

use crate::bigraph::BipartiteGraph;
use crate::constructions::{bar_g, ddot_g, dot_g, hat_g};
use crate::format::to_edge_list;

/// Neighborhoods of `v0..v3` in the order-(7, 4) example.
pub const SMALL_DELTA_NEIGHBORHOODS: [[usize; 4]; 4] =
    [[0, 1, 2, 4], [0, 1, 3, 5], [0, 2, 3, 5], [1, 2, 4, 6]];

pub fn small_delta() -> BipartiteGraph {
    let edges = SMALL_DELTA_NEIGHBORHOODS
        .iter()
        .enumerate()
        .flat_map(|(j, nb)| nb.iter().map(move |&i| (i, j)));
    BipartiteGraph::new(7, 4, edges).expect("fixture edges are valid")
}

/// `(file name, graph)` for every fixture, in a fixed order.
pub fn all() -> Vec<(&'static str, BipartiteGraph)> {
    vec![
        ("bar_6_5.edgelist", bar_g(6, 5).expect("valid order")),
        ("hat_6_5_2.edgelist", hat_g(6, 5, 2).expect("valid order")),
        ("dot_6_5_2.edgelist", dot_g(6, 5, 2).expect("valid profile")),
        ("ddot_6_5_2.edgelist", ddot_g(6, 5, 2).expect("valid profile")),
        ("small_delta_7_4.edgelist", small_delta()),
    ]
}

/// Writes every fixture as an edge list into `dir`, returning the paths.
pub fn write_all(dir: &std::path::Path) -> std::io::Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    all()
        .into_iter()
        .map(|(name, g)| {
            let path = dir.join(name);
            std::fs::write(&path, to_edge_list(&g))?;
            Ok(path)
        })
        .collect()
}
