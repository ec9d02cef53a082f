use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Edgeless,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Edgeless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Edgeless => "edgeless",
        }
    }

    /// Number of size parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or(Error::UnknownFamily(s))
    }
}

/// Builds a member of a standard family.
///
/// Path and cycle vertices are numbered along the path; `complete_bipartite(a, b)`
/// puts part A on `1..=a` and part B on `a+1..=a+b`; `star(k)` is `K_{1,k}`
/// with center 1.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(Error::InvalidParameter(format!(
            "{family} takes {} size parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    if let Some(&p) = params.iter().find(|&&p| p == 0) {
        return Err(Error::InvalidParameter(format!(
            "{family} size must be positive, got {p}"
        )));
    }
    let n = params[0];
    let edges: Vec<(Vertex, Vertex)> = match family {
        Family::Path => (1..n).map(|v| (v, v + 1)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "a simple cycle needs at least 3 vertices, got {n}"
                )));
            }
            (1..n).map(|v| (v, v + 1)).chain([(1, n)]).collect()
        }
        Family::Complete => (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect(),
        Family::CompleteBipartite => {
            let b = params[1];
            return Graph::from_edge_list(
                n + b,
                &(1..=n)
                    .flat_map(|u| (n + 1..=n + b).map(move |v| (u, v)))
                    .collect::<Vec<_>>(),
            );
        }
        Family::Star => return Graph::from_edge_list(n + 1, &(2..=n + 1).map(|v| (1, v)).collect::<Vec<_>>()),
        Family::Edgeless => Vec::new(),
    };
    Graph::from_edge_list(n, &edges)
}

/// Every labeled simple graph on `n` vertices, in order of the edge bitmask
/// over pairs `(1,2), (1,3), …, (n-1,n)`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many vertex pairs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).expect("distinct pairs")
    })
}

/// Erdős–Rényi `G(n, p)` drawn from a seeded generator.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p.clamp(0.0, 1.0)))
        .collect();
    Graph::from_edge_list(n, &edges).expect("distinct pairs")
}

/// Random bipartite graph: each vertex joins side A or B uniformly, then each
/// cross pair becomes an edge with probability `p`.
pub fn random_bipartite(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if side[u - 1] != side[v - 1] && rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("distinct pairs")
}
