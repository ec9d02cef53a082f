//! Simple undirected graphs on vertices `1..=n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted, and
//! every solver in this crate iterates them in that order, so witnesses are
//! reproducible.

mod dimacs;
mod generate;

pub use dimacs::{parse_graph, serialize_graph};
pub use generate::{generate, labeled_graphs, random_bipartite, random_gnp, Family};

use crate::error::{Error, Result};

/// Vertex id, 1-based.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and endpoints outside `1..=n`.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            adj[a - 1].push(b);
            adj[b - 1].push(a);
            normalized.push((a, b));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + Clone {
        1..=self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbors of `v`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Returns a copy with one new vertex `n + 1` adjacent only to `v`.
    pub fn add_pendant(&self, v: Vertex) -> Result<(Graph, Vertex)> {
        self.check_vertex(v)?;
        let w = self.n + 1;
        let mut g = self.clone();
        g.n = w;
        g.adj[v - 1].push(w);
        g.adj.push(vec![v]);
        g.edges.push((v, w));
        g.edges.sort_unstable();
        Ok((g, w))
    }

    /// Subgraph induced by `keep` (ascending, distinct), relabeled to
    /// `1..=keep.len()` in the order given.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i + 1;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (index[u], index[v]);
                (a != 0 && b != 0).then_some(if a < b { (a, b) } else { (b, a) })
            })
            .collect();
        Graph::from_edge_list(keep.len(), &edges).expect("induced subgraph of a simple graph")
    }
}
