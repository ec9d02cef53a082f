//! Existence solvers for list coloring and the problems that reduce to it.
//!
//! Every solver here bottoms out in [`exists_list_coloring`], a depth-first
//! search over vertices in ascending order trying each vertex's colors in
//! ascending order. The first solution found is therefore the
//! lexicographically smallest one, in either [`SolverMode`].

use std::collections::VecDeque;
use std::ops::AddAssign;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{
    interval_to_list, mu_to_list, precoloring_to_list, Color, Coloring, IntervalAssignment, ListAssignment,
    MuAssignment, Precoloring,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum SolverMode {
    /// Assign every vertex, then test properness at the leaf.
    PaperLiteral,
    /// Reject a color as soon as it clashes with an already colored neighbor.
    #[default]
    Pruned,
}

/// Search effort. `nodes` counts color assignments made, `leaves` counts
/// complete assignments reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub leaves: u64,
}

impl AddAssign for SolveStats {
    fn add_assign(&mut self, rhs: Self) {
        self.nodes += rhs.nodes;
        self.leaves += rhs.leaves;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub satisfiable: bool,
    pub witness: Option<Coloring>,
    pub stats: SolveStats,
}

impl SolveResult {
    fn unsatisfiable(stats: SolveStats) -> Self {
        SolveResult {
            satisfiable: false,
            witness: None,
            stats,
        }
    }
}

struct Search<'a> {
    graph: &'a Graph,
    lists: &'a [Vec<Color>],
    colors: Vec<Color>,
    stats: SolveStats,
}

impl Search<'_> {
    fn is_proper(&self) -> bool {
        let c = &self.colors;
        self.graph.edges().iter().all(|&(u, v)| c[u - 1] != c[v - 1])
            && c.iter().zip(self.lists).all(|(x, l)| l.binary_search(x).is_ok())
    }

    // `i` is the 0-based index of the vertex to color next.
    fn literal(&mut self, i: usize) -> bool {
        if i == self.colors.len() {
            self.stats.leaves += 1;
            return self.is_proper();
        }
        for &color in &self.lists[i] {
            self.stats.nodes += 1;
            self.colors[i] = color;
            if self.literal(i + 1) {
                return true;
            }
        }
        false
    }

    fn pruned(&mut self, i: usize) -> bool {
        if i == self.colors.len() {
            self.stats.leaves += 1;
            return true;
        }
        let v = i + 1;
        'colors: for &color in &self.lists[i] {
            for &u in self.graph.neighbors(v) {
                if u >= v {
                    break;
                }
                if self.colors[u - 1] == color {
                    continue 'colors;
                }
            }
            self.stats.nodes += 1;
            self.colors[i] = color;
            if self.pruned(i + 1) {
                return true;
            }
        }
        false
    }
}

/// Unchecked core: `lists[i]` must be the sorted list of vertex `i + 1`.
pub(crate) fn search_lists(graph: &Graph, lists: &[Vec<Color>], mode: SolverMode) -> SolveResult {
    debug_assert_eq!(graph.vertex_count(), lists.len());
    let mut s = Search {
        graph,
        lists,
        colors: vec![0; lists.len()],
        stats: SolveStats::default(),
    };
    let found = match mode {
        SolverMode::PaperLiteral => s.literal(0),
        SolverMode::Pruned => s.pruned(0),
    };
    if found {
        SolveResult {
            satisfiable: true,
            witness: Some(Coloring::new(s.colors).expect("list colors are positive")),
            stats: s.stats,
        }
    } else {
        SolveResult::unsatisfiable(s.stats)
    }
}

pub fn exists_list_coloring(g: &Graph, lists: &ListAssignment, mode: SolverMode) -> Result<SolveResult> {
    if lists.len() != g.vertex_count() {
        return Err(Error::DomainMismatch {
            expected: g.vertex_count(),
            got: lists.len(),
        });
    }
    Ok(search_lists(g, lists.lists(), mode))
}

/// Proper coloring with colors `1..=k`.
pub fn k_coloring(g: &Graph, k: usize) -> SolveResult {
    search_lists(
        g,
        ListAssignment::uniform(g.vertex_count(), k).lists(),
        SolverMode::Pruned,
    )
}

/// Smallest `k` admitting a proper `k`-coloring; 0 for the graph without vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    (1..).find(|&k| k_coloring(g, k).satisfiable).unwrap()
}

/// Two-coloring by breadth-first search, in linear time. Each component's
/// smallest vertex gets color 1. Returns `None` if `g` is not bipartite.
pub fn bipartition(g: &Graph) -> Option<Coloring> {
    let mut colors: Vec<Color> = vec![0; g.vertex_count()];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if colors[root - 1] != 0 {
            continue;
        }
        colors[root - 1] = 1;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let other = 3 - colors[v - 1];
            for &u in g.neighbors(v) {
                match colors[u - 1] {
                    0 => {
                        colors[u - 1] = other;
                        queue.push_back(u);
                    }
                    c if c != other => return None,
                    _ => {}
                }
            }
        }
    }
    Some(Coloring::new(colors).expect("colors are 1 or 2"))
}

pub fn gamma_mu_coloring(g: &Graph, intervals: &IntervalAssignment, mode: SolverMode) -> Result<SolveResult> {
    exists_list_coloring(g, &interval_to_list(intervals), mode)
}

pub fn mu_coloring(g: &Graph, mu: &MuAssignment, mode: SolverMode) -> Result<SolveResult> {
    exists_list_coloring(g, &mu_to_list(mu), mode)
}

/// Extends the precoloring to a proper coloring of all of `g` with colors
/// `1..=k`. The witness agrees with the precoloring on its vertices.
pub fn precoloring_extension(g: &Graph, pre: &Precoloring, mode: SolverMode) -> Result<SolveResult> {
    let residual = precoloring_to_list(g, pre)?;
    let result = exists_list_coloring(&residual.graph, &residual.lists, mode)?;
    let Some(partial) = result.witness else {
        return Ok(result);
    };
    let mut colors = vec![0; g.vertex_count()];
    for (&v, &c) in pre.fixed() {
        colors[v - 1] = c;
    }
    for (&v, &c) in residual.original.iter().zip(partial.as_slice()) {
        colors[v - 1] = c;
    }
    Ok(SolveResult {
        satisfiable: true,
        witness: Some(Coloring::new(colors)?),
        stats: result.stats,
    })
}
