use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::model::{find_conflict, Color, Coloring, IntervalAssignment, ListAssignment};
use crate::solve::{gamma_mu_coloring, SolveResult, SolveStats, SolverMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiResult {
    /// Input vertices keep ids `1..=n`; pendants follow in order of
    /// (parent, blocked color).
    pub graph: Graph,
    /// `None` only when the input has vertices but every list is empty, so
    /// there is no largest color to bound the original vertices with. Such
    /// an instance is unsatisfiable.
    pub interval: Option<IntervalAssignment>,
    /// `(parent, blocked color) -> pendant`.
    pub pendant_map: BTreeMap<(Vertex, Color), Vertex>,
    pub c_max: Color,
    pub original_vertices: usize,
}

impl PsiResult {
    pub fn is_degenerate(&self) -> bool {
        self.interval.is_none()
    }

    pub fn pendants_of(&self, v: Vertex) -> impl Iterator<Item = (Color, Vertex)> + '_ {
        self.pendant_map
            .range((v, 0)..=(v, Color::MAX))
            .map(|(&(_, c), &w)| (c, w))
    }

    /// Solves the interval instance; a degenerate result is unsatisfiable.
    pub fn solve(&self, mode: SolverMode) -> SolveResult {
        match &self.interval {
            Some(i) => gamma_mu_coloring(&self.graph, i, mode).expect("interval built for this graph"),
            None => SolveResult {
                satisfiable: false,
                witness: None,
                stats: SolveStats::default(),
            },
        }
    }
}

/// Every original vertex gets `[1, c_max]`, where `c_max` is the largest
/// color in any list, and each color of `1..=c_max` missing from `L(v)` is
/// blocked by a pendant pinned to `[i, i]`. Linear in the size of `(G, L)`
/// plus `n * c_max`.
pub fn psi_transform(g: &Graph, lists: &ListAssignment) -> Result<PsiResult> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(Error::DomainMismatch {
            expected: n,
            got: lists.len(),
        });
    }
    let c_max = lists.max_color();
    if c_max == 0 && n > 0 {
        return Ok(PsiResult {
            graph: g.clone(),
            interval: None,
            pendant_map: BTreeMap::new(),
            c_max,
            original_vertices: n,
        });
    }

    let mut edges = g.edges().to_vec();
    let mut gamma = vec![1; n];
    let mut mu = vec![c_max; n];
    let mut pendant_map = BTreeMap::new();
    for v in g.vertices() {
        let list = lists.list(v);
        for color in 1..=c_max {
            if list.binary_search(&color).is_err() {
                let w = n + pendant_map.len() + 1;
                edges.push((v, w));
                gamma.push(color);
                mu.push(color);
                pendant_map.insert((v, color), w);
            }
        }
    }
    let graph = Graph::from_edge_list(n + pendant_map.len(), &edges)?;
    Ok(PsiResult {
        graph,
        interval: Some(IntervalAssignment::new(gamma, mu)?),
        pendant_map,
        c_max,
        original_vertices: n,
    })
}

/// Restricts a coloring of the transformed graph to the original vertices.
/// The input must be proper and within the intervals.
pub fn restrict_witness(r: &PsiResult, c: &Coloring) -> Result<Coloring> {
    let intervals = r.interval.as_ref().ok_or(Error::DegenerateReduction)?;
    if let Some((u, v)) = find_conflict(&r.graph, c)? {
        return Err(Error::ImproperColoring(u, v));
    }
    for v in r.graph.vertices() {
        if !intervals.contains(v, c.color(v)) {
            return Err(Error::ColorNotAllowed {
                vertex: v,
                color: c.color(v),
            });
        }
    }
    Coloring::new(c.as_slice()[..r.original_vertices].to_vec())
}
