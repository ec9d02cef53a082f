//! Colorings, the assignment kinds they are checked against, and the
//! conversions between assignment kinds.
//!
//! All per-vertex data is stored densely: entry `i` belongs to vertex `i + 1`.

mod doc;

use std::collections::BTreeMap;

pub use doc::{parse_assignment, serialize_assignment, Assignment};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Colors are unbounded positive integers.
pub type Color = u64;

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DomainMismatch { expected, got })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::ZeroColor);
        }
        Ok(Coloring(colors))
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.0
    }
}

/// Arbitrary finite color set per vertex. Lists are stored sorted and
/// deduplicated; an empty list is allowed and makes its vertex uncolorable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<Color>>) -> Result<Self> {
        for list in &mut lists {
            if list.contains(&0) {
                return Err(Error::ZeroColor);
            }
            list.sort_unstable();
            list.dedup();
        }
        Ok(ListAssignment { lists })
    }

    /// Every one of `n` vertices gets `{1, …, k}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: vec![(1..=k as Color).collect(); n],
        }
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v - 1]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// Largest color in any list, 0 if every list is empty.
    pub fn max_color(&self) -> Color {
        self.lists.iter().filter_map(|l| l.last().copied()).max().unwrap_or(0)
    }
}

/// Per-vertex bounds `gamma(v) <= color <= mu(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalAssignment {
    gamma: Vec<Color>,
    mu: Vec<Color>,
}

impl IntervalAssignment {
    pub fn new(gamma: Vec<Color>, mu: Vec<Color>) -> Result<Self> {
        check_len(gamma.len(), mu.len())?;
        if gamma.contains(&0) || mu.contains(&0) {
            return Err(Error::ZeroColor);
        }
        for (i, (&g, &m)) in gamma.iter().zip(&mu).enumerate() {
            if g > m {
                return Err(Error::EmptyInterval {
                    vertex: i + 1,
                    gamma: g,
                    mu: m,
                });
            }
        }
        Ok(IntervalAssignment { gamma, mu })
    }

    pub fn gamma(&self, v: Vertex) -> Color {
        self.gamma[v - 1]
    }

    pub fn mu(&self, v: Vertex) -> Color {
        self.mu[v - 1]
    }

    pub fn bounds(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        self.gamma.iter().copied().zip(self.mu.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn contains(&self, v: Vertex, color: Color) -> bool {
        self.gamma(v) <= color && color <= self.mu(v)
    }

    /// Length `mu - gamma + 1` of the interval at `v`.
    pub fn width(&self, v: Vertex) -> u64 {
        self.mu(v) - self.gamma(v) + 1
    }
}

/// An [`IntervalAssignment`] whose intervals all have exactly `k` colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KIntervalAssignment {
    intervals: IntervalAssignment,
    k: usize,
}

impl KIntervalAssignment {
    pub fn new(intervals: IntervalAssignment, k: usize) -> Result<Self> {
        for v in 1..=intervals.len() {
            let len = intervals.width(v);
            if len != k as u64 {
                return Err(Error::IntervalLength { vertex: v, len, k });
            }
        }
        Ok(KIntervalAssignment { intervals, k })
    }

    /// Intervals `[s, s + k - 1]` for the given start positions.
    pub fn from_starts(starts: &[Color], k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidIntervalLength { k, n: starts.len() });
        }
        let mu = starts.iter().map(|&s| s + k as Color - 1).collect();
        Ok(KIntervalAssignment {
            intervals: IntervalAssignment::new(starts.to_vec(), mu)?,
            k,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn starts(&self) -> &[Color] {
        &self.intervals.gamma
    }

    pub fn intervals(&self) -> &IntervalAssignment {
        &self.intervals
    }

    pub fn into_intervals(self) -> IntervalAssignment {
        self.intervals
    }
}

/// Per-vertex upper bound; the admissible colors at `v` are `1..=mu(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuAssignment {
    mu: Vec<Color>,
}

impl MuAssignment {
    pub fn new(mu: Vec<Color>) -> Result<Self> {
        if mu.contains(&0) {
            return Err(Error::ZeroColor);
        }
        Ok(MuAssignment { mu })
    }

    pub fn mu(&self, v: Vertex) -> Color {
        self.mu[v - 1]
    }

    pub fn values(&self) -> &[Color] {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }
}

/// A partial coloring on a vertex subset `W` together with a color budget `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Precoloring {
    fixed: BTreeMap<Vertex, Color>,
    k: usize,
}

impl Precoloring {
    pub fn new(fixed: BTreeMap<Vertex, Color>, k: usize) -> Result<Self> {
        for (&vertex, &color) in &fixed {
            if color == 0 || color > k as Color {
                return Err(Error::PrecolorOutOfPalette { vertex, color, k });
            }
        }
        Ok(Precoloring { fixed, k })
    }

    pub fn empty(k: usize) -> Self {
        Precoloring {
            fixed: BTreeMap::new(),
            k,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn fixed(&self) -> &BTreeMap<Vertex, Color> {
        &self.fixed
    }

    /// Checks that every fixed vertex exists in `g` and that the partial
    /// coloring is proper on `G[W]`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &v in self.fixed.keys() {
            g.check_vertex(v)?;
        }
        for &(u, v) in g.edges() {
            if let (Some(a), Some(b)) = (self.fixed.get(&u), self.fixed.get(&v)) {
                if a == b {
                    return Err(Error::ImproperPrecoloring(u, v));
                }
            }
        }
        Ok(())
    }
}

/// First edge whose endpoints share a color, if any.
pub fn find_conflict(g: &Graph, c: &Coloring) -> Result<Option<(Vertex, Vertex)>> {
    check_len(g.vertex_count(), c.len())?;
    Ok(g.edges().iter().copied().find(|&(u, v)| c.color(u) == c.color(v)))
}

pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(find_conflict(g, c)?.is_none())
}

pub fn respects_lists(c: &Coloring, lists: &ListAssignment) -> Result<bool> {
    check_len(lists.len(), c.len())?;
    Ok(c.as_slice()
        .iter()
        .zip(lists.lists())
        .all(|(color, list)| list.binary_search(color).is_ok()))
}

pub fn interval_to_list(intervals: &IntervalAssignment) -> ListAssignment {
    ListAssignment {
        lists: intervals.bounds().map(|(g, m)| (g..=m).collect()).collect(),
    }
}

pub fn mu_to_list(mu: &MuAssignment) -> ListAssignment {
    ListAssignment {
        lists: mu.values().iter().map(|&m| (1..=m).collect()).collect(),
    }
}

/// List instance left after deleting the precolored vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualInstance {
    pub graph: Graph,
    pub lists: ListAssignment,
    /// `original[i]` is the vertex of the input graph that became `i + 1`.
    pub original: Vec<Vertex>,
}

/// Removes the precolored vertices and gives each remaining vertex the
/// colors of `1..=k` not used by its precolored neighbors.
pub fn precoloring_to_list(g: &Graph, pre: &Precoloring) -> Result<ResidualInstance> {
    pre.validate(g)?;
    let original: Vec<Vertex> = g.vertices().filter(|v| !pre.fixed.contains_key(v)).collect();
    let lists = original
        .iter()
        .map(|&v| {
            (1..=pre.k as Color)
                .filter(|&c| !g.neighbors(v).iter().any(|u| pre.fixed.get(u) == Some(&c)))
                .collect()
        })
        .collect();
    Ok(ResidualInstance {
        graph: g.induced(&original),
        lists: ListAssignment { lists },
        original,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn c4() -> Graph {
        generate(Family::Cycle, &[4]).unwrap()
    }

    #[test]
    fn proper_coloring_checks() {
        let c = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        assert!(is_proper_coloring(&c4(), &c).unwrap());
        let k3 = generate(Family::Complete, &[3]).unwrap();
        assert!(!is_proper_coloring(&k3, &Coloring::new(vec![1, 1, 2]).unwrap()).unwrap());
        let e5 = Graph::edgeless(5);
        assert!(is_proper_coloring(&e5, &Coloring::new(vec![1; 5]).unwrap()).unwrap());
        assert_eq!(
            is_proper_coloring(&k3, &c),
            Err(Error::DomainMismatch { expected: 3, got: 4 })
        );
        assert_eq!(Coloring::new(vec![0]), Err(Error::ZeroColor));
    }

    #[test]
    fn list_checks() {
        let lists = ListAssignment::new(vec![vec![10, 11], vec![20, 21], vec![30, 31], vec![40, 41]]).unwrap();
        let c = Coloring::new(vec![11, 20, 31, 40]).unwrap();
        assert!(respects_lists(&c, &lists).unwrap());

        let one = ListAssignment::new(vec![vec![1, 2]]).unwrap();
        assert!(!respects_lists(&Coloring::new(vec![3]).unwrap(), &one).unwrap());

        let empty = ListAssignment::new(vec![vec![1], vec![]]).unwrap();
        for x in 1..5 {
            assert!(!respects_lists(&Coloring::new(vec![1, x]).unwrap(), &empty).unwrap());
        }
        assert!(respects_lists(&c, &one).is_err());
    }

    #[test]
    fn lists_normalize() {
        let l = ListAssignment::new(vec![vec![3, 1, 3, 2]]).unwrap();
        assert_eq!(l.list(1), &[1, 2, 3]);
        assert_eq!(l.max_color(), 3);
        assert_eq!(ListAssignment::new(vec![vec![], vec![]]).unwrap().max_color(), 0);
        assert_eq!(ListAssignment::new(vec![vec![0]]), Err(Error::ZeroColor));
    }

    #[test]
    fn intervals_expand() {
        let i = IntervalAssignment::new(vec![4, 7, 10], vec![6, 7, 11]).unwrap();
        let l = interval_to_list(&i);
        assert_eq!(l.list(1), &[4, 5, 6]);
        assert_eq!(l.list(2), &[7]);
        assert_eq!(l.list(3), &[10, 11]);
        assert_eq!(
            IntervalAssignment::new(vec![3], vec![2]),
            Err(Error::EmptyInterval {
                vertex: 1,
                gamma: 3,
                mu: 2
            })
        );
    }

    #[test]
    fn k_intervals() {
        let k = KIntervalAssignment::from_starts(&[10, 20], 2).unwrap();
        assert_eq!(k.intervals().mu(2), 21);
        let bad = IntervalAssignment::new(vec![1, 1], vec![2, 3]).unwrap();
        assert_eq!(
            KIntervalAssignment::new(bad, 2),
            Err(Error::IntervalLength {
                vertex: 2,
                len: 3,
                k: 2
            })
        );
    }

    #[test]
    fn mu_expands() {
        let m = MuAssignment::new(vec![3, 1]).unwrap();
        let l = mu_to_list(&m);
        assert_eq!(l.list(1), &[1, 2, 3]);
        assert_eq!(l.list(2), &[1]);
        let as_interval = IntervalAssignment::new(vec![1, 1], vec![3, 1]).unwrap();
        assert_eq!(l, interval_to_list(&as_interval));
    }

    #[test]
    fn precoloring_reduces_p3() {
        let p3 = generate(Family::Path, &[3]).unwrap();
        let pre = Precoloring::new([(2, 1)].into(), 2).unwrap();
        let r = precoloring_to_list(&p3, &pre).unwrap();
        assert_eq!(r.graph, Graph::edgeless(2));
        assert_eq!(r.lists.lists(), &[vec![2], vec![2]]);
        assert_eq!(r.original, vec![1, 3]);
    }

    #[test]
    fn empty_precoloring_is_identity() {
        let g = c4();
        let r = precoloring_to_list(&g, &Precoloring::empty(3)).unwrap();
        assert_eq!(r.graph, g);
        assert_eq!(r.lists, ListAssignment::uniform(4, 3));
    }

    #[test]
    fn precoloring_errors() {
        let k3 = generate(Family::Complete, &[3]).unwrap();
        let bad = Precoloring::new([(1, 1), (2, 1)].into(), 2).unwrap();
        assert_eq!(precoloring_to_list(&k3, &bad), Err(Error::ImproperPrecoloring(1, 2)));
        assert!(matches!(
            Precoloring::new([(1, 3)].into(), 2),
            Err(Error::PrecolorOutOfPalette {
                vertex: 1,
                color: 3,
                k: 2
            })
        ));
        let out = Precoloring::new([(5, 1)].into(), 2).unwrap();
        assert!(matches!(
            precoloring_to_list(&k3, &out),
            Err(Error::VertexOutOfRange { .. })
        ));
    }
}
