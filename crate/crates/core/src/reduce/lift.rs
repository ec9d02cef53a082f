use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{find_conflict, Color, Coloring, IntervalAssignment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    pub coloring: Coloring,
    /// Interval elements examined in total.
    pub inspections: u64,
    /// Interval elements examined at each vertex, at most `k`.
    pub per_vertex: Vec<u64>,
}

/// Residue class targeted by color `c` of a `k`-coloring. Colors are
/// `1..=k`, so color `k` maps to class 0.
pub fn residue_class(c: Color, k: usize) -> Color {
    c % k as Color
}

/// Maps a proper coloring with colors `1..=k` onto intervals of length
/// exactly `k`: vertex `v` receives the unique element of its interval
/// congruent to `c(v)` mod `k`. Adjacent vertices have different colors,
/// hence different residues, hence different lifted colors.
pub fn modular_lift(g: &Graph, c: &Coloring, k: usize, intervals: &IntervalAssignment) -> Result<LiftResult> {
    let n = g.vertex_count();
    for got in [c.len(), intervals.len()] {
        if got != n {
            return Err(Error::DomainMismatch { expected: n, got });
        }
    }
    for v in g.vertices() {
        let color = c.color(v);
        if color > k as Color {
            return Err(Error::ColorOutOfRange { vertex: v, color, k });
        }
        let len = intervals.width(v);
        if len != k as u64 {
            return Err(Error::IntervalLength { vertex: v, len, k });
        }
    }
    if let Some((u, v)) = find_conflict(g, c)? {
        return Err(Error::ImproperColoring(u, v));
    }

    let mut per_vertex = Vec::with_capacity(n);
    let mut lifted = Vec::with_capacity(n);
    for v in g.vertices() {
        let target = residue_class(c.color(v), k);
        let mut chosen = None;
        let mut seen = 0;
        for x in intervals.gamma(v)..=intervals.mu(v) {
            seen += 1;
            if x % k as Color == target {
                assert!(
                    chosen.is_none(),
                    "two elements of a length-{k} window share residue {target}"
                );
                chosen = Some(x);
            }
        }
        per_vertex.push(seen);
        lifted.push(chosen.expect("every residue occurs in a length-k window"));
    }
    Ok(LiftResult {
        coloring: Coloring::new(lifted)?,
        inspections: per_vertex.iter().sum(),
        per_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::model::{interval_to_list, is_proper_coloring, respects_lists};

    #[test]
    fn c4_example() {
        let c4 = generate(Family::Cycle, &[4]).unwrap();
        let c = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        let i = IntervalAssignment::new(vec![10, 20, 30, 40], vec![11, 21, 31, 41]).unwrap();
        let r = modular_lift(&c4, &c, 2, &i).unwrap();
        assert_eq!(r.coloring.as_slice(), &[11, 20, 31, 40]);
        assert_eq!(r.inspections, 8);
    }

    #[test]
    fn uniform_window_is_identity() {
        let k3 = generate(Family::Complete, &[3]).unwrap();
        let c = Coloring::new(vec![3, 1, 2]).unwrap();
        let i = IntervalAssignment::new(vec![1; 3], vec![3; 3]).unwrap();
        assert_eq!(modular_lift(&k3, &c, 3, &i).unwrap().coloring, c);
    }

    #[test]
    fn k3_shifted_windows() {
        let k3 = generate(Family::Complete, &[3]).unwrap();
        let c = Coloring::new(vec![1, 2, 3]).unwrap();
        let i = IntervalAssignment::new(vec![4, 1, 7], vec![6, 3, 9]).unwrap();
        let r = modular_lift(&k3, &c, 3, &i).unwrap();
        assert_eq!(r.coloring.as_slice(), &[4, 2, 9]);
        assert!(is_proper_coloring(&k3, &r.coloring).unwrap());
        assert!(respects_lists(&r.coloring, &interval_to_list(&i)).unwrap());
    }

    #[test]
    fn errors() {
        let p2 = generate(Family::Path, &[2]).unwrap();
        let i = IntervalAssignment::new(vec![1, 5], vec![2, 6]).unwrap();
        let same = Coloring::new(vec![1, 1]).unwrap();
        assert_eq!(modular_lift(&p2, &same, 2, &i), Err(Error::ImproperColoring(1, 2)));
        let big = Coloring::new(vec![1, 3]).unwrap();
        assert_eq!(
            modular_lift(&p2, &big, 2, &i),
            Err(Error::ColorOutOfRange {
                vertex: 2,
                color: 3,
                k: 2
            })
        );
        let wide = IntervalAssignment::new(vec![1, 5], vec![3, 6]).unwrap();
        let ok = Coloring::new(vec![1, 2]).unwrap();
        assert_eq!(
            modular_lift(&p2, &ok, 2, &wide),
            Err(Error::IntervalLength {
                vertex: 1,
                len: 3,
                k: 2
            })
        );
        assert!(matches!(
            modular_lift(&p2, &Coloring::new(vec![1]).unwrap(), 2, &i),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn residues() {
        assert_eq!(residue_class(2, 2), 0);
        assert_eq!(residue_class(1, 2), 1);
        assert_eq!(residue_class(1, 1), 0);
    }
}
