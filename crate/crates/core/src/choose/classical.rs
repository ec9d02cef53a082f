use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::Pow;

use super::{engine, ChoosabilityVerdict, ChooseConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{Color, Coloring, ListAssignment};
use crate::solve::search_lists;

/// All `k`-subsets of `{1, …, pool}` in colex order (compare largest
/// elements first).
pub fn k_subsets(pool: usize, k: usize) -> Vec<Vec<Color>> {
    fn rec(from: Color, pool: Color, k: usize, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in from..=pool {
            cur.push(c);
            rec(c + 1, pool, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, pool as Color, k, &mut Vec::with_capacity(k), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

fn list_assignments(g: &Graph, k: usize, pool: usize, config: &ChooseConfig) -> Result<(Vec<Vec<Color>>, u64)> {
    if pool < k {
        return Err(Error::PoolTooSmall { pool, k });
    }
    let count = BigUint::from(binomial(pool as u64, k as u64)).pow(g.vertex_count());
    let total = config.admit(&count)?;
    Ok((k_subsets(pool, k), total))
}

fn decode(subsets: &[Vec<Color>], n: usize, mut index: u64) -> Vec<Vec<Color>> {
    let base = subsets.len() as u64;
    let mut lists = vec![Vec::new(); n];
    for slot in lists.iter_mut().rev() {
        *slot = subsets[(index % base) as usize].clone();
        index /= base;
    }
    lists
}

/// Classical `k`-choosability restricted to lists drawn from `{1, …, pool}`.
/// Assignments are enumerated vertex-major over subsets in colex order.
pub fn is_k_choosable(
    g: &Graph,
    k: usize,
    pool: usize,
    config: &ChooseConfig,
) -> Result<ChoosabilityVerdict<ListAssignment>> {
    let (subsets, total) = list_assignments(g, k, pool, config)?;
    let n = g.vertex_count();
    Ok(engine::search(
        total,
        config.workers,
        |i| Some(ListAssignment::new(decode(&subsets, n, i)).expect("pool colors are positive")),
        |l: &ListAssignment| search_lists(g, l.lists(), config.solver),
    ))
}

/// `Φ(v) = {c(v)}`.
pub fn selection_from_coloring(c: &Coloring) -> Vec<BTreeSet<Color>> {
    c.as_slice().iter().map(|&x| BTreeSet::from([x])).collect()
}

/// Inverse of [`selection_from_coloring`]; `None` unless every set is a singleton.
pub fn coloring_from_selection(phi: &[BTreeSet<Color>]) -> Option<Coloring> {
    let colors = phi
        .iter()
        .map(|s| (s.len() == 1).then(|| *s.first().unwrap()))
        .collect::<Option<Vec<_>>>()?;
    Coloring::new(colors).ok()
}

/// `|Φ(v)| = 1`, `Φ(v) ⊆ L(v)`, and adjacent vertices get disjoint sets.
pub fn is_valid_selection(g: &Graph, lists: &ListAssignment, phi: &[BTreeSet<Color>]) -> bool {
    phi.len() == g.vertex_count()
        && lists.len() == phi.len()
        && phi
            .iter()
            .zip(lists.lists())
            .all(|(s, l)| s.len() == 1 && s.iter().all(|c| l.binary_search(c).is_ok()))
        && g.edges().iter().all(|&(u, v)| phi[u - 1].is_disjoint(&phi[v - 1]))
}

/// `(k:1)`-choosability: every assignment of `k`-lists admits a singleton
/// selection `Φ(v) ⊆ L(v)` that is disjoint across edges. Each list coloring
/// witness is carried to its selection and checked against that definition.
pub fn is_k1_choosable(
    g: &Graph,
    k: usize,
    pool: usize,
    config: &ChooseConfig,
) -> Result<ChoosabilityVerdict<ListAssignment>> {
    let (subsets, total) = list_assignments(g, k, pool, config)?;
    let n = g.vertex_count();
    Ok(engine::search(
        total,
        config.workers,
        |i| Some(ListAssignment::new(decode(&subsets, n, i)).expect("pool colors are positive")),
        |l: &ListAssignment| {
            let r = search_lists(g, l.lists(), config.solver);
            if let Some(c) = &r.witness {
                let phi = selection_from_coloring(c);
                assert!(is_valid_selection(g, l, &phi), "witness must map to a valid selection");
                assert_eq!(coloring_from_selection(&phi).as_ref(), Some(c));
            }
            r
        },
    ))
}
