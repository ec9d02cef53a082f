//! Brute-force oracles shared by the integration suites. Nothing here calls
//! the solvers under test.

#![allow(dead_code)]

use listcol::{Color, Graph};
use rand::Rng;

/// Every labeled graph on `n` vertices, built from an edge bitmask.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push((u, v));
        }
    }
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
        .collect()
}

pub fn proper(g: &Graph, colors: &[Color]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u - 1] != colors[v - 1])
}

/// Calls `f` on every tuple of the cartesian product, in lexicographic order,
/// until it returns `true`. Returns the number of tuples visited.
pub fn for_each_product(lists: &[Vec<Color>], mut f: impl FnMut(&[Color]) -> bool) -> u64 {
    if lists.iter().any(|l| l.is_empty()) {
        return 0;
    }
    let mut pos = vec![0usize; lists.len()];
    let mut visited = 0;
    loop {
        let tuple: Vec<Color> = pos.iter().zip(lists).map(|(&p, l)| l[p]).collect();
        visited += 1;
        if f(&tuple) {
            return visited;
        }
        let mut i = lists.len();
        loop {
            if i == 0 {
                return visited;
            }
            i -= 1;
            pos[i] += 1;
            if pos[i] < lists[i].len() {
                break;
            }
            pos[i] = 0;
        }
    }
}

/// Lexicographically first proper coloring from sorted lists.
pub fn brute_list_coloring(g: &Graph, lists: &[Vec<Color>]) -> Option<Vec<Color>> {
    let mut found = None;
    for_each_product(lists, |t| {
        if proper(g, t) {
            found = Some(t.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Number of proper colorings from the lists (visits the whole product).
pub fn count_list_colorings(g: &Graph, lists: &[Vec<Color>]) -> u64 {
    let mut count = 0;
    for_each_product(lists, |t| {
        count += proper(g, t) as u64;
        false
    });
    count
}

pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0..=n)
        .find(|&k| brute_list_coloring(g, &vec![(1..=k as Color).collect(); n]).is_some())
        .unwrap()
}

pub fn brute_bipartite(g: &Graph) -> bool {
    brute_list_coloring(g, &vec![vec![1, 2]; g.vertex_count()]).is_some()
}

/// Random subset of `1..=pool` with exactly `size` elements, sorted.
pub fn random_list(rng: &mut impl Rng, pool: Color, size: usize) -> Vec<Color> {
    let mut all: Vec<Color> = (1..=pool).collect();
    for i in 0..size {
        let j = rng.gen_range(i..all.len());
        all.swap(i, j);
    }
    let mut l = all[..size].to_vec();
    l.sort_unstable();
    l
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Every subset of `{1, …, c}` as a sorted list, including the empty one.
pub fn all_subsets(c: Color) -> Vec<Vec<Color>> {
    (0u32..1 << c)
        .map(|m| (1..=c).filter(|&x| m >> (x - 1) & 1 == 1).collect())
        .collect()
}

/// Bipartiteness by union-find with parity, for graphs too large to brute force.
pub fn parity_bipartite(g: &Graph) -> bool {
    fn find(parent: &mut [usize], parity: &mut [u8], x: usize) -> (usize, u8) {
        if parent[x] == x {
            return (x, 0);
        }
        let (root, p) = find(parent, parity, parent[x]);
        parent[x] = root;
        parity[x] ^= p;
        (root, parity[x])
    }
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parity = vec![0u8; n];
    for &(u, v) in g.edges() {
        let (ru, pu) = find(&mut parent, &mut parity, u - 1);
        let (rv, pv) = find(&mut parent, &mut parity, v - 1);
        if ru == rv {
            if pu == pv {
                return false;
            }
        } else {
            parent[ru] = rv;
            parity[ru] = pu ^ pv ^ 1;
        }
    }
    true
}
