#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use magicdist_core::labeling::{reduce_value, residue_counts};
use magicdist_core::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).array_combinations().map(|[a, b]| (a, b)).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

/// Neighbourhood sums computed straight from `adjacent`.
pub fn naive_weights(g: &Graph, f: &[usize]) -> Vec<u64> {
    (1..=g.order())
        .map(|v| {
            (1..=g.order())
                .filter(|&u| g.adjacent(u, v))
                .map(|u| f[u - 1] as u64)
                .sum()
        })
        .collect()
}

/// All distance magic labelings by trying every permutation.
pub fn brute_force_dm(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    (1..=n)
        .permutations(n)
        .filter(|f| naive_weights(g, f).iter().all_equal())
        .collect()
}

/// The multiset `{1, ..., n}_p` in sorted order, from first principles.
pub fn residue_multiset(n: usize, p: usize) -> Vec<usize> {
    (1..=n)
        .map(|v| if v % p == 0 { p } else { v % p })
        .sorted()
        .collect()
}

/// All p-distance magic labelings by trying every arrangement of the multiset.
pub fn brute_force_p_dm(g: &Graph, p: usize) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    residue_multiset(n, p)
        .into_iter()
        .permutations(n)
        .filter(|f| naive_weights(g, f).iter().map(|w| w % p as u64).all_equal())
        .collect()
}

/// Keeps the library helpers honest against [`residue_multiset`].
pub fn library_multiset(n: usize, p: usize) -> Vec<usize> {
    let counts = residue_counts(n, p);
    let mut out = Vec::new();
    for (v, &c) in counts.iter().enumerate() {
        out.extend(std::iter::repeat_n(reduce_value(v + 1, p), c));
    }
    out.sort();
    out
}

/// Integer determinant by Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

pub fn adjacency_rows(g: &Graph) -> Vec<Vec<i128>> {
    (1..=g.order())
        .map(|u| (1..=g.order()).map(|v| g.adjacent(u, v) as i128).collect())
        .collect()
}
