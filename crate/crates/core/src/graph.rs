//! Dense simple undirected graphs on vertices `1..=n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Errors raised while building a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{family} requires an even order >= {min}, got {n}")]
    NeedsEvenOrder {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("{family} requires order >= {min}, got {n}")]
    OrderTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(alloc::string::String),
    #[error("malformed family parameters: {0}")]
    BadFamilyParams(alloc::string::String),
}

/// A simple undirected graph stored as a symmetric bit matrix.
///
/// Rows are packed into `u64` words. The relation is kept loop-free and
/// symmetric by every constructor, so values are immutable facts once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// Builds a graph from 1-based vertex pairs. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set0(u - 1, v - 1);
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Whether `u` and `v` (1-based) are adjacent.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj0(u - 1, v - 1)
    }

    /// Neighbours of `v` (1-based) in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.nbrs0(v - 1).map(|u| u + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.deg0(v - 1)
    }

    /// Degree sequence in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.deg0(i)).collect()
    }

    /// Edges as 1-based pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.nbrs0(i).filter(|&j| j > i) {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.deg0(0);
        (1..self.n).all(|i| self.deg0(i) == r).then_some(r)
    }

    /// Connected components as sorted lists of 1-based vertices, ordered by
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v + 1);
                for u in self.nbrs0(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced on the given 1-based vertices, renumbered `1..=k` in
    /// the order they are listed.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut h = Graph::empty(vertices.len())?;
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(u, v) {
                    h.set0(a, b);
                }
            }
        }
        Ok(h)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `images[v - 1]`.
    ///
    /// `images` must be a permutation of `1..=n`.
    pub fn relabeled(&self, images: &[usize]) -> Graph {
        assert_eq!(images.len(), self.n, "relabeling length mismatch");
        let mut h = Graph::empty(self.n).expect("n >= 1");
        for (u, v) in self.edges() {
            h.set0(images[u - 1] - 1, images[v - 1] - 1);
        }
        h
    }

    // Zero-based internals shared across the crate.

    pub(crate) fn adj0(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub(crate) fn set0(&mut self, i: usize, j: usize) {
        debug_assert_ne!(i, j);
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn deg0(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn nbrs0(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Zero-based adjacency lists.
    pub(crate) fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| self.nbrs0(i).collect()).collect()
    }

    /// Size of the symmetric difference `N(i) △ N(j)` (zero-based).
    pub(crate) fn symmetric_difference_size(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}
