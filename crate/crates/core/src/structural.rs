//! Cheap combinatorial necessary conditions and the 2-distance magic
//! structure checks.
//!
//! Every rejection carries a witness that can be re-checked against the graph
//! on its own with [`RejectWitness::recheck`].

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{verify_p_distance_magic, LabelingError, ModularLabeling};
use crate::spectral;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterVerdict {
    /// No claim either way.
    Pass,
    /// The graph cannot be distance magic.
    Reject(RejectWitness),
}

impl FilterVerdict {
    pub fn is_reject(&self) -> bool {
        matches!(self, FilterVerdict::Reject(_))
    }

    pub fn witness(&self) -> Option<&RejectWitness> {
        match self {
            FilterVerdict::Pass => None,
            FilterVerdict::Reject(w) => Some(w),
        }
    }
}

/// Evidence for a rejection. Vertices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectWitness {
    /// `|N(x) △ N(y)|` is 1 or 2.
    SymmetricDifference { x: usize, y: usize, size: usize },
    /// Regular of odd degree.
    OddRegular { degree: usize },
    /// 2-regular with a component that is not a 4-cycle.
    NonC4Component { vertices: Vec<usize> },
    /// Even-regular but 0 is not an adjacency eigenvalue.
    NonsingularEvenRegular { degree: usize },
}

impl RejectWitness {
    /// Short machine-readable name of the filter that produced this witness.
    pub fn filter_name(&self) -> &'static str {
        match self {
            RejectWitness::SymmetricDifference { .. } => "symmetric_difference",
            RejectWitness::OddRegular { .. } | RejectWitness::NonC4Component { .. } => "regular",
            RejectWitness::NonsingularEvenRegular { .. } => "even_regular_zero_eigenvalue",
        }
    }

    /// Re-derives the witness from `g` alone.
    pub fn recheck(&self, g: &Graph) -> bool {
        match self {
            RejectWitness::SymmetricDifference { x, y, size } => {
                let s = g.symmetric_difference_size(x - 1, y - 1);
                s == *size && (s == 1 || s == 2)
            }
            RejectWitness::OddRegular { degree } => {
                g.regular_degree() == Some(*degree) && degree % 2 == 1
            }
            RejectWitness::NonC4Component { vertices } => {
                g.regular_degree() == Some(2)
                    && g.components().contains(vertices)
                    && vertices.len() != 4
            }
            RejectWitness::NonsingularEvenRegular { degree } => {
                g.regular_degree() == Some(*degree) && degree % 2 == 0 && !spectral::is_singular(g)
            }
        }
    }
}

/// Rejects when two vertices have neighbourhoods differing in one or two
/// elements: their weights would have to differ by a single label, or two
/// distinct labels would have to coincide.
pub fn symm_diff_filter(g: &Graph) -> FilterVerdict {
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            let size = g.symmetric_difference_size(x, y);
            if size == 1 || size == 2 {
                return FilterVerdict::Reject(RejectWitness::SymmetricDifference {
                    x: x + 1,
                    y: y + 1,
                    size,
                });
            }
        }
    }
    FilterVerdict::Pass
}

/// Odd-regular graphs are never distance magic, and among 2-regular graphs
/// only disjoint unions of `C4` are.
pub fn regular_filters(g: &Graph) -> FilterVerdict {
    match g.regular_degree() {
        Some(r) if r % 2 == 1 => FilterVerdict::Reject(RejectWitness::OddRegular { degree: r }),
        Some(2) => match g.components().into_iter().find(|c| c.len() != 4) {
            Some(vertices) => FilterVerdict::Reject(RejectWitness::NonC4Component { vertices }),
            None => FilterVerdict::Pass,
        },
        _ => FilterVerdict::Pass,
    }
}

/// A `P3` or `C4` subgraph, listed along the path or cycle (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgraphWitness {
    P3([usize; 3]),
    C4([usize; 4]),
}

impl SubgraphWitness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            SubgraphWitness::P3(v) => v,
            SubgraphWitness::C4(v) => v,
        }
    }
}

/// Finds a `C4` if there is one, otherwise a `P3` (some vertex of degree at
/// least two). Every distance magic graph contains one of them.
pub fn contains_p3_or_c4(g: &Graph) -> Option<SubgraphWitness> {
    let n = g.order();
    for a in 0..n {
        for c in a + 1..n {
            let mut common = (0..n).filter(|&x| g.adj0(a, x) && g.adj0(c, x));
            if let (Some(b), Some(d)) = (common.next(), common.next()) {
                return Some(SubgraphWitness::C4([a + 1, b + 1, c + 1, d + 1]));
            }
        }
    }
    (0..n).find_map(|v| {
        let mut nb = g.nbrs0(v);
        match (nb.next(), nb.next()) {
            (Some(a), Some(b)) => Some(SubgraphWitness::P3([a + 1, v + 1, b + 1])),
            _ => None,
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("expected a 2-distance magic labeling, got modulus {0}")]
    WrongModulus(usize),
    #[error("labeling is not 2-distance magic: {0}")]
    Unverified(LabelingError),
    #[error("vertex {vertex} has degree {degree} in G1, wrong parity for constant {constant}")]
    ParityViolation {
        vertex: usize,
        degree: usize,
        constant: u64,
    },
}

/// Shape of `G1`, the subgraph induced on the vertices labelled 1, under a
/// 2-distance magic labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoDmStructure {
    /// Constant 0: every `G1` degree is even, so each component is Eulerian.
    Eulerian {
        vertices: Vec<usize>,
        components: Vec<Vec<usize>>,
    },
    /// Constant 1: every `G1` degree is odd; a greedy maximal matching.
    Matching {
        vertices: Vec<usize>,
        matching: Vec<(usize, usize)>,
        perfect: bool,
    },
}

/// Checks the degree parity of `G1` and returns its components (constant 0)
/// or a maximal matching built greedily over edges in lexicographic order
/// (constant 1). Vertices are reported in the numbering of `g`.
pub fn two_dm_structure(g: &Graph, f: &ModularLabeling) -> Result<TwoDmStructure, StructuralError> {
    if f.modulus() != 2 {
        return Err(StructuralError::WrongModulus(f.modulus()));
    }
    let constant = verify_p_distance_magic(g, f)
        .map_err(StructuralError::Unverified)?
        .constant;
    let vertices: Vec<usize> = (1..=g.order())
        .filter(|&v| f.values()[v - 1] == 1)
        .collect();
    let g1 = g
        .induced_subgraph(&vertices)
        .expect("label 1 is always used");
    for (i, &v) in vertices.iter().enumerate() {
        let degree = g1.degree(i + 1);
        if degree % 2 != constant as usize {
            return Err(StructuralError::ParityViolation {
                vertex: v,
                degree,
                constant,
            });
        }
    }
    let original = |local: usize| vertices[local - 1];
    if constant == 0 {
        let components = g1
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(original).collect())
            .collect();
        return Ok(TwoDmStructure::Eulerian {
            vertices,
            components,
        });
    }
    let mut matched = vec![false; vertices.len()];
    let mut matching = Vec::new();
    for (a, b) in g1.edges() {
        if !matched[a - 1] && !matched[b - 1] {
            matched[a - 1] = true;
            matched[b - 1] = true;
            matching.push((original(a), original(b)));
        }
    }
    let perfect = matched.iter().all(|&m| m);
    Ok(TwoDmStructure::Matching {
        vertices,
        matching,
        perfect,
    })
}
