//! Automorphism groups, canonical forms and the action of `Aut(G)` on
//! labelings.
//!
//! Groups are listed element by element, which is fine for the small orders
//! this toolkit targets (`n <= 12`). Both the automorphism search and the
//! canonical form start from the coarsest equitable partition obtained by
//! colour refinement.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::labeling::{verify_distance_magic, Labeling};

/// Largest order for which groups are listed explicitly.
pub const MAX_ORDER: usize = 12;
/// Upper limit on the number of listed group elements.
pub const MAX_ELEMENTS: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("order {n} exceeds the explicit-listing limit {MAX_ORDER}")]
    TooLarge { n: usize },
    #[error("automorphism group has more than {MAX_ELEMENTS} elements")]
    TooManyElements,
    #[error("permutation has {found} points, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("images are not a permutation of 1..={n}")]
    InvalidPermutation { n: usize },
    #[error("labeling #{index} is not distance magic")]
    NotDistanceMagic { index: usize },
    #[error("labeling #{index} has a non-trivial stabilizer")]
    NontrivialStabilizer { index: usize },
    #[error("the orbit of labeling #{index} leaves the input set")]
    NotClosed { index: usize },
}

/// A bijection on `{1, ..., n}`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i - 1]` is the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self, AutError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(AutError::InvalidPermutation { n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Whether `(u, v)` adjacent iff `(σu, σv)` adjacent for all pairs.
    pub fn preserves(&self, g: &Graph) -> bool {
        let n = g.order();
        self.len() == n
            && (0..n).all(|i| {
                (i + 1..n).all(|j| g.adj0(i, j) == g.adj0(self.images[i] - 1, self.images[j] - 1))
            })
    }
}

/// All automorphisms of a graph, sorted with the identity first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Orbits of the vertex action, as sorted 1-based vertex lists.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.elements[0].len();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for v in 1..=n {
            if orbit_of[v - 1] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = self.elements.iter().map(|s| s.apply(v)).collect();
            for &u in &members {
                orbit_of[u - 1] = orbits.len();
            }
            orbits.push(members.into_iter().collect());
        }
        orbits
    }
}

/// Ordered partition refinement: split every cell by the number of
/// neighbours each vertex has in every cell, until stable. Cells hold
/// zero-based vertices in increasing order; sub-cells are ordered by their
/// count signature so the result commutes with relabeling.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let k = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u16; k];
                    for u in g.nbrs0(v) {
                        sig[cell_of[u]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|(_, v)| *v).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

fn equitable_colors(g: &Graph) -> Vec<usize> {
    let mut cells = vec![(0..g.order()).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut color = vec![0; g.order()];
    for (c, cell) in cells.iter().enumerate() {
        for &v in cell {
            color[v] = c;
        }
    }
    color
}

/// Lists every adjacency-preserving bijection by backtracking over images
/// that respect the equitable colouring.
pub fn automorphisms(g: &Graph) -> Result<AutGroup, AutError> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(AutError::TooLarge { n });
    }
    let color = equitable_colors(g);
    let order = bfs_order(g);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut elements = Vec::new();
    extend_automorphism(g, &color, &order, 0, &mut image, &mut used, &mut elements)?;
    elements.sort();
    debug_assert!(elements[0].is_identity());
    Ok(AutGroup { elements })
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in g.nbrs0(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

fn extend_automorphism(
    g: &Graph,
    color: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) -> Result<(), AutError> {
    if depth == order.len() {
        if out.len() == MAX_ELEMENTS {
            return Err(AutError::TooManyElements);
        }
        out.push(Permutation {
            images: image.iter().map(|&w| w + 1).collect(),
        });
        return Ok(());
    }
    let v = order[depth];
    for w in 0..g.order() {
        if used[w] || color[w] != color[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.adj0(u, v) == g.adj0(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend_automorphism(g, color, order, depth + 1, image, used, out)?;
        used[w] = false;
    }
    image[v] = usize::MAX;
    Ok(())
}

/// Canonical graph6 string: the lexicographically smallest graph6 encoding
/// among the leaves of the individualisation-refinement tree. Isomorphic
/// graphs, and only those, share a canonical form.
pub fn canonical_form(g: &Graph) -> String {
    let mut cells = vec![(0..g.order()).collect::<Vec<_>>()];
    let mut best: Option<String> = None;
    canonical_search(g, &mut cells, &mut best);
    best.expect("search tree has at least one leaf")
}

fn twins(g: &Graph, a: usize, b: usize) -> bool {
    (0..g.order())
        .filter(|&x| x != a && x != b)
        .all(|x| g.adj0(a, x) == g.adj0(b, x))
}

fn canonical_search(g: &Graph, cells: &mut Vec<Vec<usize>>, best: &mut Option<String>) {
    refine(g, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(target) = target else {
        let mut images = vec![0; g.order()];
        for (pos, cell) in cells.iter().enumerate() {
            images[cell[0]] = pos + 1;
        }
        let code = to_graph6(&g.relabeled(&images));
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target].clone() {
        // swapping twins is an automorphism fixing everything individualised
        // so far, so their subtrees yield the same leaves
        if tried.iter().any(|&t| twins(g, t, v)) {
            continue;
        }
        let mut child = cells.clone();
        let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
        child[target] = vec![v];
        child.insert(target + 1, rest);
        canonical_search(g, &mut child, best);
        tried.push(v);
    }
}

/// `(σ · f)(i) = f(σ⁻¹(i))`.
pub fn act(sigma: &Permutation, f: &Labeling) -> Result<Labeling, AutError> {
    if sigma.len() != f.len() {
        return Err(AutError::SizeMismatch {
            expected: f.len(),
            found: sigma.len(),
        });
    }
    let values = f.values();
    let mut out = vec![0; f.len()];
    for (i, &img) in sigma.images.iter().enumerate() {
        // σ(i+1) = img, so σ⁻¹(img) = i+1
        out[img - 1] = values[i];
    }
    Ok(Labeling::from_values_unchecked(out))
}

/// Partition of a set of distance magic labelings into `Aut(G)`-orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingOrbits {
    pub group_order: usize,
    /// Each orbit sorted; orbits ordered by their smallest member.
    pub orbits: Vec<Vec<Labeling>>,
}

impl LabelingOrbits {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.orbits.iter().map(Vec::len).sum()
    }
}

/// Splits verified distance magic labelings into orbits and checks each one
/// has exactly `|Aut(G)|` members (trivial stabilisers).
pub fn labeling_orbits(g: &Graph, labelings: &[Labeling]) -> Result<LabelingOrbits, AutError> {
    let group = automorphisms(g)?;
    for (index, f) in labelings.iter().enumerate() {
        if verify_distance_magic(g, f).is_err() {
            return Err(AutError::NotDistanceMagic { index });
        }
    }
    let input: BTreeSet<&Labeling> = labelings.iter().collect();
    let mut assigned: BTreeSet<Labeling> = BTreeSet::new();
    let mut orbits = Vec::new();
    for (index, f) in labelings.iter().enumerate() {
        if assigned.contains(f) {
            continue;
        }
        let orbit: BTreeSet<Labeling> = group
            .elements()
            .iter()
            .map(|s| act(s, f))
            .collect::<Result<_, _>>()?;
        if orbit.len() != group.order() {
            return Err(AutError::NontrivialStabilizer { index });
        }
        if !orbit.iter().all(|h| input.contains(h)) {
            return Err(AutError::NotClosed { index });
        }
        assigned.extend(orbit.iter().cloned());
        orbits.push(orbit.into_iter().collect::<Vec<_>>());
    }
    orbits.sort();
    let result = LabelingOrbits {
        group_order: group.order(),
        orbits,
    };
    assert_eq!(result.total() % result.group_order, 0);
    Ok(result)
}
