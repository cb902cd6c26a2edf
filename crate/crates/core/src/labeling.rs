//! Labelings, weights and (p-)distance magic verification.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {found} values but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("values are not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("values are not the multiset {{1..={n}}}_{p}")]
    InvalidMultiset { n: usize, p: usize },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("labeling is empty")]
    Empty,
    #[error("not magic: {0}")]
    NotMagic(NotMagicWitness),
    #[error("graph is not modulo-{p} regular")]
    NotModuloRegular { p: usize },
    #[error("shifted weights are {observed} mod {p}, predicted {predicted}")]
    ShiftMismatch {
        p: usize,
        predicted: u64,
        observed: u64,
    },
}

/// Two vertices (1-based) whose weights differ. In the modular case the
/// weights are residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotMagicWitness {
    pub first: usize,
    pub second: usize,
    pub first_weight: u64,
    pub second_weight: u64,
}

impl fmt::Display for NotMagicWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "w({}) = {} != w({}) = {}",
            self.first, self.first_weight, self.second, self.second_weight
        )
    }
}

/// A bijection from the vertices onto `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    values: Vec<usize>,
}

impl Labeling {
    pub fn new(values: Vec<usize>) -> Result<Self, LabelingError> {
        let n = values.len();
        if n == 0 {
            return Err(LabelingError::Empty);
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(LabelingError::NotAPermutation { n });
            }
            seen[v - 1] = true;
        }
        Ok(Labeling { values })
    }

    /// `f(i) = i`.
    pub fn identity(n: usize) -> Self {
        Labeling {
            values: (1..=n).collect(),
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Labeling::new(values.clone()).is_ok());
        Labeling { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }
}

/// Multiplicity of each residue `1..=min(p, n)` in `{1, ..., n}_p`.
pub fn residue_counts(n: usize, p: usize) -> Vec<usize> {
    let top = p.min(n);
    (1..=top).map(|v| (n - v) / p + 1).collect()
}

/// `v mod p` with residue 0 written as `p`.
pub fn reduce_value(v: usize, p: usize) -> usize {
    match v % p {
        0 => p,
        r => r,
    }
}

/// A bijection from the vertices onto the multiset `{1, ..., n}_p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModularLabeling {
    modulus: usize,
    values: Vec<usize>,
}

impl ModularLabeling {
    pub fn new(modulus: usize, values: Vec<usize>) -> Result<Self, LabelingError> {
        if modulus == 0 {
            return Err(LabelingError::ZeroModulus);
        }
        let n = values.len();
        if n == 0 {
            return Err(LabelingError::Empty);
        }
        let mut counts = residue_counts(n, modulus);
        for &v in &values {
            let slot = v
                .checked_sub(1)
                .and_then(|i| counts.get_mut(i))
                .filter(|c| **c > 0)
                .ok_or(LabelingError::InvalidMultiset { n, p: modulus })?;
            *slot -= 1;
        }
        Ok(ModularLabeling { modulus, values })
    }

    pub(crate) fn from_values_unchecked(modulus: usize, values: Vec<usize>) -> Self {
        debug_assert!(ModularLabeling::new(modulus, values.clone()).is_ok());
        ModularLabeling { modulus, values }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A verified witness that every vertex weight equals `constant`
/// (or is congruent to it modulo `modulus`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicCertificate {
    pub constant: u64,
    /// Exact weights, or canonical residues in `0..p` for modular labelings.
    pub weights: Vec<u64>,
    pub modulus: Option<usize>,
    /// The graph has an isolated vertex, which forces every weight to 0.
    pub degenerate: bool,
}

/// The bound `(n^2 - 1) / 2` on a magic constant, stored doubled so it stays
/// exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MagicBound {
    pub twice: u64,
}

impl MagicBound {
    pub fn admits(&self, k: u64) -> bool {
        2 * k <= self.twice
    }

    pub fn as_f64(&self) -> f64 {
        self.twice as f64 / 2.0
    }
}

pub fn magic_constant_bound(n: usize) -> MagicBound {
    let n = n as u64;
    MagicBound {
        twice: (n * n).saturating_sub(1),
    }
}

/// Something that assigns a positive integer to each vertex.
pub trait VertexLabels {
    fn label_values(&self) -> &[usize];
    /// `None` for ordinary labelings.
    fn label_modulus(&self) -> Option<usize>;
}

impl VertexLabels for Labeling {
    fn label_values(&self) -> &[usize] {
        &self.values
    }
    fn label_modulus(&self) -> Option<usize> {
        None
    }
}

impl VertexLabels for ModularLabeling {
    fn label_values(&self) -> &[usize] {
        &self.values
    }
    fn label_modulus(&self) -> Option<usize> {
        Some(self.modulus)
    }
}

/// Neighbourhood sums `w(v) = Σ_{u ∈ N(v)} f(u)`, reduced to `0..p` for
/// modular labelings.
pub fn weights<L: VertexLabels + ?Sized>(g: &Graph, f: &L) -> Result<Vec<u64>, LabelingError> {
    let raw = raw_weights(g, f.label_values())?;
    Ok(match f.label_modulus() {
        Some(p) => raw.into_iter().map(|w| w % p as u64).collect(),
        None => raw,
    })
}

pub(crate) fn raw_weights(g: &Graph, values: &[usize]) -> Result<Vec<u64>, LabelingError> {
    if values.len() != g.order() {
        return Err(LabelingError::LengthMismatch {
            expected: g.order(),
            found: values.len(),
        });
    }
    Ok((0..g.order())
        .map(|i| g.nbrs0(i).map(|j| values[j] as u64).sum())
        .collect())
}

fn has_isolated_vertex(g: &Graph) -> bool {
    (0..g.order()).any(|i| g.deg0(i) == 0)
}

fn constant_or_witness(weights: &[u64]) -> Result<u64, LabelingError> {
    let k = weights[0];
    match weights.iter().position(|&w| w != k) {
        None => Ok(k),
        Some(j) => Err(LabelingError::NotMagic(NotMagicWitness {
            first: 1,
            second: j + 1,
            first_weight: k,
            second_weight: weights[j],
        })),
    }
}

/// Certificate iff all weights agree; otherwise a [`NotMagicWitness`].
pub fn verify_distance_magic(g: &Graph, f: &Labeling) -> Result<MagicCertificate, LabelingError> {
    let weights = weights(g, f)?;
    let constant = constant_or_witness(&weights)?;
    assert!(
        magic_constant_bound(g.order()).admits(constant),
        "magic constant {constant} exceeds (n^2 - 1)/2"
    );
    Ok(MagicCertificate {
        constant,
        weights,
        modulus: None,
        degenerate: has_isolated_vertex(g),
    })
}

/// Certificate with a residue constant in `0..p` iff all weights agree mod `p`.
pub fn verify_p_distance_magic(
    g: &Graph,
    f: &ModularLabeling,
) -> Result<MagicCertificate, LabelingError> {
    let weights = weights(g, f)?;
    let constant = constant_or_witness(&weights)?;
    Ok(MagicCertificate {
        constant,
        weights,
        modulus: Some(f.modulus),
        degenerate: has_isolated_vertex(g),
    })
}

/// `f_p(v) = f(v) mod p`, with residue 0 written as `p`.
pub fn reduce_mod_p(f: &Labeling, p: usize) -> Result<ModularLabeling, LabelingError> {
    if p == 0 {
        return Err(LabelingError::ZeroModulus);
    }
    let values = f.values.iter().map(|&v| reduce_value(v, p)).collect();
    Ok(ModularLabeling::from_values_unchecked(p, values))
}

/// `Some(r)` with `r` in `0..p` when every degree is congruent to `r` mod `p`.
pub fn modulo_regularity(g: &Graph, p: usize) -> Option<usize> {
    if p == 0 {
        return None;
    }
    let r = g.deg0(0) % p;
    (1..g.order()).all(|i| g.deg0(i) % p == r).then_some(r)
}

/// Result of adding a constant to a p-distance magic labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftOutcome {
    pub modulus: usize,
    /// `f(v) + i` reduced into `1..=p`.
    pub values: Vec<usize>,
    /// `(k + i r) mod p`, confirmed against the shifted weights.
    pub constant: u64,
    /// The shifted values as a modular labeling, when they still form the
    /// multiset `{1, ..., n}_p`. This always holds when `p` divides `n`.
    pub labeling: Option<ModularLabeling>,
}

/// Shifts every label by `shift` on an `r (mod p)`-regular graph and checks
/// the new constant is `(k + shift * r) mod p`.
pub fn shift_labeling(
    g: &Graph,
    f: &ModularLabeling,
    shift: usize,
) -> Result<ShiftOutcome, LabelingError> {
    let p = f.modulus;
    let r = modulo_regularity(g, p).ok_or(LabelingError::NotModuloRegular { p })?;
    let k = verify_p_distance_magic(g, f)?.constant;
    let predicted = (k + (shift % p) as u64 * r as u64) % p as u64;
    let values: Vec<usize> = f
        .values
        .iter()
        .map(|&v| reduce_value(v + shift % p, p))
        .collect();
    let shifted = raw_weights(g, &values)?;
    if let Some(w) = shifted.iter().find(|&&w| w % p as u64 != predicted) {
        return Err(LabelingError::ShiftMismatch {
            p,
            predicted,
            observed: w % p as u64,
        });
    }
    let labeling = ModularLabeling::new(p, values.clone()).ok();
    Ok(ShiftOutcome {
        modulus: p,
        values,
        constant: predicted,
        labeling,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn c4() -> Graph {
        construct::cycle(4).unwrap()
    }

    fn p3() -> Graph {
        construct::path(3).unwrap()
    }

    #[test]
    fn worked_weights() {
        let f = Labeling::new(vec![1, 3, 2]).unwrap();
        assert_eq!(weights(&p3(), &f).unwrap(), vec![3, 3, 3]);
        let f = Labeling::new(vec![1, 2, 4, 3]).unwrap();
        assert_eq!(weights(&c4(), &f).unwrap(), vec![5, 5, 5, 5]);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(weights(&k1, &Labeling::identity(1)).unwrap(), vec![0]);
    }

    #[test]
    fn length_mismatch() {
        let f = Labeling::identity(3);
        assert_eq!(
            weights(&c4(), &f),
            Err(LabelingError::LengthMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::new(vec![1, 1, 2]).is_err());
        assert!(Labeling::new(vec![0, 1, 2]).is_err());
        assert!(Labeling::new(vec![]).is_err());
        assert!(ModularLabeling::new(2, vec![1, 2, 2, 1]).is_ok());
        assert!(ModularLabeling::new(3, vec![2, 1, 3, 1]).is_ok());
        assert_eq!(
            ModularLabeling::new(2, vec![1, 1, 1, 2]),
            Err(LabelingError::InvalidMultiset { n: 4, p: 2 })
        );
        assert!(ModularLabeling::new(3, vec![4, 1, 2, 3]).is_err());
        assert_eq!(
            ModularLabeling::new(0, vec![1]),
            Err(LabelingError::ZeroModulus)
        );
    }

    #[test]
    fn multiset_example() {
        // {1,...,9}_4 = {1,2,3,4,1,2,3,4,1}
        assert_eq!(residue_counts(9, 4), vec![3, 2, 2, 2]);
        assert_eq!(residue_counts(4, 7), vec![1, 1, 1, 1]);
    }

    #[test]
    fn verify_worked_examples() {
        let cert = verify_distance_magic(&c4(), &Labeling::new(vec![1, 2, 4, 3]).unwrap()).unwrap();
        assert_eq!(cert.constant, 5);
        assert!(!cert.degenerate);

        let err = verify_distance_magic(&p3(), &Labeling::identity(3)).unwrap_err();
        assert_eq!(
            err,
            LabelingError::NotMagic(NotMagicWitness {
                first: 1,
                second: 2,
                first_weight: 2,
                second_weight: 4
            })
        );

        let cert = verify_distance_magic(&construct::fig_ndm(), &Labeling::identity(11)).unwrap();
        assert_eq!(cert.constant, 31);
    }

    #[test]
    fn verify_modular_examples() {
        let f = ModularLabeling::new(2, vec![1, 2, 2, 1]).unwrap();
        assert_eq!(verify_p_distance_magic(&c4(), &f).unwrap().constant, 1);
        let f = ModularLabeling::new(3, vec![2, 1, 3, 1]).unwrap();
        assert_eq!(verify_p_distance_magic(&c4(), &f).unwrap().constant, 2);
        let f = ModularLabeling::new(5, vec![1, 2, 4, 3]).unwrap();
        assert_eq!(verify_p_distance_magic(&c4(), &f).unwrap().constant, 0);
    }

    #[test]
    fn reduction_examples() {
        let f = reduce_mod_p(&Labeling::new(vec![1, 3, 2]).unwrap(), 2).unwrap();
        assert_eq!(f.values(), &[1, 1, 2]);
        let f = reduce_mod_p(&Labeling::new(vec![1, 2, 4, 3]).unwrap(), 2).unwrap();
        assert_eq!(f.values(), &[1, 2, 2, 1]);
        let f = reduce_mod_p(&Labeling::new(vec![1, 2, 4, 3]).unwrap(), 9).unwrap();
        assert_eq!(f.values(), &[1, 2, 4, 3]);
        assert_eq!(
            reduce_mod_p(&Labeling::identity(2), 0),
            Err(LabelingError::ZeroModulus)
        );
    }

    #[test]
    fn modulo_regularity_examples() {
        assert_eq!(modulo_regularity(&c4(), 2), Some(0));
        assert_eq!(modulo_regularity(&p3(), 2), None);
        let knm = construct::complete_minus_matching(6).unwrap();
        assert_eq!(modulo_regularity(&knm, 4), Some(0));
        assert_eq!(modulo_regularity(&p3(), 1), Some(0));
    }

    #[test]
    fn shift_examples() {
        let f = ModularLabeling::new(2, vec![1, 2, 2, 1]).unwrap();
        let out = shift_labeling(&c4(), &f, 1).unwrap();
        assert_eq!(out.values, vec![2, 1, 1, 2]);
        assert_eq!(out.constant, 1);
        let relabeled = out.labeling.unwrap();
        assert_eq!(
            verify_p_distance_magic(&c4(), &relabeled).unwrap().constant,
            1
        );

        let f = ModularLabeling::new(3, vec![2, 1, 3, 1]).unwrap();
        let out = shift_labeling(&c4(), &f, 3).unwrap();
        assert_eq!(out.values, vec![2, 1, 3, 1]);
        assert_eq!(out.constant, 2);

        // shifting by 1 with p = 3 on four vertices leaves the multiset
        let out = shift_labeling(&c4(), &f, 1).unwrap();
        assert_eq!(out.values, vec![3, 2, 1, 2]);
        assert_eq!(out.constant, (2 + 2) % 3);
        assert!(out.labeling.is_none());

        let g = p3();
        let f = ModularLabeling::new(2, vec![1, 1, 2]).unwrap();
        assert_eq!(
            shift_labeling(&g, &f, 1),
            Err(LabelingError::NotModuloRegular { p: 2 })
        );
    }

    #[test]
    fn bound_examples() {
        assert_eq!(magic_constant_bound(4).as_f64(), 7.5);
        assert!(magic_constant_bound(4).admits(5));
        assert!(!magic_constant_bound(4).admits(8));
        assert_eq!(magic_constant_bound(3).as_f64(), 4.0);
        assert!(magic_constant_bound(3).admits(3));
        assert_eq!(magic_constant_bound(1).twice, 0);
        assert!(magic_constant_bound(1).admits(0));
    }

    #[test]
    fn isolated_vertices_are_degenerate() {
        let g = Graph::empty(3).unwrap();
        let cert = verify_distance_magic(&g, &Labeling::identity(3)).unwrap();
        assert_eq!(cert.constant, 0);
        assert!(cert.degenerate);
    }
}
