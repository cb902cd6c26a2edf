//! Matrix characterizations of distance magic labelings, evaluated exactly.

use alloc::vec::Vec;

use super::charpoly::is_singular;
use super::matrix::{matrices, IntMatrix};
use super::SpectralError;
use crate::graph::Graph;
use crate::labeling::{verify_distance_magic, Labeling, LabelingError};
use crate::structural::{FilterVerdict, RejectWitness};

fn check_length(g: &Graph, f: &Labeling) -> Result<(), SpectralError> {
    if f.len() != g.order() {
        return Err(SpectralError::Labeling(LabelingError::LengthMismatch {
            expected: g.order(),
            found: f.len(),
        }));
    }
    Ok(())
}

/// Lower-triangular all-ones `T`, so `T𝟙 = (1, 2, …, n)ᵀ`.
pub fn cumulative_matrix(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| (i >= j) as i64)
}

/// Permutation matrix `P` with `PT𝟙 = x`.
pub fn labeling_permutation(f: &Labeling) -> IntMatrix {
    let n = f.len();
    IntMatrix::from_fn(n, n, |i, j| (f.values()[i] == j + 1) as i64)
}

/// `Some(k)` iff `APT𝟙 = k𝟙`, i.e. `f` is distance magic with constant `k`.
pub fn apt_check(g: &Graph, f: &Labeling) -> Result<Option<u64>, SpectralError> {
    check_length(g, f)?;
    let n = g.order();
    let b = matrices(g);
    let apt = b
        .adjacency
        .mul(&labeling_permutation(f))
        .mul(&cumulative_matrix(n));
    let image = apt.mul_vec(&b.ones_vector);
    let k = image[0];
    Ok(image.iter().all(|&x| x == k).then_some(k as u64))
}

/// `(L² + A²)x = r²x` for a connected `r`-regular graph with `r` even.
pub fn l2a2_check(g: &Graph, f: &Labeling) -> Result<bool, SpectralError> {
    check_length(g, f)?;
    let r = even_regular_degree(g)?;
    if !g.is_connected() {
        return Err(SpectralError::NotConnected);
    }
    let b = matrices(g);
    let m = b
        .laplacian
        .mul(&b.laplacian)
        .add(&b.adjacency.mul(&b.adjacency));
    let x: Vec<i64> = f.values().iter().map(|&v| v as i64).collect();
    let r2 = (r * r) as i64;
    Ok(m.mul_vec(&x)
        .iter()
        .zip(&x)
        .all(|(lhs, xi)| *lhs == r2 * xi))
}

fn even_regular_degree(g: &Graph) -> Result<usize, SpectralError> {
    match g.regular_degree() {
        Some(r) if r % 2 == 0 => Ok(r),
        _ => Err(SpectralError::NotEvenRegular),
    }
}

/// A 0-eigenvector built from a distance magic labeling of an even-regular
/// graph, stored doubled so entries stay integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroWitness {
    /// `2x - (n + 1)𝟙`.
    pub doubled: Vec<i64>,
}

impl ZeroWitness {
    pub fn values(&self) -> Vec<f64> {
        self.doubled.iter().map(|&w| w as f64 / 2.0).collect()
    }
}

/// `w = x - (n+1)/2 · 𝟙`, checked to satisfy `Aw = 0` and to be a
/// rearrangement of `(1-n)/2, (3-n)/2, …, (n-1)/2`.
pub fn even_regular_zero_witness(g: &Graph, f: &Labeling) -> Result<ZeroWitness, SpectralError> {
    check_length(g, f)?;
    even_regular_degree(g)?;
    verify_distance_magic(g, f).map_err(SpectralError::Labeling)?;
    let n = g.order() as i64;
    let doubled: Vec<i64> = f.values().iter().map(|&v| 2 * v as i64 - (n + 1)).collect();
    let a = matrices(g).adjacency;
    if a.mul_vec(&doubled).iter().any(|&x| x != 0) {
        return Err(SpectralError::WitnessFailed("Aw != 0"));
    }
    let mut sorted = doubled.clone();
    sorted.sort_unstable();
    if !sorted
        .iter()
        .enumerate()
        .all(|(i, &w)| w == 2 * i as i64 + 1 - n)
    {
        return Err(SpectralError::WitnessFailed(
            "entries are not an arithmetic sequence",
        ));
    }
    Ok(ZeroWitness { doubled })
}

/// Even-regular graphs with 0 outside the spectrum are not distance magic.
pub fn zero_eigenvalue_filter(g: &Graph) -> FilterVerdict {
    match g.regular_degree() {
        Some(r) if r % 2 == 0 && !is_singular(g) => {
            FilterVerdict::Reject(RejectWitness::NonsingularEvenRegular { degree: r })
        }
        _ => FilterVerdict::Pass,
    }
}
