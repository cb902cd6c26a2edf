use alloc::vec::Vec;
use core::ops::Range;

use super::matrix::{adjacency_matrix, Matrix};
use super::{SpectralError, GROUPING_TOL, JACOBI_TOL, SYMMETRY_TOL};
use crate::graph::Graph;

const MAX_SWEEPS: usize = 100;

/// A distinct eigenvalue and the eigenvector columns spanning its eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenGroup {
    pub value: f64,
    pub columns: Range<usize>,
}

impl EigenGroup {
    pub fn multiplicity(&self) -> usize {
        self.columns.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    /// Non-increasing.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal columns; column `j` belongs to `eigenvalues[j]`.
    pub eigenvectors: Matrix,
    /// Distinct values, largest first.
    pub groups: Vec<EigenGroup>,
    /// `max |Mv - λv|` over all pairs.
    pub residual: f64,
}

impl SpectralDecomposition {
    pub fn distinct(&self) -> Vec<(f64, usize)> {
        self.groups
            .iter()
            .map(|g| (g.value, g.multiplicity()))
            .collect()
    }

    /// `max |VᵀV - I|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let v = &self.eigenvectors;
        v.transpose()
            .mul(v)
            .sub(&Matrix::identity(v.cols()))
            .max_abs()
    }
}

/// Cyclic Jacobi for a symmetric matrix; stops once the off-diagonal
/// Frobenius norm is at most `tol * ‖M‖`.
pub fn eig_sym(m: &Matrix, tol: f64) -> Result<SpectralDecomposition, SpectralError> {
    if !m.is_symmetric(SYMMETRY_TOL) {
        return Err(SpectralError::NotSymmetric);
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut v = Matrix::identity(n);
    let target = tol * m.frobenius_norm();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > target {
        return Err(SpectralError::NoConvergence);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)]).collect();
    let eigenvectors = Matrix::from_fn(n, n, |r, c| v[(r, order[c])]);

    let mut groups: Vec<EigenGroup> = Vec::new();
    let mut start = 0;
    for j in 1..=n {
        if j == n || eigenvalues[j - 1] - eigenvalues[j] > GROUPING_TOL {
            let slice = &eigenvalues[start..j];
            groups.push(EigenGroup {
                value: slice.iter().sum::<f64>() / slice.len() as f64,
                columns: start..j,
            });
            start = j;
        }
    }

    let mv = m.mul(&eigenvectors);
    let residual = (0..n)
        .flat_map(|c| (0..n).map(move |r| (r, c)))
        .map(|(r, c)| (mv[(r, c)] - eigenvalues[c] * eigenvectors[(r, c)]).abs())
        .fold(0.0, f64::max);

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        groups,
        residual,
    })
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    libm::sqrt(s)
}

fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Adjacency spectrum of `g`.
pub fn adjacency_spectrum(g: &Graph) -> SpectralDecomposition {
    eig_sym(&adjacency_matrix(g).to_f64(), JACOBI_TOL).expect("adjacency matrices are symmetric")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MainAngle {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    /// `‖P 𝟙‖ / √n`, `P` the projection onto the eigenspace.
    pub beta: f64,
}

/// Main angles of `g`, one per distinct eigenvalue, largest eigenvalue first.
pub fn main_angles(g: &Graph) -> Vec<MainAngle> {
    main_angles_of(&adjacency_spectrum(g))
}

pub fn main_angles_of(spec: &SpectralDecomposition) -> Vec<MainAngle> {
    let v = &spec.eigenvectors;
    let n = v.rows();
    spec.groups
        .iter()
        .map(|group| {
            let mut projection = alloc::vec![0.0; n];
            for c in group.columns.clone() {
                let dot: f64 = (0..n).map(|r| v[(r, c)]).sum();
                for (r, x) in projection.iter_mut().enumerate() {
                    *x += dot * v[(r, c)];
                }
            }
            let norm = libm::sqrt(projection.iter().map(|x| x * x).sum());
            MainAngle {
                eigenvalue: group.value,
                multiplicity: group.multiplicity(),
                beta: norm / libm::sqrt(n as f64),
            }
        })
        .collect()
}
