use alloc::vec::Vec;

use super::eigen::eig_sym;
use super::matrix::{adjacency_matrix, Matrix};
use super::{SpectralError, JACOBI_TOL, PINV_RANK_TOL, STOCHASTIC_TOL};
use crate::graph::Graph;

/// Moore–Penrose inverse of a symmetric matrix: eigenvalues with
/// `|λ| > tol * max|λ|` are inverted, the rest dropped.
pub fn moore_penrose(m: &Matrix, tol: f64) -> Result<Matrix, SpectralError> {
    let spec = eig_sym(m, JACOBI_TOL)?;
    let n = m.rows();
    let scale = spec
        .eigenvalues
        .iter()
        .fold(0.0, |acc: f64, x| acc.max(x.abs()));
    let cut = tol * scale;
    let mut out = Matrix::zeros(n, n);
    for (c, &lambda) in spec.eigenvalues.iter().enumerate() {
        if lambda.abs() <= cut || lambda == 0.0 {
            continue;
        }
        let v = spec.eigenvectors.column(c);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += v[i] * v[j] / lambda;
            }
        }
    }
    Ok(out)
}

/// Max-entry defects of the four Penrose identities:
/// `BB⁺B = B`, `B⁺BB⁺ = B⁺`, `(BB⁺)ᵀ = BB⁺`, `(B⁺B)ᵀ = B⁺B`.
pub fn penrose_residuals(b: &Matrix, pinv: &Matrix) -> [f64; 4] {
    let bp = b.mul(pinv);
    let pb = pinv.mul(b);
    [
        bp.mul(b).sub(b).max_abs(),
        pb.mul(pinv).sub(pinv).max_abs(),
        bp.transpose().sub(&bp).max_abs(),
        pb.transpose().sub(&pb).max_abs(),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct PinvReport {
    /// `A A⁺`.
    pub projector: Matrix,
    pub row_sums: Vec<f64>,
    pub col_sums: Vec<f64>,
    /// Every row and column sum is 1 within tolerance.
    pub doubly_stochastic: bool,
}

/// `A A⁺` is doubly stochastic for every distance magic graph. The converse
/// fails, so `true` proves nothing.
pub fn pinv_filter(g: &Graph) -> PinvReport {
    let a = adjacency_matrix(g).to_f64();
    let pinv = moore_penrose(&a, PINV_RANK_TOL).expect("adjacency matrices are symmetric");
    let projector = a.mul(&pinv);
    let row_sums = projector.row_sums();
    let col_sums = projector.col_sums();
    let doubly_stochastic = row_sums
        .iter()
        .chain(&col_sums)
        .all(|s| (s - 1.0).abs() <= STOCHASTIC_TOL);
    PinvReport {
        projector,
        row_sums,
        col_sums,
        doubly_stochastic,
    }
}
