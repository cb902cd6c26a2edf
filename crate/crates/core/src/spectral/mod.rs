//! Spectral tools: exact characteristic polynomials, a Jacobi eigensolver,
//! main angles, the Moore–Penrose filter and matrix characterizations of
//! distance magic labelings.
//!
//! Singularity and integrality are decided exactly. Floating point is only
//! used for eigenvectors, main angles and pseudoinverses.

mod charpoly;
mod checks;
mod cone;
mod eigen;
mod matrix;
mod pinv;
mod poly;

use thiserror::Error;

use crate::labeling::LabelingError;

pub use charpoly::{char_poly, is_integral, is_singular};
pub use checks::{
    apt_check, cumulative_matrix, even_regular_zero_witness, l2a2_check, labeling_permutation,
    zero_eigenvalue_filter, ZeroWitness,
};
pub use cone::{cone_charpoly, knm_cone_charpoly};
pub use eigen::{
    adjacency_spectrum, eig_sym, main_angles, main_angles_of, EigenGroup, MainAngle,
    SpectralDecomposition,
};
pub use matrix::{adjacency_matrix, matrices, DenseMatrix, IntMatrix, Matrix, MatrixBundle};
pub use pinv::{moore_penrose, penrose_residuals, pinv_filter, PinvReport};
pub use poly::{divide_by_root_f64, is_perfect_square, mul_f64, IntPoly};

/// Relative off-diagonal threshold for the Jacobi sweeps.
pub const JACOBI_TOL: f64 = 1e-12;
/// Eigenvalues closer than this are one eigenvalue.
pub const GROUPING_TOL: f64 = 1e-7;
/// Relative rank cut for the pseudoinverse.
pub const PINV_RANK_TOL: f64 = 1e-9;
/// Row and column sums of `AA⁺` must be within this of 1.
pub const STOCHASTIC_TOL: f64 = 1e-7;
/// Accepted asymmetry of an input to [`eig_sym`].
pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi iteration did not converge")]
    NoConvergence,
    #[error("graph is not regular of even degree")]
    NotEvenRegular,
    #[error("graph is not connected")]
    NotConnected,
    #[error("closed form needs an even order of at least 4, got {0}")]
    BadConeOrder(usize),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("zero-eigenvector witness failed: {0}")]
    WitnessFailed(&'static str),
}
