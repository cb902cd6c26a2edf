//! Small dense matrices, exact (`i64`) and floating point.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::graph::Graph;

/// Row-major `rows x cols` matrix over `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type Matrix = DenseMatrix<f64>;
pub type IntMatrix = DenseMatrix<i64>;

impl<T: Copy + Default> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::default(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn map<U: Copy + Default>(&self, f: impl Fn(T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

macro_rules! ring_ops {
    ($t:ty, $zero:expr, $one:expr) => {
        impl DenseMatrix<$t> {
            pub fn identity(n: usize) -> Self {
                DenseMatrix::from_fn(n, n, |i, j| if i == j { $one } else { $zero })
            }

            pub fn mul(&self, other: &Self) -> Self {
                assert_eq!(self.cols, other.rows, "dimension mismatch");
                let mut out = DenseMatrix::zeros(self.rows, other.cols);
                for i in 0..self.rows {
                    for l in 0..self.cols {
                        let a = self[(i, l)];
                        if a == $zero {
                            continue;
                        }
                        for j in 0..other.cols {
                            out[(i, j)] += a * other[(l, j)];
                        }
                    }
                }
                out
            }

            pub fn mul_vec(&self, v: &[$t]) -> Vec<$t> {
                assert_eq!(self.cols, v.len(), "dimension mismatch");
                (0..self.rows)
                    .map(|i| self.row(i).iter().zip(v).map(|(a, b)| *a * *b).sum())
                    .collect()
            }

            pub fn add(&self, other: &Self) -> Self {
                assert_eq!((self.rows, self.cols), (other.rows, other.cols));
                DenseMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    data: self
                        .data
                        .iter()
                        .zip(&other.data)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                assert_eq!((self.rows, self.cols), (other.rows, other.cols));
                DenseMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    data: self
                        .data
                        .iter()
                        .zip(&other.data)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }

            pub fn scale(&self, s: $t) -> Self {
                self.map(|x| x * s)
            }

            pub fn trace(&self) -> $t {
                (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
            }

            pub fn row_sums(&self) -> Vec<$t> {
                (0..self.rows)
                    .map(|i| self.row(i).iter().copied().sum())
                    .collect()
            }

            pub fn col_sums(&self) -> Vec<$t> {
                (0..self.cols)
                    .map(|j| (0..self.rows).map(|i| self[(i, j)]).sum())
                    .collect()
            }
        }
    };
}

ring_ops!(i64, 0, 1);
ring_ops!(f64, 0.0, 1.0);

impl Matrix {
    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol))
    }
}

impl IntMatrix {
    pub fn to_f64(&self) -> Matrix {
        self.map(|x| x as f64)
    }
}

/// The exact matrices attached to a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixBundle {
    pub adjacency: IntMatrix,
    pub degree: IntMatrix,
    /// `L = D - A`.
    pub laplacian: IntMatrix,
    pub ones: IntMatrix,
    pub ones_vector: Vec<i64>,
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.order();
    IntMatrix::from_fn(n, n, |i, j| g.adj0(i, j) as i64)
}

pub fn matrices(g: &Graph) -> MatrixBundle {
    let n = g.order();
    let adjacency = adjacency_matrix(g);
    let degree = IntMatrix::from_fn(n, n, |i, j| if i == j { g.deg0(i) as i64 } else { 0 });
    let laplacian = degree.sub(&adjacency);
    debug_assert!(laplacian.row_sums().iter().all(|&s| s == 0));
    MatrixBundle {
        adjacency,
        degree,
        laplacian,
        ones: IntMatrix::from_fn(n, n, |_, _| 1),
        ones_vector: vec![1; n],
    }
}
